#include "jumploci/dgla.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <set>

namespace jumploci {

namespace {

Vec vec_add(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return out;
}

Vec vec_scale(const Rational& c, const Vec& a) {
    Vec out(a);
    for (auto& x : out)
        x *= c;
    return out;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

GradedSpace::GradedSpace(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size())
        throw std::invalid_argument("graded space: one degree per basis label required");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
        throw std::invalid_argument("graded space: duplicate basis label");
}

std::optional<std::size_t> GradedSpace::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::vector<std::size_t> GradedSpace::indices_in_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i] == d)
            out.push_back(i);
    return out;
}

Vec GradedSpace::basis_vec(std::size_t i) const {
    Vec v(dim());
    v.at(i) = 1;
    return v;
}

Dgla::Dgla(GradedSpace space, std::vector<Vec> differential, std::vector<std::vector<Vec>> bracket)
    : space_(std::move(space)), diff_(std::move(differential)), bracket_(std::move(bracket)) {
    const std::size_t n = space_.dim();
    if (diff_.size() != n || bracket_.size() != n)
        throw std::invalid_argument("dgla structure constant shape mismatch");
    for (const auto& v : diff_)
        if (v.size() != n)
            throw std::invalid_argument("dgla differential entry length mismatch");
    for (const auto& row : bracket_) {
        if (row.size() != n)
            throw std::invalid_argument("dgla bracket table shape mismatch");
        for (const auto& v : row)
            if (v.size() != n)
                throw std::invalid_argument("dgla bracket entry length mismatch");
    }
}

Vec Dgla::d(const Vec& v) const {
    Vec out = space_.zero();
    for (std::size_t j = 0; j < dim(); ++j) {
        if (v[j] == 0)
            continue;
        for (std::size_t i = 0; i < dim(); ++i)
            if (diff_[j][i] != 0)
                out[i] += v[j] * diff_[j][i];
    }
    return out;
}

Vec Dgla::bracket(const Vec& u, const Vec& v) const {
    Vec out = space_.zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (v[j] == 0)
                continue;
            Rational c = u[i] * v[j];
            for (std::size_t l = 0; l < dim(); ++l)
                if (bracket_[i][j][l] != 0)
                    out[l] += c * bracket_[i][j][l];
        }
    }
    return out;
}

std::vector<Violation> validate_dgla(const Dgla& g) {
    std::vector<Violation> report;
    const GradedSpace& sp = g.space();
    const std::size_t n = sp.dim();

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            if (g.basis_differential(j)[i] != 0 && sp.degree(i) != sp.degree(j) + 1)
                report.push_back({"differential-degree", {sp.name(j)},
                                  "d is not homogeneous of degree +1"});
        if (!vec_is_zero(g.d(g.basis_differential(j))))
            report.push_back({"d-squared", {sp.name(j)}, "d^2 != 0"});
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& br = g.basis_bracket(i, j);
            for (std::size_t l = 0; l < n; ++l)
                if (br[l] != 0 && sp.degree(l) != sp.degree(i) + sp.degree(j))
                    report.push_back({"bracket-degree", {sp.name(i), sp.name(j)},
                                      "bracket is not degree-additive"});
            Vec sym = vec_add(br, vec_scale(sign_pow(1LL * sp.degree(i) * sp.degree(j)),
                                            g.basis_bracket(j, i)));
            if (!vec_is_zero(sym))
                report.push_back({"antisymmetry", {sp.name(i), sp.name(j)},
                                  "[x,y] != -(-1)^{pq}[y,x]"});
            Vec leib = vec_sub(g.d(br), vec_add(g.bracket(g.basis_differential(i), sp.basis_vec(j)),
                                                vec_scale(sign_pow(sp.degree(i)),
                                                          g.bracket(sp.basis_vec(i),
                                                                    g.basis_differential(j)))));
            if (!vec_is_zero(leib))
                report.push_back({"leibniz", {sp.name(i), sp.name(j)},
                                  "d[x,y] != [dx,y] + (-1)^p [x,dy]"});
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Vec lhs = g.bracket(sp.basis_vec(i), g.basis_bracket(j, l));
                Vec rhs = vec_add(g.bracket(g.basis_bracket(i, j), sp.basis_vec(l)),
                                  vec_scale(sign_pow(1LL * sp.degree(i) * sp.degree(j)),
                                            g.bracket(sp.basis_vec(j), g.basis_bracket(i, l))));
                if (lhs != rhs)
                    report.push_back({"jacobi", {sp.name(i), sp.name(j), sp.name(l)},
                                      "[x,[y,z]] != [[x,y],z] + (-1)^{pq}[y,[x,z]]"});
            }

    std::sort(report.begin(), report.end());
    return report;
}

Representation::Representation(Dgla dgla, GradedSpace space, std::vector<Vec> differential,
                               std::vector<std::vector<Vec>> action)
    : dgla_(std::move(dgla)), space_(std::move(space)), diff_(std::move(differential)),
      action_(std::move(action)) {
    const std::size_t n = space_.dim();
    if (diff_.size() != n)
        throw std::invalid_argument("representation differential shape mismatch");
    for (const auto& v : diff_)
        if (v.size() != n)
            throw std::invalid_argument("representation differential entry length mismatch");
    if (action_.size() != dgla_.dim())
        throw std::invalid_argument("one action row per Lie basis element required");
    for (const auto& row : action_) {
        if (row.size() != n)
            throw std::invalid_argument("representation action shape mismatch");
        for (const auto& v : row)
            if (v.size() != n)
                throw std::invalid_argument("representation action entry length mismatch");
    }
}

Representation Representation::trivial(const Dgla& g) {
    GradedSpace one({"1"}, {0});
    return Representation(g, one, {Vec{0}},
                          std::vector<std::vector<Vec>>(g.dim(), {Vec{0}}));
}

bool Representation::is_trivial_rank_one() const {
    if (dim() != 1 || space_.degree(0) != 0 || !vec_is_zero(diff_[0]))
        return false;
    for (const auto& row : action_)
        if (!vec_is_zero(row[0]))
            return false;
    return true;
}

Vec Representation::d(const Vec& v) const {
    Vec out = space_.zero();
    for (std::size_t j = 0; j < dim(); ++j) {
        if (v[j] == 0)
            continue;
        for (std::size_t i = 0; i < dim(); ++i)
            if (diff_[j][i] != 0)
                out[i] += v[j] * diff_[j][i];
    }
    return out;
}

Vec Representation::act(std::size_t lie_index, const Vec& v) const {
    Vec out = space_.zero();
    for (std::size_t s = 0; s < dim(); ++s) {
        if (v[s] == 0)
            continue;
        const Vec& img = action_[lie_index][s];
        for (std::size_t u = 0; u < dim(); ++u)
            if (img[u] != 0)
                out[u] += v[s] * img[u];
    }
    return out;
}

Vec Representation::act(const Vec& lie, const Vec& v) const {
    Vec out = space_.zero();
    for (std::size_t a = 0; a < dgla_.dim(); ++a)
        if (lie[a] != 0)
            out = vec_add(out, vec_scale(lie[a], act(a, v)));
    return out;
}

std::vector<Violation> validate_representation(const Representation& rep) {
    std::vector<Violation> report;
    const GradedSpace& gs = rep.dgla().space();
    const GradedSpace& vs = rep.space();

    for (std::size_t s = 0; s < vs.dim(); ++s) {
        for (std::size_t u = 0; u < vs.dim(); ++u)
            if (rep.basis_differential(s)[u] != 0 && vs.degree(u) != vs.degree(s) + 1)
                report.push_back({"module-differential-degree", {vs.name(s)},
                                  "d_V is not homogeneous of degree +1"});
        if (!vec_is_zero(rep.d(rep.basis_differential(s))))
            report.push_back({"module-d-squared", {vs.name(s)}, "d_V^2 != 0"});
    }

    for (std::size_t a = 0; a < gs.dim(); ++a)
        for (std::size_t s = 0; s < vs.dim(); ++s) {
            const Vec& img = rep.basis_action(a, s);
            for (std::size_t u = 0; u < vs.dim(); ++u)
                if (img[u] != 0 && vs.degree(u) != gs.degree(a) + vs.degree(s))
                    report.push_back({"action-degree", {gs.name(a), vs.name(s)},
                                      "action is not degree-additive"});
            // chain map: d_V(x v) = (dx) v + (-1)^p x (d_V v)
            Vec lhs = rep.d(img);
            Vec rhs = vec_add(rep.act(rep.dgla().basis_differential(a), vs.basis_vec(s)),
                              vec_scale(sign_pow(gs.degree(a)),
                                        rep.act(a, rep.basis_differential(s))));
            if (lhs != rhs)
                report.push_back({"chain-map", {gs.name(a), vs.name(s)},
                                  "d_V(xv) != (dx)v + (-1)^p x(d_V v)"});
        }

    for (std::size_t a = 0; a < gs.dim(); ++a)
        for (std::size_t b = 0; b < gs.dim(); ++b)
            for (std::size_t s = 0; s < vs.dim(); ++s) {
                Vec lhs = rep.act(rep.dgla().basis_bracket(a, b), vs.basis_vec(s));
                Vec rhs = vec_sub(rep.act(a, rep.act(b, vs.basis_vec(s))),
                                  vec_scale(sign_pow(1LL * gs.degree(a) * gs.degree(b)),
                                            rep.act(b, rep.act(a, vs.basis_vec(s)))));
                if (lhs != rhs)
                    report.push_back({"bracket-compatibility", {gs.name(a), gs.name(b), vs.name(s)},
                                      "[x,y]v != x(yv) - (-1)^{pq} y(xv)"});
            }

    std::sort(report.begin(), report.end());
    return report;
}

Representation tensor_rep(const Representation& v, const Representation& w) {
    if (!(v.dgla() == w.dgla()))
        throw MathError("tensor_rep: representations are over different dglas");

    const GradedSpace& vs = v.space();
    const GradedSpace& ws = w.space();
    const std::size_t nv = vs.dim(), nw = ws.dim();

    std::vector<std::string> names;
    std::vector<int> degrees;
    names.reserve(nv * nw);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nw; ++j) {
            names.push_back(vs.name(i) + "(x)" + ws.name(j));
            degrees.push_back(vs.degree(i) + ws.degree(j));
        }
    GradedSpace ts(std::move(names), std::move(degrees));

    auto pair_index = [nw](std::size_t i, std::size_t j) { return i * nw + j; };

    std::vector<Vec> diff(ts.dim(), ts.zero());
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nw; ++j) {
            Vec& out = diff[pair_index(i, j)];
            const Vec& dv = v.basis_differential(i);
            for (std::size_t u = 0; u < nv; ++u)
                if (dv[u] != 0)
                    out[pair_index(u, j)] += dv[u];
            const Vec& dw = w.basis_differential(j);
            Rational s = sign_pow(vs.degree(i));
            for (std::size_t u = 0; u < nw; ++u)
                if (dw[u] != 0)
                    out[pair_index(i, u)] += s * dw[u];
        }

    const std::size_t ng = v.dgla().dim();
    std::vector<std::vector<Vec>> action(ng, std::vector<Vec>(ts.dim(), ts.zero()));
    for (std::size_t a = 0; a < ng; ++a) {
        int p = v.dgla().space().degree(a);
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t j = 0; j < nw; ++j) {
                Vec& out = action[a][pair_index(i, j)];
                const Vec& xv = v.basis_action(a, i);
                for (std::size_t u = 0; u < nv; ++u)
                    if (xv[u] != 0)
                        out[pair_index(u, j)] += xv[u];
                const Vec& xw = w.basis_action(a, j);
                Rational s = sign_pow(1LL * p * vs.degree(i));
                for (std::size_t u = 0; u < nw; ++u)
                    if (xw[u] != 0)
                        out[pair_index(i, u)] += s * xw[u];
            }
    }

    return Representation(v.dgla(), std::move(ts), std::move(diff), std::move(action));
}

Representation adjoint_rep(const Dgla& g) {
    std::vector<Vec> diff(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j)
        diff[j] = g.basis_differential(j);
    std::vector<std::vector<Vec>> action(g.dim(), std::vector<Vec>(g.dim()));
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t s = 0; s < g.dim(); ++s)
            action[a][s] = g.basis_bracket(a, s);
    return Representation(g, g.space(), std::move(diff), std::move(action));
}

std::vector<Violation> validate_rep_morphism(const RepMorphism& f) {
    std::vector<Violation> report;
    const Representation& src = *f.source;
    const Representation& tgt = *f.target;
    if (!(src.dgla() == tgt.dgla())) {
        report.push_back({"dgla-mismatch", {}, "source and target are over different dglas"});
        return report;
    }
    auto apply = [&](const Vec& v) {
        Vec out = tgt.space().zero();
        for (std::size_t i = 0; i < tgt.dim(); ++i)
            for (std::size_t j = 0; j < src.dim(); ++j)
                if (f.matrix.at(i, j) != 0 && v[j] != 0)
                    out[i] += f.matrix.at(i, j) * v[j];
        return out;
    };
    for (std::size_t s = 0; s < src.dim(); ++s) {
        if (apply(src.basis_differential(s)) != tgt.d(apply(src.space().basis_vec(s))))
            report.push_back({"morphism-chain-map", {src.space().name(s)},
                              "f d_V != d_W f"});
        for (std::size_t a = 0; a < src.dgla().dim(); ++a)
            if (apply(src.basis_action(a, s)) != tgt.act(a, apply(src.space().basis_vec(s))))
                report.push_back({"morphism-equivariance",
                                  {src.dgla().space().name(a), src.space().name(s)},
                                  "f(xv) != x f(v)"});
    }
    std::sort(report.begin(), report.end());
    return report;
}

} // namespace jumploci
