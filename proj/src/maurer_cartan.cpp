#include "jumploci/maurer_cartan.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <map>

namespace jumploci {

namespace {

int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

void check_shapes(const Dgla& g, const DgArtinianAlgebra& ring, const TensorElement& t) {
    if (t.coeff.size() != g.dim())
        throw std::invalid_argument("tensor element needs one ring coefficient per Lie basis");
    for (const AlgElement& c : t.coeff)
        if (c.size() != ring.dim())
            throw std::invalid_argument("tensor coefficient not over the test ring");
}

// homogeneous of the given total degree, with all coordinates in m_A
void check_candidate(const Dgla& g, const DgArtinianAlgebra& ring, const TensorElement& t,
                     int total_degree, const char* what) {
    check_shapes(g, ring, t);
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t j = 0; j < ring.dim(); ++j) {
            if (t.coeff[a][j] == 0)
                continue;
            if (j == 0)
                throw MathError(std::string(what) + ": coordinates must lie in the maximal ideal",
                                g.space().name(a));
            if (g.space().degree(a) + ring.degree(j) != total_degree)
                throw MathError(std::string(what) + ": term is not of total degree " +
                                    std::to_string(total_degree),
                                g.space().name(a) + " (x) " + ring.basis_labels()[j]);
        }
}

} // namespace

TensorElement TensorElement::zero(const Dgla& g, const DgArtinianAlgebra& ring) {
    return TensorElement{std::vector<AlgElement>(g.dim(), ring.zero())};
}

bool tensor_is_zero(const DgArtinianAlgebra& ring, const TensorElement& t) {
    return std::all_of(t.coeff.begin(), t.coeff.end(),
                       [&](const AlgElement& c) { return ring.is_zero(c); });
}

TensorElement tensor_add(const DgArtinianAlgebra& ring, const TensorElement& a,
                         const TensorElement& b) {
    TensorElement out = a;
    for (std::size_t i = 0; i < out.coeff.size(); ++i)
        out.coeff[i] = ring.add(out.coeff[i], b.coeff[i]);
    return out;
}

TensorElement tensor_scale(const DgArtinianAlgebra& ring, const Rational& c,
                           const TensorElement& t) {
    TensorElement out = t;
    for (auto& e : out.coeff)
        e = ring.scale(c, e);
    return out;
}

TensorElement tensor_bracket(const Dgla& g, const DgArtinianAlgebra& ring,
                             const TensorElement& a, const TensorElement& b) {
    TensorElement out = TensorElement::zero(g, ring);
    for (std::size_t xa = 0; xa < g.dim(); ++xa)
        for (std::size_t i = 0; i < ring.dim(); ++i) {
            if (a.coeff[xa][i] == 0)
                continue;
            for (std::size_t xb = 0; xb < g.dim(); ++xb) {
                const Vec& br = g.basis_bracket(xa, xb);
                bool br_zero = std::all_of(br.begin(), br.end(),
                                           [](const Rational& q) { return q == 0; });
                if (br_zero)
                    continue;
                for (std::size_t j = 0; j < ring.dim(); ++j) {
                    if (b.coeff[xb][j] == 0)
                        continue;
                    Rational c = a.coeff[xa][i] * b.coeff[xb][j] *
                                 sign_pow(1LL * ring.degree(i) * g.space().degree(xb));
                    AlgElement rs = ring.mul(ring.basis_element(i), ring.basis_element(j));
                    for (std::size_t l = 0; l < g.dim(); ++l) {
                        if (br[l] == 0)
                            continue;
                        for (std::size_t q = 0; q < ring.dim(); ++q)
                            if (rs[q] != 0)
                                out.coeff[l][q] += c * br[l] * rs[q];
                    }
                }
            }
        }
    return out;
}

TensorElement tensor_d(const Dgla& g, const DgArtinianAlgebra& ring, const TensorElement& t) {
    TensorElement out = TensorElement::zero(g, ring);
    for (std::size_t a = 0; a < g.dim(); ++a) {
        const Vec& da = g.basis_differential(a);
        for (std::size_t l = 0; l < g.dim(); ++l)
            if (da[l] != 0)
                for (std::size_t j = 0; j < ring.dim(); ++j)
                    if (t.coeff[a][j] != 0)
                        out.coeff[l][j] += da[l] * t.coeff[a][j];
        AlgElement dr = ring.d(t.coeff[a]);
        if (!ring.is_zero(dr)) {
            Rational s = sign_pow(g.space().degree(a));
            for (std::size_t j = 0; j < ring.dim(); ++j)
                out.coeff[a][j] += s * dr[j];
        }
    }
    return out;
}

std::string tensor_to_string(const Dgla& g, const DgArtinianAlgebra& ring,
                             const TensorElement& t) {
    std::string s;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        if (ring.is_zero(t.coeff[a]))
            continue;
        if (!s.empty())
            s += " + ";
        s += g.space().name(a) + " (x) (" + ring.element_to_string(t.coeff[a]) + ")";
    }
    return s.empty() ? "0" : s;
}

MCCandidate::MCCandidate(Dgla g, DgArtinianAlgebra r, TensorElement omega)
    : dgla(std::move(g)), ring(std::move(r)), element(std::move(omega)) {
    check_candidate(dgla, ring, element, 1, "Maurer-Cartan candidate");
}

GaugeElement::GaugeElement(Dgla g, DgArtinianAlgebra r, TensorElement u)
    : dgla(std::move(g)), ring(std::move(r)), element(std::move(u)) {
    check_candidate(dgla, ring, element, 0, "gauge element");
}

TensorElement mc_defect(const MCCandidate& candidate) {
    const Dgla& g = candidate.dgla;
    const DgArtinianAlgebra& ring = candidate.ring;
    TensorElement defect = tensor_d(g, ring, candidate.element);
    TensorElement half_bracket = tensor_scale(
        ring, Rational(1, 2), tensor_bracket(g, ring, candidate.element, candidate.element));
    return tensor_add(ring, defect, half_bracket);
}

MCCandidate gauge(const GaugeElement& u, const MCCandidate& omega) {
    if (!(u.dgla == omega.dgla) || !(u.ring == omega.ring))
        throw std::invalid_argument("gauge: element and candidate live over different data");
    const Dgla& g = omega.dgla;
    const DgArtinianAlgebra& ring = omega.ring;

    TensorElement defect = mc_defect(omega);
    if (!tensor_is_zero(ring, defect))
        throw MathError("gauge: input is not Maurer-Cartan",
                        tensor_to_string(g, ring, defect));

    // exp(ad_u)(omega): the series terminates by nilpotency of m_A
    TensorElement result = omega.element;
    TensorElement power = omega.element;
    Rational factorial = 1;
    for (std::size_t n = 1; n <= ring.dim() + 1; ++n) {
        power = tensor_bracket(g, ring, u.element, power);
        if (tensor_is_zero(ring, power))
            break;
        factorial *= Rational(static_cast<long>(n));
        result = tensor_add(ring, result, tensor_scale(ring, Rational(1) / factorial, power));
    }

    // - sum_{n>=0} ad_u^n/(n+1)! (du)
    TensorElement term = tensor_d(g, ring, u.element);
    Rational factorial_np1 = 1;
    for (std::size_t n = 0; n <= ring.dim() + 1 && !tensor_is_zero(ring, term); ++n) {
        factorial_np1 *= Rational(static_cast<long>(n + 1));
        result =
            tensor_add(ring, result, tensor_scale(ring, Rational(-1) / factorial_np1, term));
        term = tensor_bracket(g, ring, u.element, term);
    }

    return MCCandidate(g, ring, std::move(result));
}

MCCandidate push_candidate(const AlgebraMorphism& f, const MCCandidate& omega) {
    if (!omega.ring.is_classical())
        throw MathError("push_candidate expects a classical test ring");
    if (!(omega.ring.to_classical() == f.source()))
        throw std::invalid_argument("push_candidate: candidate not over the morphism source");
    TensorElement pushed;
    pushed.coeff.reserve(omega.dgla.dim());
    for (const AlgElement& c : omega.element.coeff)
        pushed.coeff.push_back(f.apply(c));
    return MCCandidate(omega.dgla, DgArtinianAlgebra::from_classical(f.target()),
                       std::move(pushed));
}

AomotoComplex::AomotoComplex(Representation module, MCCandidate omega)
    : module_(std::move(module)), omega_(std::move(omega)) {
    if (!(module_.dgla() == omega_.dgla))
        throw std::invalid_argument("aomoto: module and candidate over different dglas");
    const DgArtinianAlgebra& ring = omega_.ring;
    const std::size_t nv = module_.dim();

    entries_.assign(nv, std::vector<AlgElement>(nv, ring.zero()));
    for (std::size_t s = 0; s < nv; ++s) {
        for (std::size_t u = 0; u < nv; ++u) {
            const Rational& tv = module_.basis_differential(s)[u];
            if (tv != 0)
                entries_[u][s] = ring.add(entries_[u][s], ring.scale(tv, ring.unit()));
        }
        for (std::size_t a = 0; a < module_.dgla().dim(); ++a) {
            if (ring.is_zero(omega_.element.coeff[a]))
                continue;
            for (std::size_t u = 0; u < nv; ++u) {
                const Rational& p = module_.basis_action(a, s)[u];
                if (p != 0)
                    entries_[u][s] =
                        ring.add(entries_[u][s], ring.scale(p, omega_.element.coeff[a]));
            }
        }
    }
}

const AlgElement& AomotoComplex::generator_entry(std::size_t u, std::size_t s) const {
    return entries_[u][s];
}

bool AomotoComplex::differential_squares_to_zero() const {
    const DgArtinianAlgebra& ring = omega_.ring;
    const std::size_t nv = module_.dim();

    std::vector<int> ring_degrees_present;
    for (std::size_t j = 0; j < ring.dim(); ++j)
        if (std::find(ring_degrees_present.begin(), ring_degrees_present.end(), ring.degree(j)) ==
            ring_degrees_present.end())
            ring_degrees_present.push_back(ring.degree(j));

    for (std::size_t s = 0; s < nv; ++s) {
        std::vector<AlgElement> acc(nv, ring.zero());
        for (std::size_t u = 0; u < nv; ++u) {
            if (ring.is_zero(entries_[u][s]))
                continue;
            acc[u] = ring.add(acc[u], ring.d(entries_[u][s]));
            for (int q : ring_degrees_present) {
                AlgElement comp = ring.component(entries_[u][s], q);
                if (ring.is_zero(comp))
                    continue;
                Rational sign = sign_pow(q);
                for (std::size_t w = 0; w < nv; ++w) {
                    if (ring.is_zero(entries_[w][u]))
                        continue;
                    acc[w] = ring.add(acc[w], ring.scale(sign, ring.mul(comp, entries_[w][u])));
                }
            }
        }
        for (const AlgElement& e : acc)
            if (!ring.is_zero(e))
                return false;
    }
    return true;
}

namespace {

struct DegreeLayout {
    int lo = 0, hi = -1;
    std::vector<std::vector<std::size_t>> slots; // per degree, module basis indices
};

DegreeLayout layout_of(const Representation& module) {
    DegreeLayout out;
    if (module.dim() == 0)
        return out;
    out.lo = module.space().degree(0);
    out.hi = module.space().degree(0);
    for (std::size_t s = 0; s < module.dim(); ++s) {
        out.lo = std::min(out.lo, module.space().degree(s));
        out.hi = std::max(out.hi, module.space().degree(s));
    }
    out.slots.assign(static_cast<std::size_t>(out.hi - out.lo + 1), {});
    for (std::size_t s = 0; s < module.dim(); ++s)
        out.slots[static_cast<std::size_t>(module.space().degree(s) - out.lo)].push_back(s);
    return out;
}

} // namespace

FreeComplex AomotoComplex::free_complex() const {
    if (!omega_.ring.is_classical())
        throw MathError("free_complex: the test ring is not classical; use h0_pushforward");
    ArtinianAlgebra a = omega_.ring.to_classical();
    DegreeLayout layout = layout_of(module_);

    std::vector<std::size_t> ranks;
    for (const auto& slot : layout.slots)
        ranks.push_back(slot.size());

    std::vector<AlgMatrix> diffs;
    for (std::size_t d = 0; d + 1 < layout.slots.size(); ++d) {
        AlgMatrix m(layout.slots[d + 1].size(), layout.slots[d].size(), a);
        for (std::size_t r = 0; r < layout.slots[d + 1].size(); ++r)
            for (std::size_t c = 0; c < layout.slots[d].size(); ++c)
                m.at(r, c) = entries_[layout.slots[d + 1][r]][layout.slots[d][c]];
        diffs.push_back(std::move(m));
    }
    return FreeComplex(std::move(a), layout.lo, std::move(ranks), std::move(diffs));
}

FreeComplex AomotoComplex::h0_pushforward() const {
    const DgArtinianAlgebra& ring = omega_.ring;
    DgArtinianAlgebra::H0Result h0 = ring.h0();
    const ArtinianAlgebra& target = h0.algebra;
    DegreeLayout layout = layout_of(module_);

    auto project = [&](const AlgElement& e) {
        AlgElement out(target.dim());
        for (std::size_t i = 0; i < target.dim(); ++i)
            for (std::size_t j = 0; j < ring.dim(); ++j)
                if (h0.projection.at(i, j) != 0 && e[j] != 0)
                    out[i] += h0.projection.at(i, j) * e[j];
        return out;
    };

    std::vector<std::size_t> ranks;
    for (const auto& slot : layout.slots)
        ranks.push_back(slot.size());

    std::vector<AlgMatrix> diffs;
    for (std::size_t d = 0; d + 1 < layout.slots.size(); ++d) {
        AlgMatrix m(layout.slots[d + 1].size(), layout.slots[d].size(), target);
        for (std::size_t r = 0; r < layout.slots[d + 1].size(); ++r)
            for (std::size_t c = 0; c < layout.slots[d].size(); ++c)
                m.at(r, c) = project(entries_[layout.slots[d + 1][r]][layout.slots[d][c]]);
        diffs.push_back(std::move(m));
    }
    return FreeComplex(target, layout.lo, std::move(ranks), std::move(diffs));
}

} // namespace jumploci
