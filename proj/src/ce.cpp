#include "jumploci/ce.hpp"

#include <algorithm>
#include <numeric>

namespace jumploci {

namespace {

// Parity of a basis input in the symmetric-coalgebra sense: an element of
// internal degree r behaves as a symbol of parity (r + 1) mod 2, so inputs
// of even internal degree anticommute and never repeat.
int input_parity(const Dgla& g, std::uint32_t idx) {
    int r = g.space().degree(idx);
    return ((r + 1) % 2 + 2) % 2;
}

// Differential on functionals, with p the parity of the cochain being
// differentiated, e_i / e_ij the Koszul extraction signs and r_i the internal
// degree of the extracted input:
//
//   (d lambda)(x_1..x_n) = d_V(lambda(x_1..x_n))
//     - (-1)^p [ sum_i  e_i (-1)^{r_i p} x_i . lambda(..x^_i..)
//              + sum_i  e_i lambda(d_g(x_i), ..x^_i..)
//              - sum_ij e_ij (-1)^{r_i} lambda([x_i,x_j], ..x^_i..x^_j..) ]
//
// This is the dual of the standard resolution differential with the
// suspension twists written out; together with the evaluation sign in the
// product below it is the unique assignment (up to diagonal sign gauge)
// passing the exhaustive d^2 = 0 and Leibniz test batteries.

int sign_pow(long long e) { return e % 2 == 0 ? 1 : -1; }

// Koszul sign of extracting the element at `pos` to the front.
int extraction_sign(const Dgla& g, const std::vector<std::uint32_t>& inputs, std::size_t pos) {
    int s = 1;
    int p = input_parity(g, inputs[pos]);
    for (std::size_t j = 0; j < pos; ++j)
        if (p == 1 && input_parity(g, inputs[j]) == 1)
            s = -s;
    return s;
}

// Sorted insertion of one index with the Koszul sign picked up while moving
// it from the front into place. Returns sign 0 when an odd symbol repeats.
struct Insertion {
    int sign = 0;
    std::vector<std::uint32_t> list;
};

Insertion insert_sorted(const Dgla& g, std::uint32_t idx, const std::vector<std::uint32_t>& rest) {
    Insertion out;
    out.list.reserve(rest.size() + 1);
    int sign = 1;
    int p = input_parity(g, idx);
    std::size_t pos = 0;
    while (pos < rest.size() && rest[pos] < idx) {
        if (p == 1 && input_parity(g, rest[pos]) == 1)
            sign = -sign;
        ++pos;
    }
    if (pos < rest.size() && rest[pos] == idx && p == 1)
        return out; // odd repeat kills the monomial
    out.list.assign(rest.begin(), rest.begin() + pos);
    out.list.push_back(idx);
    out.list.insert(out.list.end(), rest.begin() + pos, rest.end());
    out.sign = sign;
    return out;
}

std::vector<std::uint32_t> erase_position(const std::vector<std::uint32_t>& inputs,
                                          std::size_t pos) {
    std::vector<std::uint32_t> out;
    out.reserve(inputs.size() - 1);
    for (std::size_t j = 0; j < inputs.size(); ++j)
        if (j != pos)
            out.push_back(inputs[j]);
    return out;
}

int cochain_parity(const Dgla& g, const Representation& v, const CeBasisElement& b) {
    long long sum = v.space().degree(b.value);
    for (std::uint32_t idx : b.inputs)
        sum += g.space().degree(idx) + 1;
    return (sum % 2 + 2) % 2;
}

} // namespace

bool CeElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x == 0; });
}

CeComplex::CeComplex(Dgla g, Representation coefficients, unsigned weight_bound)
    : g_(std::move(g)), v_(std::move(coefficients)), weight_(weight_bound) {
    const std::size_t n = g_.dim();

    // basis: weakly increasing index lists, odd symbols squarefree
    std::vector<std::uint32_t> current;
    auto enumerate = [&](auto&& self, std::uint32_t from) -> void {
        for (std::uint32_t u = 0; u < v_.dim(); ++u)
            basis_.push_back({current, u});
        if (current.size() == weight_)
            return;
        for (std::uint32_t idx = from; idx < n; ++idx) {
            if (!current.empty() && current.back() == idx && input_parity(g_, idx) == 1)
                continue;
            current.push_back(idx);
            self(self, idx);
            current.pop_back();
        }
    };
    enumerate(enumerate, 0);
    std::sort(basis_.begin(), basis_.end());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        index_.emplace(basis_[i], i);

    d_ = QMatrix(dim(), dim());

    for (std::size_t row = 0; row < dim(); ++row) {
        const auto& xs = basis_[row].inputs;
        const std::uint32_t u = basis_[row].value;

        // dual of the module differential: d_V applied to the value
        for (std::uint32_t s = 0; s < v_.dim(); ++s) {
            const Rational& c = v_.basis_differential(s)[u];
            if (c == 0)
                continue;
            auto it = index_.find(CeBasisElement{xs, s});
            d_.at(row, it->second) += c;
        }

        for (std::size_t i = 0; i < xs.size(); ++i) {
            const int e_i = extraction_sign(g_, xs, i);
            const int r_i = g_.space().degree(xs[i]);
            std::vector<std::uint32_t> rest = erase_position(xs, i);

            // dual of the action: x_i acts on the value of a shorter cochain
            for (std::uint32_t s = 0; s < v_.dim(); ++s) {
                const Rational& c = v_.basis_action(xs[i], s)[u];
                if (c == 0)
                    continue;
                auto it = index_.find(CeBasisElement{rest, s});
                const int p = cochain_parity(g_, v_, it->first);
                d_.at(row, it->second) -= c * e_i * sign_pow(p + 1LL * r_i * p);
            }

            // dual of the internal Lie differential: evaluate on d_g(x_i)
            const Vec& dg = g_.basis_differential(xs[i]);
            for (std::uint32_t a = 0; a < n; ++a) {
                if (dg[a] == 0)
                    continue;
                Insertion ins = insert_sorted(g_, a, rest);
                if (ins.sign == 0)
                    continue;
                auto it = index_.find(CeBasisElement{ins.list, u});
                const int p = cochain_parity(g_, v_, it->first);
                d_.at(row, it->second) -= dg[a] * e_i * ins.sign * sign_pow(p);
            }

            // dual of the bracket: evaluate on [x_i, x_j] and the rest
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                int e_j = 1;
                const int pj = input_parity(g_, xs[j]);
                for (std::size_t l = 0; l < j; ++l)
                    if (l != i && pj == 1 && input_parity(g_, xs[l]) == 1)
                        e_j = -e_j;
                std::vector<std::uint32_t> rest2;
                rest2.reserve(xs.size() - 2);
                for (std::size_t l = 0; l < xs.size(); ++l)
                    if (l != i && l != j)
                        rest2.push_back(xs[l]);
                const Vec& br = g_.basis_bracket(xs[i], xs[j]);
                for (std::uint32_t a = 0; a < n; ++a) {
                    if (br[a] == 0)
                        continue;
                    Insertion ins = insert_sorted(g_, a, rest2);
                    if (ins.sign == 0)
                        continue;
                    auto it = index_.find(CeBasisElement{ins.list, u});
                    const int p = cochain_parity(g_, v_, it->first);
                    d_.at(row, it->second) += br[a] * e_i * e_j * ins.sign * sign_pow(p + r_i);
                }
            }
        }
    }

    // grading: Suspended when homogeneous for it, else Cone
    auto degrees_for = [&](CeGrading mode) {
        std::vector<int> deg(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            int total = v_.space().degree(basis_[i].value);
            for (std::uint32_t idx : basis_[i].inputs) {
                int r = g_.space().degree(idx);
                total += mode == CeGrading::Suspended ? r + 1 : 1 - r;
            }
            deg[i] = total;
        }
        return deg;
    };
    auto homogeneous = [&](const std::vector<int>& deg) {
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t c = 0; c < dim(); ++c)
                if (d_.at(r, c) != 0 && deg[r] != deg[c] + 1)
                    return false;
        return true;
    };
    std::vector<int> susp = degrees_for(CeGrading::Suspended);
    if (homogeneous(susp)) {
        grading_ = CeGrading::Suspended;
        degrees_ = std::move(susp);
    } else {
        std::vector<int> cone = degrees_for(CeGrading::Cone);
        if (!homogeneous(cone))
            throw MathError("CE differential is homogeneous for neither grading convention");
        grading_ = CeGrading::Cone;
        degrees_ = std::move(cone);
    }

    // d^2 = 0 for every cochain whose square stays below the horizon
    for (std::size_t col = 0; col < dim(); ++col) {
        if (weight_of(col) + 2 > weight_)
            continue;
        std::vector<Rational> once(dim());
        for (std::size_t r = 0; r < dim(); ++r)
            once[r] = d_.at(r, col);
        for (std::size_t r2 = 0; r2 < dim(); ++r2) {
            Rational acc = 0;
            for (std::size_t mid = 0; mid < dim(); ++mid)
                if (once[mid] != 0 && d_.at(r2, mid) != 0)
                    acc += d_.at(r2, mid) * once[mid];
            if (acc != 0)
                throw MathError("CE differential does not square to zero below the horizon");
        }
    }
}

std::size_t CeComplex::index_of(const CeBasisElement& b) const {
    auto it = index_.find(b);
    if (it == index_.end())
        throw std::invalid_argument("cochain basis element outside the truncation");
    return it->second;
}

std::map<int, std::size_t> CeComplex::basis_census() const {
    std::map<int, std::size_t> census;
    for (std::size_t i = 0; i < dim(); ++i)
        ++census[degrees_[i]];
    return census;
}

CeElement CeComplex::zero_element() const { return CeElement{this, std::vector<Rational>(dim())}; }

CeElement CeComplex::basis_cochain(const CeBasisElement& b) const {
    CeElement e = zero_element();
    e.coords[index_of(b)] = 1;
    return e;
}

CeElement CeComplex::unit_cochain() const {
    if (!trivial_coefficients())
        throw MathError("unit cochain lives in the trivial-coefficient complex");
    return basis_cochain(CeBasisElement{{}, 0});
}

CeElement CeComplex::apply_d(const CeElement& e) const {
    if (e.owner != this)
        throw std::invalid_argument("cochain belongs to a different complex");
    CeElement out = zero_element();
    for (std::size_t c = 0; c < dim(); ++c) {
        if (e.coords[c] == 0)
            continue;
        for (std::size_t r = 0; r < dim(); ++r)
            if (d_.at(r, c) != 0)
                out.coords[r] += d_.at(r, c) * e.coords[c];
    }
    return out;
}

int CeComplex::element_degree(const CeElement& e) const {
    bool seen = false;
    int deg = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (e.coords[i] == 0)
            continue;
        if (!seen) {
            deg = degrees_[i];
            seen = true;
        } else if (degrees_[i] != deg) {
            throw MathError("cochain is not homogeneous");
        }
    }
    return deg;
}

CeComplex ce_build(const Dgla& g, const Representation& coefficients, unsigned weight_bound) {
    auto bad_g = validate_dgla(g);
    if (!bad_g.empty())
        throw MathError("ce_build: dgla fails validation: " + bad_g.front().law);
    auto bad_v = validate_representation(coefficients);
    if (!bad_v.empty())
        throw MathError("ce_build: representation fails validation: " + bad_v.front().law);
    return CeComplex(g, coefficients, weight_bound);
}

CeComplex ce_build_trivial(const Dgla& g, unsigned weight_bound) {
    return ce_build(g, Representation::trivial(g), weight_bound);
}

namespace {

// shared implementation of the splitting-sum product/action
CeElement splitting_product(const CeElement& a, const CeElement& b) {
    const CeComplex& ca = *a.owner;
    const CeComplex& cb = *b.owner;
    const Dgla& g = cb.dgla();

    unsigned wa = 0, wb = 0;
    for (std::size_t i = 0; i < ca.dim(); ++i)
        if (a.coords[i] != 0)
            wa = std::max(wa, ca.weight_of(i));
    for (std::size_t i = 0; i < cb.dim(); ++i)
        if (b.coords[i] != 0)
            wb = std::max(wb, cb.weight_of(i));
    if (wa + wb > cb.weight_bound())
        throw WeightOverflow("product weight " + std::to_string(wa + wb) +
                             " exceeds the truncation bound " +
                             std::to_string(cb.weight_bound()));

    CeElement out = cb.zero_element();
    for (std::size_t t = 0; t < cb.dim(); ++t) {
        const CeBasisElement& target = cb.basis()[t];
        const auto& xs = target.inputs;
        const std::size_t n = xs.size();
        Rational acc = 0;
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            std::vector<std::uint32_t> left, right;
            for (std::size_t i = 0; i < n; ++i)
                (mask & (std::size_t(1) << i) ? left : right).push_back(xs[i]);
            // Koszul sign of the unshuffle: one factor per crossing pair
            int sign = 1;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::size_t(1) << i))
                    continue;
                if (input_parity(g, xs[i]) == 0)
                    continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if ((mask & (std::size_t(1) << j)) && input_parity(g, xs[j]) == 1)
                        sign = -sign;
            }
            auto ia = ca.index_of(CeBasisElement{left, 0});
            if (a.coords[ia] == 0)
                continue;
            CeBasisElement right_elt{right, target.value};
            auto ib = cb.index_of(right_elt);
            if (b.coords[ib] == 0)
                continue;
            // evaluation sign: the right factor crosses the left inputs
            int left_par = 0;
            for (std::uint32_t idx : left)
                left_par ^= input_parity(g, idx);
            if (left_par == 1 && cochain_parity(g, cb.coefficients(), right_elt) == 1)
                sign = -sign;
            acc += Rational(sign) * a.coords[ia] * b.coords[ib];
        }
        out.coords[t] = acc;
    }
    return out;
}

} // namespace

CeElement ce_product(const CeElement& a, const CeElement& b) {
    if (a.owner == nullptr || b.owner == nullptr)
        throw std::invalid_argument("unowned cochain");
    if (a.owner != b.owner)
        throw std::invalid_argument("product factors live in different complexes");
    if (!a.owner->trivial_coefficients())
        throw MathError("ce_product is the algebra product; use ce_module_action for modules");
    return splitting_product(a, b);
}

CeElement ce_module_action(const CeElement& scalar, const CeElement& module) {
    if (scalar.owner == nullptr || module.owner == nullptr)
        throw std::invalid_argument("unowned cochain");
    if (!scalar.owner->trivial_coefficients())
        throw MathError("module action requires a trivial-coefficient left factor");
    if (!(scalar.owner->dgla() == module.owner->dgla()) ||
        scalar.owner->weight_bound() != module.owner->weight_bound())
        throw std::invalid_argument("module action across incompatible complexes");
    return splitting_product(scalar, module);
}

CeCohomology ce_cohomology(const CeComplex& c) {
    CeCohomology out;
    out.grading = c.grading();

    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < c.dim(); ++i)
        by_degree[c.degree_of(i)].push_back(i);

    auto block_rank = [&](int from_degree) -> std::size_t {
        auto src = by_degree.find(from_degree);
        auto dst = by_degree.find(from_degree + 1);
        if (src == by_degree.end() || dst == by_degree.end())
            return 0;
        QMatrix block(dst->second.size(), src->second.size());
        for (std::size_t r = 0; r < dst->second.size(); ++r)
            for (std::size_t cc = 0; cc < src->second.size(); ++cc)
                block.at(r, cc) = c.differential().at(dst->second[r], src->second[cc]);
        return block.rank();
    };

    for (const auto& [deg, indices] : by_degree)
        out.dims[deg] = indices.size() - block_rank(deg) - block_rank(deg - 1);

    // Degrees reachable by monomials just beyond the truncation are flagged;
    // cohomology at a flagged degree may be distorted by the cutoff. The
    // reachability walk respects that odd symbols never repeat. When some
    // input contributes <= 0 to the degree, arbitrarily heavy monomials pile
    // onto every degree and nothing is trustworthy.
    const std::size_t n_lie = c.dgla().dim();
    std::vector<int> contrib(n_lie);
    std::vector<bool> odd(n_lie);
    int min_contrib = 1;
    for (std::size_t idx = 0; idx < n_lie; ++idx) {
        int r = c.dgla().space().degree(idx);
        contrib[idx] = c.grading() == CeGrading::Suspended ? r + 1 : 1 - r;
        odd[idx] = ((r + 1) % 2 + 2) % 2 == 1;
        min_contrib = std::min(min_contrib, contrib[idx]);
    }
    if (n_lie > 0 && min_contrib < 1) {
        for (const auto& [deg, dim] : out.dims)
            out.unreliable.insert(deg);
        return out;
    }

    std::set<int> beyond;
    std::map<std::uint64_t, std::set<int>> states{{0u, {0}}};
    for (unsigned w = 1; w <= c.weight_bound() + 2; ++w) {
        std::map<std::uint64_t, std::set<int>> next;
        for (const auto& [mask, sums] : states)
            for (std::size_t a = 0; a < n_lie && a < 64; ++a) {
                if (odd[a] && (mask & (std::uint64_t(1) << a)))
                    continue;
                std::uint64_t m2 = odd[a] ? mask | (std::uint64_t(1) << a) : mask;
                for (int s : sums)
                    next[m2].insert(s + contrib[a]);
            }
        states = std::move(next);
        if (w <= c.weight_bound())
            continue;
        for (const auto& [mask, sums] : states)
            for (int s : sums)
                for (std::size_t u = 0; u < c.coefficients().dim(); ++u)
                    beyond.insert(s + c.coefficients().space().degree(u));
    }
    for (const auto& [deg, dim] : out.dims)
        for (int delta = -1; delta <= 1; ++delta)
            if (beyond.count(deg + delta)) {
                out.unreliable.insert(deg);
                break;
            }
    return out;
}

} // namespace jumploci
