#pragma once

#include "jumploci/dgla.hpp"
#include "jumploci/errors.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace jumploci {

// Basis cochain of the truncated Chevalley-Eilenberg complex: a multiset of
// Lie basis indices (weakly increasing; an index of even internal degree
// never repeats) together with one module basis index. Coordinates of a
// cochain are its values on these canonical input lists.
struct CeBasisElement {
    std::vector<std::uint32_t> inputs;
    std::uint32_t value = 0;
    auto operator<=>(const CeBasisElement&) const = default;
};

// Degree bookkeeping for the truncated complex. Suspended counts an input of
// internal degree r with weight r + 1 and the module slot with +deg(v);
// Cone counts inputs with 1 - r. Suspended is the default and is used
// whenever the assembled differential is homogeneous for it (always the
// case for dglas concentrated in degree 0, and for trivial coefficients
// with zero internal differential); otherwise the build falls back to Cone,
// for which homogeneity holds identically.
enum class CeGrading { Suspended, Cone };

struct WeightOverflow : MathError {
    using MathError::MathError;
};

class CeComplex;

struct CeElement {
    const CeComplex* owner = nullptr;
    std::vector<Rational> coords;

    bool is_zero() const;
};

// Truncated CE cochain complex of a dgla with coefficients in a
// representation (use Representation::trivial for C*(g)). The differential
// is assembled from the duals of the internal differentials and of the
// bracket/action with Koszul signs; d^2 = 0 is verified on construction for
// every cochain whose square lands below the truncation horizon.
class CeComplex {
public:
    CeComplex(Dgla g, Representation coefficients, unsigned weight_bound);

    const Dgla& dgla() const { return g_; }
    const Representation& coefficients() const { return v_; }
    unsigned weight_bound() const { return weight_; }
    bool trivial_coefficients() const { return v_.is_trivial_rank_one(); }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<CeBasisElement>& basis() const { return basis_; }
    std::size_t index_of(const CeBasisElement& b) const; // throws if absent
    unsigned weight_of(std::size_t idx) const { return basis_[idx].inputs.size(); }

    CeGrading grading() const { return grading_; }
    int degree_of(std::size_t idx) const { return degrees_[idx]; }
    std::map<int, std::size_t> basis_census() const;

    const QMatrix& differential() const { return d_; }

    CeElement zero_element() const;
    CeElement basis_cochain(const CeBasisElement& b) const;
    /// The unit functional (empty input list); requires trivial coefficients.
    CeElement unit_cochain() const;

    CeElement apply_d(const CeElement& e) const;
    /// Degree of a homogeneous element; throws MathError on mixed degrees.
    int element_degree(const CeElement& e) const;

    bool operator==(const CeComplex&) const = default;

private:
    friend CeElement ce_module_action(const CeElement& scalar, const CeElement& module);

    Dgla g_;
    Representation v_;
    unsigned weight_ = 0;
    std::vector<CeBasisElement> basis_;
    std::map<CeBasisElement, std::size_t> index_;
    std::vector<int> degrees_;
    CeGrading grading_ = CeGrading::Suspended;
    QMatrix d_;
};

/// ce_build per the module contract: validates g and V first.
CeComplex ce_build(const Dgla& g, const Representation& coefficients, unsigned weight_bound);
CeComplex ce_build_trivial(const Dgla& g, unsigned weight_bound);

/// Product of scalar cochains by summation over disjoint splittings (S, S')
/// with the Koszul sign of the unshuffle. Both factors must live in the same
/// trivial-coefficient complex. Throws WeightOverflow when nonzero supports
/// combine beyond the truncation.
CeElement ce_product(const CeElement& a, const CeElement& b);

/// Module action of C*(g) on C*(g, V); same summation formula.
/// `scalar` lives in a trivial-coefficient complex over the same dgla and
/// weight bound as `module`'s owner.
CeElement ce_module_action(const CeElement& scalar, const CeElement& module);

struct CeCohomology {
    std::map<int, std::size_t> dims;
    std::set<int> unreliable; // degrees whose ranks the truncation may distort
    CeGrading grading = CeGrading::Suspended;
};

CeCohomology ce_cohomology(const CeComplex& c);

} // namespace jumploci
