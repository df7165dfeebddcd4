#pragma once

#include "jumploci/artinian.hpp"

#include <map>
#include <variant>
#include <vector>

namespace jumploci {

// Matrix with entries in an artinian algebra; pure data, the algebra is
// passed to the operations.
struct AlgMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<AlgElement> entries; // row-major

    AlgMatrix() = default;
    AlgMatrix(std::size_t r, std::size_t c, const ArtinianAlgebra& a)
        : rows(r), cols(c), entries(r * c, a.zero()) {}

    AlgElement& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const AlgElement& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    static AlgMatrix identity(std::size_t n, const ArtinianAlgebra& a);
    bool operator==(const AlgMatrix&) const = default;
};

AlgMatrix alg_mat_mul(const ArtinianAlgebra& a, const AlgMatrix& lhs, const AlgMatrix& rhs);
bool alg_mat_is_zero(const ArtinianAlgebra& a, const AlgMatrix& m);

/// Determinant over the (commutative) algebra: permutation expansion for
/// n <= 5, subset-dynamic-programming Laplace expansion above that. Exact.
AlgElement alg_det(const ArtinianAlgebra& a, const AlgMatrix& m);

/// Invertible over a local ring iff the residue matrix over Q is invertible.
bool alg_mat_invertible(const ArtinianAlgebra& a, const AlgMatrix& m);

// Bounded cochain complex of finite-rank free modules. d_i maps degree i to
// degree i+1 and is stored as an (n_{i+1} x n_i) matrix acting on column
// vectors; degrees outside the window have rank 0.
class FreeComplex {
public:
    FreeComplex(ArtinianAlgebra ambient, int lo, std::vector<std::size_t> ranks,
                std::vector<AlgMatrix> differentials);

    const ArtinianAlgebra& ambient() const { return ambient_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }

    std::size_t rank_at(int degree) const;
    /// Differential out of `degree`, shaped rank_at(degree+1) x rank_at(degree).
    AlgMatrix differential_at(int degree) const;

    bool operator==(const FreeComplex&) const = default;

private:
    ArtinianAlgebra ambient_;
    int lo_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<AlgMatrix> diffs_; // diffs_[i] maps degree lo_+i to lo_+i+1
};

/// True iff every composite d_{i+1} d_i vanishes exactly.
bool check_complex(const FreeComplex& c);

/// dim H^i = n_i - rank(d_i) - rank(d_{i-1}) by exact elimination.
/// Requires a field ambient.
std::map<int, std::size_t> cohomology_dims_over_field(const FreeComplex& c);

/// Cohomology dimensions over Q of the underlying Q-linear complex
/// (each free term A^{n_i} read as a Q-space). Works over any ambient.
std::map<int, std::size_t> cohomology_dims_k_linear(const FreeComplex& c);

struct MinorsConfig {
    std::size_t max_dim = 12; // minor enumeration is combinatorial; refuse beyond this
};

/// Ideal generated by the r x r minors. r <= 0 gives the unit ideal,
/// r > min(rows, cols) the zero ideal. Over a field the ideal is decided by
/// an exact rank computation instead of enumerating minors.
Ideal minors_ideal(const ArtinianAlgebra& a, const AlgMatrix& m, long r,
                   const MinorsConfig& config = {});

struct JumpIndex {
    int i = 0;      // cohomological degree
    unsigned k = 1; // jump level, >= 1
};

/// J_k^i: minors of size rank(F^i) - k + 1 of the block-diagonal matrix of
/// (x, y) -> (d_{i-1} x, d_i y).
Ideal jump_ideal(const FreeComplex& c, JumpIndex idx, const MinorsConfig& config = {});

// Elementary quasi-isomorphism moves.
struct AcyclicSummand {
    int degree = 0; // adds A --id--> A in degrees (degree, degree+1)
};
struct BasisChange {
    int degree = 0;
    AlgMatrix change; // invertible rank_at(degree) x rank_at(degree) matrix
};
using StabilizeMove = std::variant<AcyclicSummand, BasisChange>;

/// Applies the moves left to right; the result is quasi-isomorphic to the
/// input by construction. Throws MathError on a non-invertible basis change.
FreeComplex stabilize(const FreeComplex& c, const std::vector<StabilizeMove>& moves);

/// Same ranks, every entry mapped through f.
FreeComplex tensor_along(const AlgebraMorphism& f, const FreeComplex& c);

/// Freeness test for the submodule of A^ambient_rank spanned by `gens`
/// (each generator a list of ambient_rank algebra elements): true iff
/// dim_Q M equals (minimal generator count) * dim_Q A.
bool module_is_free(const ArtinianAlgebra& a, const std::vector<std::vector<AlgElement>>& gens,
                    std::size_t ambient_rank, std::string* witness = nullptr);

} // namespace jumploci
