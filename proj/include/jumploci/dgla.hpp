#pragma once

#include "jumploci/qmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jumploci {

using Vec = std::vector<Rational>;

// Finite graded basis with unique labels.
class GradedSpace {
public:
    GradedSpace() = default;
    GradedSpace(std::vector<std::string> names, std::vector<int> degrees);

    std::size_t dim() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::vector<std::size_t> indices_in_degree(int d) const;
    Vec zero() const { return Vec(dim()); }
    Vec basis_vec(std::size_t i) const;

    bool operator==(const GradedSpace&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

// A law violation with its witnessing basis tuple. Reports are sorted by
// (law, witness) so validator output is deterministic.
struct Violation {
    std::string law;
    std::vector<std::string> witness;
    std::string detail;

    bool operator<(const Violation& rhs) const {
        if (law != rhs.law)
            return law < rhs.law;
        return witness < rhs.witness;
    }
};

// Finite-dimensional differential graded Lie algebra presented by structure
// constants: a degree +1 differential and a bracket table on the basis.
// Cohomological grading; Maurer-Cartan elements live in degree 1.
//
// Sign conventions enforced by validate_dgla:
//   [x,y] = -(-1)^{pq} [y,x]
//   d[x,y] = [dx,y] + (-1)^p [x,dy]
//   [x,[y,z]] = [[x,y],z] + (-1)^{pq} [y,[x,z]]
class Dgla {
public:
    Dgla(GradedSpace space, std::vector<Vec> differential /* d(x_j) coords */,
         std::vector<std::vector<Vec>> bracket /* [x_i, x_j] coords */);

    const GradedSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

    Vec d(const Vec& v) const;
    Vec bracket(const Vec& u, const Vec& v) const;
    const Vec& basis_differential(std::size_t j) const { return diff_[j]; }
    const Vec& basis_bracket(std::size_t i, std::size_t j) const { return bracket_[i][j]; }

    bool operator==(const Dgla&) const = default;

private:
    GradedSpace space_;
    std::vector<Vec> diff_;
    std::vector<std::vector<Vec>> bracket_;
};

/// All violated laws with witnesses; empty report == valid. Never throws.
std::vector<Violation> validate_dgla(const Dgla& g);

// Representation of a Dgla on a finite graded space, by action structure
// constants. The action is degree-additive and must be a chain map
// compatible with the bracket:
//   d_V(x v) = (dx) v + (-1)^p x (d_V v)
//   [x,y] v  = x (y v) - (-1)^{pq} y (x v)
class Representation {
public:
    Representation(Dgla dgla, GradedSpace space, std::vector<Vec> differential,
                   std::vector<std::vector<Vec>> action /* action[a][s] = x_a . v_s */);

    /// The one-dimensional trivial module k in degree 0 with zero action.
    static Representation trivial(const Dgla& g);

    const Dgla& dgla() const { return dgla_; }
    const GradedSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    bool is_trivial_rank_one() const;

    Vec d(const Vec& v) const;
    Vec act(std::size_t lie_index, const Vec& v) const;
    Vec act(const Vec& lie, const Vec& v) const;
    const Vec& basis_differential(std::size_t s) const { return diff_[s]; }
    const Vec& basis_action(std::size_t a, std::size_t s) const { return action_[a][s]; }

    bool operator==(const Representation&) const = default;

private:
    Dgla dgla_;
    GradedSpace space_;
    std::vector<Vec> diff_;
    std::vector<std::vector<Vec>> action_;
};

std::vector<Violation> validate_representation(const Representation& v);

/// Tensor product with basis pairs (v, w) labelled "v(x)w", degrees added,
/// differential by the graded Leibniz rule and action by
///   x(v(x)w) = (xv)(x)w + (-1)^{p deg(v)} v(x)(xw).
Representation tensor_rep(const Representation& v, const Representation& w);

/// Action constants equal bracket constants.
Representation adjoint_rep(const Dgla& g);

// Degree-0 map between representations of the same Dgla.
struct RepMorphism {
    const Representation* source = nullptr;
    const Representation* target = nullptr;
    QMatrix matrix; // target dim x source dim
};

/// Commutes with differentials and with the action on all basis pairs.
std::vector<Violation> validate_rep_morphism(const RepMorphism& f);

} // namespace jumploci
