#pragma once

#include "jumploci/polynomial.hpp"
#include "jumploci/qmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jumploci {

/// Coordinate vector of an algebra element over the ambient basis.
using AlgElement = std::vector<Rational>;

// Finite-dimensional commutative local Q-algebra with residue field Q,
// presented by a basis and the full multiplication table. Basis element 0 is
// the unit; the augmentation sends it to 1 and every other basis element to
// 0, so the augmentation ideal is span(b_1..b_{n-1}) and must be closed
// under multiplication and nilpotent. The field Q itself is the
// one-dimensional case.
//
// Values are immutable after construction; every operation is const.
class ArtinianAlgebra {
public:
    ArtinianAlgebra(std::vector<std::string> basis_labels,
                    std::vector<std::vector<AlgElement>> products);

    static ArtinianAlgebra rational_field();

    /// Quotient of Q[x_1..x_r] by all monomials of total degree >= order plus
    /// the given relations (which must have zero constant term). The basis is
    /// the set of standard monomials surviving row reduction of the relation
    /// span inside the truncated monomial space.
    static ArtinianAlgebra from_truncation(unsigned vars, unsigned order,
                                           const std::vector<Polynomial>& relations,
                                           std::vector<std::string> var_names = {});

    std::size_t dim() const { return labels_.size(); }
    bool is_field() const { return dim() == 1; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    const std::vector<AlgElement>& product_row(std::size_t i) const { return prod_[i]; }

    AlgElement zero() const { return AlgElement(dim()); }
    AlgElement unit() const;
    AlgElement basis_element(std::size_t i) const;
    AlgElement scalar(const Rational& c) const;

    AlgElement mul(const AlgElement& u, const AlgElement& v) const;
    AlgElement add(const AlgElement& u, const AlgElement& v) const;
    AlgElement sub(const AlgElement& u, const AlgElement& v) const;
    AlgElement scale(const Rational& c, const AlgElement& u) const;
    bool is_zero(const AlgElement& u) const;

    /// Image under the augmentation b_0 -> 1, b_{i>0} -> 0.
    Rational augmentation(const AlgElement& u) const;
    /// Units of a local ring are exactly the elements outside m.
    bool is_unit_element(const AlgElement& u) const { return augmentation(u) != 0; }

    std::string element_to_string(const AlgElement& u) const;

    /// Exponent vectors of the standard-monomial basis when this algebra was
    /// built by from_truncation; empty otherwise.
    const std::vector<std::vector<unsigned>>& monomial_exponents() const { return monomials_; }
    const std::vector<std::string>& variable_names() const { return var_names_; }

    /// Checked laws: commutativity, associativity on all basis triples,
    /// unit laws, closure and nilpotency of the augmentation ideal.
    /// Empty report == valid.
    std::vector<std::string> validate() const;

    bool operator==(const ArtinianAlgebra& rhs) const {
        return labels_ == rhs.labels_ && prod_ == rhs.prod_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<AlgElement>> prod_; // prod_[i][j] = b_i * b_j
    std::vector<std::vector<unsigned>> monomials_;
    std::vector<std::string> var_names_;
};

// Unital algebra morphism recorded by its matrix on basis coordinates
// (target dim x source dim).
class AlgebraMorphism {
public:
    AlgebraMorphism(ArtinianAlgebra source, ArtinianAlgebra target, QMatrix matrix);

    static AlgebraMorphism identity(const ArtinianAlgebra& a);
    static AlgebraMorphism augmentation_to_field(const ArtinianAlgebra& a);

    /// Morphism between truncation quotients determined by images of the
    /// source variables. Throws MathError if the assignment does not respect
    /// the source relations.
    static AlgebraMorphism on_variables(const ArtinianAlgebra& source,
                                        const ArtinianAlgebra& target,
                                        const std::vector<AlgElement>& var_images);

    const ArtinianAlgebra& source() const { return source_; }
    const ArtinianAlgebra& target() const { return target_; }
    const QMatrix& matrix() const { return matrix_; }

    AlgElement apply(const AlgElement& u) const;

    /// g.compose_after(f) = g o f.
    AlgebraMorphism compose_after(const AlgebraMorphism& f) const;

    /// Unit to unit, multiplicative on all basis pairs, commutes with the
    /// augmentations. Empty report == valid.
    std::vector<std::string> validate() const;

private:
    ArtinianAlgebra source_, target_;
    QMatrix matrix_;
};

// Finitely generated ideal in Q-linear normal form: the reduced row-echelon
// basis of span_Q{ b_i * g_j } under the fixed basis order. Equality of
// ideals is equality of normal forms.
class Ideal {
public:
    Ideal(ArtinianAlgebra ambient, std::vector<AlgElement> generators);

    static Ideal zero(const ArtinianAlgebra& a) { return Ideal(a, {}); }
    static Ideal unit_ideal(const ArtinianAlgebra& a) { return Ideal(a, {a.unit()}); }

    const ArtinianAlgebra& ambient() const { return ambient_; }
    const std::vector<AlgElement>& generators() const { return generators_; }
    const RowSpan& normal_form() const { return normal_form_; }

    bool is_zero() const { return normal_form_.empty(); }
    bool is_unit() const { return normal_form_.size() == ambient_.dim(); }
    /// Every normal-form vector has zero augmentation.
    bool in_maximal() const;

    bool contains(const Ideal& other) const;

private:
    ArtinianAlgebra ambient_;
    std::vector<AlgElement> generators_;
    RowSpan normal_form_;
};

bool ideal_equals(const Ideal& a, const Ideal& b);

/// Ideal of f's target generated by the images of I's generators.
Ideal base_change(const AlgebraMorphism& f, const Ideal& ideal);

} // namespace jumploci
