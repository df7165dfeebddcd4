#pragma once

#include "jumploci/artinian.hpp"

#include <string>
#include <vector>

namespace jumploci {

// Commutative differential graded artinian algebra with basis degrees in
// [-D, 0], unit in degree 0 at basis index 0, degree +1 differential and a
// graded-commutative product. Artinian is operationalized as: local with
// residue field Q and nilpotent augmentation ideal span(b_1..b_{n-1}).
// A classical algebra is the special case with every degree equal to 0.
class DgArtinianAlgebra {
public:
    DgArtinianAlgebra(std::vector<std::string> labels, std::vector<int> degrees,
                      std::vector<std::vector<AlgElement>> products,
                      std::vector<AlgElement> differential);

    static DgArtinianAlgebra from_classical(const ArtinianAlgebra& a);

    bool is_classical() const;
    /// Reinterprets a degree-0-concentrated algebra; throws otherwise.
    ArtinianAlgebra to_classical() const;

    std::size_t dim() const { return labels_.size(); }
    int degree(std::size_t i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    AlgElement zero() const { return AlgElement(dim()); }
    AlgElement unit() const;
    AlgElement basis_element(std::size_t i) const;

    AlgElement mul(const AlgElement& u, const AlgElement& v) const;
    AlgElement add(const AlgElement& u, const AlgElement& v) const;
    AlgElement scale(const Rational& c, const AlgElement& u) const;
    AlgElement d(const AlgElement& u) const;
    bool is_zero(const AlgElement& u) const;
    Rational augmentation(const AlgElement& u) const { return u.at(0); }

    /// Component of u in a single ring degree.
    AlgElement component(const AlgElement& u, int ring_degree) const;
    std::string element_to_string(const AlgElement& u) const;

    /// d^2 = 0, graded Leibniz, graded commutativity, degree homogeneity of
    /// the tables, unit laws, aug(d(A_{-1})) = 0, locality and nilpotency.
    std::vector<std::string> validate() const;

    struct H0Result {
        ArtinianAlgebra algebra;
        QMatrix projection; // h0 dim x full dim, kills nonzero degrees and d(A_{-1})
    };
    /// Degree-0 part modulo d(A_{-1}) with the induced multiplication and
    /// the canonical projection.
    H0Result h0() const;

    bool operator==(const DgArtinianAlgebra& rhs) const {
        return labels_ == rhs.labels_ && degrees_ == rhs.degrees_ && prod_ == rhs.prod_ &&
               diff_ == rhs.diff_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<std::vector<AlgElement>> prod_; // prod_[i][j] = b_i * b_j
    std::vector<AlgElement> diff_;              // diff_[j] = d(b_j)
};

} // namespace jumploci
