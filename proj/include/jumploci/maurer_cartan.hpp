#pragma once

#include "jumploci/dg_artinian.hpp"
#include "jumploci/dgla.hpp"
#include "jumploci/free_complex.hpp"

#include <vector>

namespace jumploci {

// Element of g (x) m_A over a (possibly dg) artinian test ring: one ring
// element per Lie basis index, every coordinate in the augmentation ideal.
struct TensorElement {
    std::vector<AlgElement> coeff; // indexed by the Lie basis

    static TensorElement zero(const Dgla& g, const DgArtinianAlgebra& ring);
};

bool tensor_is_zero(const DgArtinianAlgebra& ring, const TensorElement& t);
TensorElement tensor_add(const DgArtinianAlgebra& ring, const TensorElement& a,
                         const TensorElement& b);
TensorElement tensor_scale(const DgArtinianAlgebra& ring, const Rational& c,
                           const TensorElement& t);

/// [x (x) r, y (x) s] = (-1)^{|r||y|} [x,y] (x) rs, extended bilinearly.
TensorElement tensor_bracket(const Dgla& g, const DgArtinianAlgebra& ring,
                             const TensorElement& a, const TensorElement& b);

/// d(x (x) r) = (dx) (x) r + (-1)^{|x|} x (x) d_A r.
TensorElement tensor_d(const Dgla& g, const DgArtinianAlgebra& ring, const TensorElement& t);

std::string tensor_to_string(const Dgla& g, const DgArtinianAlgebra& ring,
                             const TensorElement& t);

// Candidate Maurer-Cartan element: total degree 1, coordinates in m_A.
// Classical rings embed via DgArtinianAlgebra::from_classical.
struct MCCandidate {
    Dgla dgla;
    DgArtinianAlgebra ring;
    TensorElement element;

    /// Throws std::invalid_argument on shape errors, MathError when the
    /// element is not homogeneous of total degree 1 or leaves m_A.
    MCCandidate(Dgla g, DgArtinianAlgebra r, TensorElement omega);
};

// Gauge parameter: total degree 0, coordinates in m_A.
struct GaugeElement {
    Dgla dgla;
    DgArtinianAlgebra ring;
    TensorElement element;

    GaugeElement(Dgla g, DgArtinianAlgebra r, TensorElement u);
};

/// d omega + 1/2 [omega, omega] in (g (x) m)_2; zero iff Maurer-Cartan.
TensorElement mc_defect(const MCCandidate& candidate);

/// Nilpotent gauge action exp(ad_u) omega - sum_n ad_u^n/(n+1)! (du).
/// Requires mc_defect(omega) = 0; the defect is the error witness otherwise.
MCCandidate gauge(const GaugeElement& u, const MCCandidate& omega);

/// Push omega along a morphism of classical test rings.
MCCandidate push_candidate(const AlgebraMorphism& f, const MCCandidate& omega);

// The Aomoto complex A (x) V with twisted differential d_omega = id (x) d_V
// + omega action, recorded by its matrix on module generators (entries in
// the ring). Over a classical ring this is a FreeComplex; over a dg ring the
// full differential also derives the coefficients and h0_pushforward
// produces the complex of Prop-style membership tests.
class AomotoComplex {
public:
    AomotoComplex(Representation module, MCCandidate omega);

    const Representation& module() const { return module_; }
    const MCCandidate& omega() const { return omega_; }

    /// Coefficient of v_u in d(1 (x) v_s); a ring element.
    const AlgElement& generator_entry(std::size_t u, std::size_t s) const;

    /// Full dg check of d^2 = 0 on generators (Leibniz expansion over the
    /// ring differential). Equivalent to check_complex over classical rings.
    bool differential_squares_to_zero() const;

    /// The underlying FreeComplex over a classical ring; throws otherwise.
    FreeComplex free_complex() const;

    /// The complex of free H^0(ring)-modules obtained by pushing every
    /// generator entry through ring -> H^0(ring).
    FreeComplex h0_pushforward() const;

private:
    Representation module_;
    MCCandidate omega_;
    std::vector<std::vector<AlgElement>> entries_; // entries_[u][s] over the ring
};

} // namespace jumploci
