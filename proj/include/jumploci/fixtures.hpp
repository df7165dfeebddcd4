#pragma once

#include "jumploci/dg_artinian.hpp"
#include "jumploci/dgla.hpp"
#include "jumploci/maurer_cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jumploci::fixtures {

// ---- test rings -----------------------------------------------------------

struct TestRing {
    std::string name;
    std::string description;
    DgArtinianAlgebra ring;
};

/// Shipped catalog: Q, k[x]/x^2, k[t]/t^3, k[t]/t^4, k[x,y]/(x,y)^2,
/// k[x,y]/(x^2,y^2) and one dg example k + k s with deg s = -1, ds = 0.
/// Every entry passes validation (asserted by the test suite).
const std::vector<TestRing>& ring_catalog();
const TestRing& ring_by_name(std::string_view name);

/// Classical catalog entries only (everything except the dg example).
std::vector<TestRing> classical_ring_catalog();

struct NamedMorphism {
    std::string name; // e.g. "t3->t2"
    AlgebraMorphism morphism;
};

/// Truncations, variable-killing maps and augmentations between catalog
/// rings; every entry validates.
const std::vector<NamedMorphism>& morphism_catalog();

// ---- dglas and modules ----------------------------------------------------

Dgla abelian_two();      // degrees {0, 1}, zero bracket and differential
Dgla sl2();              // e, f, h in degree 0
Dgla odd_square();       // g_1 = k e, g_2 = k f, [e,e] = f
Dgla exterior_pair();    // two abelian generators in degree 1
Dgla line_degree_one();  // one abelian generator in degree 1
Dgla solvable_pair();    // h in degree 0, e in degree 1, [h,e] = e

Representation sl2_standard_module();
/// v0 -> v1 -> v2 under e with f v0 = 2 v2; f acts nontrivially, so the
/// Maurer-Cartan defect is visible on the Aomoto differential.
Representation odd_square_jet_module();
/// The exterior algebra on two degree-1 generators as a module over
/// exterior_pair(); the Koszul-complex fixture for resonance scans.
Representation exterior_module();
/// v0 in degree 0, v1 in degree 1, e v0 = v1; pairs with the dual numbers.
Representation dual_numbers_module();
Representation solvable_module();

// ---- assembled fixtures ----------------------------------------------------

struct Fixture {
    std::string name;
    std::string description;
    Dgla dgla;
    std::optional<Representation> module;
    // canned Maurer-Cartan data for CLI runs and golden files
    std::optional<MCCandidate> suggested_omega;
    std::optional<GaugeElement> suggested_gauge;
};

const std::vector<Fixture>& fixture_catalog();
const Fixture& fixture_by_name(std::string_view name);

} // namespace jumploci::fixtures
