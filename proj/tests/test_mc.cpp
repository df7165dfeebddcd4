#include "jumploci/errors.hpp"
#include "jumploci/fixtures.hpp"
#include "jumploci/maurer_cartan.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace jumploci;
using namespace jumploci::testutil;
namespace fx = jumploci::fixtures;

namespace {

TensorElement single_term(const Dgla& g, const DgArtinianAlgebra& ring, std::size_t lie,
                          std::size_t ring_basis, Rational c = 1) {
    TensorElement t = TensorElement::zero(g, ring);
    t.coeff[lie][ring_basis] = c;
    return t;
}

// weight-3 Baker-Campbell-Hausdorff, enough whenever m^4 = 0
TensorElement bch3(const Dgla& g, const DgArtinianAlgebra& ring, const TensorElement& u,
                   const TensorElement& v) {
    TensorElement sum = tensor_add(ring, u, v);
    TensorElement uv = tensor_bracket(g, ring, u, v);
    sum = tensor_add(ring, sum, tensor_scale(ring, Rational(1, 2), uv));
    TensorElement uuv = tensor_bracket(g, ring, u, uv);
    TensorElement vvu = tensor_bracket(g, ring, v, tensor_scale(ring, -1, uv));
    sum = tensor_add(ring, sum, tensor_scale(ring, Rational(1, 12), uuv));
    sum = tensor_add(ring, sum, tensor_scale(ring, Rational(1, 12), vvu));
    return sum;
}

// nonabelian gauge directions: [h1,h2] = h2 in degree 0, [h1,e] = e in degree 1
Dgla nonabelian_gauge_algebra() {
    GradedSpace sp({"h1", "h2", "e"}, {0, 0, 1});
    std::vector<std::vector<Vec>> br(3, std::vector<Vec>(3, sp.zero()));
    br[0][1] = Vec{0, 1, 0};
    br[1][0] = Vec{0, -1, 0};
    br[0][2] = Vec{0, 0, 1};
    br[2][0] = Vec{0, 0, -1};
    return Dgla(sp, std::vector<Vec>(3, sp.zero()), br);
}

} // namespace

TEST_CASE("mc_defect examples") {
    Dgla odd = fx::odd_square();
    DgArtinianAlgebra t3 = fx::ring_by_name("t3").ring;

    MCCandidate zero(odd, t3, TensorElement::zero(odd, t3));
    CHECK(tensor_is_zero(t3, mc_defect(zero)));

    // abelian: any candidate with (d (x) 1) omega = 0 has zero defect
    Dgla ext = fx::exterior_pair();
    MCCandidate ab(ext, t3, single_term(ext, t3, 0, 1));
    CHECK(tensor_is_zero(t3, mc_defect(ab)));

    // omega = t e: defect (1/2) t^2 f; omega = t^2 e: defect 0
    MCCandidate te(odd, t3, single_term(odd, t3, 0, 1));
    TensorElement defect = mc_defect(te);
    TensorElement expected = single_term(odd, t3, 1, 2, Rational(1, 2));
    CHECK(defect.coeff == expected.coeff);

    MCCandidate t2e(odd, t3, single_term(odd, t3, 0, 2));
    CHECK(tensor_is_zero(t3, mc_defect(t2e)));
}

TEST_CASE("candidate validation") {
    Dgla odd = fx::odd_square();
    DgArtinianAlgebra t3 = fx::ring_by_name("t3").ring;
    // unit coordinate leaves the maximal ideal
    CHECK_THROWS_AS(MCCandidate(odd, t3, single_term(odd, t3, 0, 0)), MathError);
    // f has degree 2: f (x) t is not of total degree 1
    CHECK_THROWS_AS(MCCandidate(odd, t3, single_term(odd, t3, 1, 1)), MathError);
    // gauge elements have total degree 0
    CHECK_THROWS_AS(GaugeElement(odd, t3, single_term(odd, t3, 0, 1)), MathError);
}

TEST_CASE("gauge: identity, abelian collapse, commuting case") {
    Dgla sol = fx::solvable_pair();
    DgArtinianAlgebra t3 = fx::ring_by_name("t3").ring;

    MCCandidate omega(sol, t3, single_term(sol, t3, 1, 1)); // t e
    GaugeElement zero_u(sol, t3, TensorElement::zero(sol, t3));
    CHECK(gauge(zero_u, omega).element.coeff == omega.element.coeff);

    // contractible abelian dgla: gauge(u, omega) = omega - du
    GradedSpace sp({"a", "b"}, {0, 1});
    Dgla contractible(sp, {Vec{0, 1}, Vec{0, 0}},
                      std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, sp.zero())));
    MCCandidate om2(contractible, t3, single_term(contractible, t3, 1, 2)); // t^2 b
    GaugeElement u2(contractible, t3, single_term(contractible, t3, 0, 1)); // t a
    MCCandidate moved = gauge(u2, om2);
    TensorElement expected =
        tensor_add(t3, om2.element, tensor_scale(t3, -1, single_term(contractible, t3, 1, 1)));
    CHECK(moved.element.coeff == expected.coeff);

    // d = 0 and [u, omega] = 0: omega is fixed
    Dgla ab = fx::abelian_two();
    MCCandidate om3(ab, t3, single_term(ab, t3, 1, 1));
    GaugeElement u3(ab, t3, single_term(ab, t3, 0, 1));
    CHECK(gauge(u3, om3).element.coeff == om3.element.coeff);

    // non-MC inputs are rejected with the defect as witness
    Dgla odd = fx::odd_square();
    MCCandidate bad(odd, t3, single_term(odd, t3, 0, 1));
    GaugeElement u4(odd, t3, TensorElement::zero(odd, t3));
    CHECK_THROWS_AS((void)gauge(u4, bad), MathError);
}

TEST_CASE("gauge preserves Maurer-Cartan and composes via BCH") {
    Dgla g = nonabelian_gauge_algebra();
    CHECK(validate_dgla(g).empty());
    for (const char* ring_name : {"dual_numbers", "t3", "t4", "xy_squares"}) {
        DgArtinianAlgebra ring = fx::ring_by_name(ring_name).ring;
        std::uniform_int_distribution<std::size_t> pick_m(1, ring.dim() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            TensorElement om = TensorElement::zero(g, ring);
            om.coeff[2][pick_m(rng())] = random_rational(2);
            MCCandidate omega(g, ring, om);
            REQUIRE(tensor_is_zero(ring, mc_defect(omega)));

            TensorElement tu = TensorElement::zero(g, ring);
            tu.coeff[0][pick_m(rng())] = random_rational(2);
            TensorElement tv = TensorElement::zero(g, ring);
            tv.coeff[1][pick_m(rng())] = random_rational(2);
            GaugeElement u(g, ring, tu), v(g, ring, tv);

            MCCandidate once = gauge(u, omega);
            CHECK(tensor_is_zero(ring, mc_defect(once)));

            // e^u e^v = e^{BCH(u,v)} up to the nilpotency order
            MCCandidate lhs = gauge(u, gauge(v, omega));
            MCCandidate rhs = gauge(GaugeElement(g, ring, bch3(g, ring, tu, tv)), omega);
            CHECK(lhs.element.coeff == rhs.element.coeff);
        }
    }
}

TEST_CASE("aomoto: untwisted and dual-numbers examples") {
    // omega = 0 reproduces id (x) d
    Representation v = fx::dual_numbers_module();
    DgArtinianAlgebra dual = fx::ring_by_name("dual_numbers").ring;
    MCCandidate zero(v.dgla(), dual, TensorElement::zero(v.dgla(), dual));
    AomotoComplex untwisted(v, zero);
    FreeComplex base = untwisted.free_complex();
    CHECK(base.rank_at(0) == 1);
    CHECK(base.rank_at(1) == 1);
    CHECK(base.ambient().is_zero(base.differential_at(0).at(0, 0))); // d_V = 0 here

    // the shipped fixture: d_omega is multiplication by x
    const fx::Fixture& fixture = fx::fixture_by_name("dual-numbers");
    AomotoComplex twisted(*fixture.module, *fixture.suggested_omega);
    CHECK(twisted.differential_squares_to_zero());
    FreeComplex c = twisted.free_complex();
    CHECK(c.differential_at(0).at(0, 0) == c.ambient().basis_element(1));
    CHECK(check_complex(c));
}

TEST_CASE("aomoto: d_omega squares to zero exactly when the defect vanishes") {
    Representation jet = fx::odd_square_jet_module();
    const Dgla& g = jet.dgla();
    for (const fx::TestRing& entry : fx::ring_catalog()) {
        const DgArtinianAlgebra& ring = entry.ring;
        // enumerate all single-term candidates of total degree 1
        for (std::size_t a = 0; a < g.dim(); ++a)
            for (std::size_t j = 1; j < ring.dim(); ++j) {
                if (g.space().degree(a) + ring.degree(j) != 1)
                    continue;
                for (Rational c : {Rational(1), Rational(-2), Rational(1, 2)}) {
                    MCCandidate omega(g, ring, single_term(g, ring, a, j, c));
                    bool mc = tensor_is_zero(ring, mc_defect(omega));
                    AomotoComplex aomoto(jet, omega);
                    CHECK(aomoto.differential_squares_to_zero() == mc);
                    if (ring.is_classical())
                        CHECK(check_complex(aomoto.free_complex()) == mc);
                }
            }
    }
}

TEST_CASE("aomoto: jump ideals are gauge invariants") {
    Dgla g = nonabelian_gauge_algebra();
    GradedSpace vs({"w0", "w1"}, {0, 1});
    std::vector<std::vector<Vec>> action(3, std::vector<Vec>(2, vs.zero()));
    action[2][0] = Vec{0, 1}; // e w0 = w1
    action[0][1] = Vec{0, 1}; // h1 w1 = w1 (forced by [h1,e] = e)
    Representation v(g, vs, std::vector<Vec>(2, vs.zero()), action);
    REQUIRE(validate_representation(v).empty());

    DgArtinianAlgebra t3 = fx::ring_by_name("t3").ring;
    std::uniform_int_distribution<std::size_t> pick_m(1, t3.dim() - 1);
    for (int trial = 0; trial < 25; ++trial) {
        TensorElement om = TensorElement::zero(g, t3);
        om.coeff[2][pick_m(rng())] = random_rational(2);
        MCCandidate omega(g, t3, om);

        TensorElement tu = TensorElement::zero(g, t3);
        tu.coeff[0][pick_m(rng())] = random_rational(2);
        tu.coeff[1][pick_m(rng())] = random_rational(2);
        MCCandidate moved = gauge(GaugeElement(g, t3, tu), omega);

        FreeComplex before = AomotoComplex(v, omega).h0_pushforward();
        FreeComplex after = AomotoComplex(v, moved).h0_pushforward();
        for (int i = -1; i <= 2; ++i)
            for (unsigned k = 1; k <= 2; ++k)
                CHECK(ideal_equals(jump_ideal(before, {.i = i, .k = k}),
                                   jump_ideal(after, {.i = i, .k = k})));
    }
}

TEST_CASE("h0_pushforward examples") {
    // classical ring: the pushforward is the complex itself
    const fx::Fixture& fixture = fx::fixture_by_name("dual-numbers");
    AomotoComplex aomoto(*fixture.module, *fixture.suggested_omega);
    CHECK(aomoto.h0_pushforward() == aomoto.free_complex());

    // dg ring k + k s: entries involving s vanish in the pushforward
    Dgla odd = fx::odd_square();
    Representation jet = fx::odd_square_jet_module();
    DgArtinianAlgebra dg = fx::ring_by_name("dg_dual_numbers").ring;
    // f (x) s has total degree 2 + (-1) = 1 and zero defect since [f,f] = 0
    MCCandidate omega(odd, dg, single_term(odd, dg, 1, 1));
    CHECK(tensor_is_zero(dg, mc_defect(omega)));
    AomotoComplex twisted(jet, omega);
    CHECK(twisted.differential_squares_to_zero());
    FreeComplex pushed = twisted.h0_pushforward();
    CHECK(pushed.ambient().dim() == 1); // H^0 of the dg ring is the field
    for (int i = pushed.lo(); i < pushed.hi(); ++i)
        CHECK(alg_mat_is_zero(pushed.ambient(), pushed.differential_at(i)));
}

TEST_CASE("aomoto commutes with base change of the test ring") {
    Representation v = fx::solvable_module();
    const Dgla& g = v.dgla();
    for (const fx::NamedMorphism& nm : fx::morphism_catalog()) {
        const AlgebraMorphism& f = nm.morphism;
        DgArtinianAlgebra source = DgArtinianAlgebra::from_classical(f.source());
        std::uniform_int_distribution<std::size_t> pick_m(1, f.source().dim() - 1);
        for (int trial = 0; trial < 5; ++trial) {
            TensorElement om = TensorElement::zero(g, source);
            om.coeff[1][pick_m(rng())] = random_rational(2);
            MCCandidate omega(g, source, om);
            FreeComplex pushed_complex = tensor_along(f, AomotoComplex(v, omega).free_complex());
            FreeComplex complex_of_pushed =
                AomotoComplex(v, push_candidate(f, omega)).free_complex();
            CHECK(pushed_complex == complex_of_pushed);
        }
    }
}
