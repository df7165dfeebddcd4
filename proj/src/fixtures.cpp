#include "jumploci/fixtures.hpp"

#include "jumploci/errors.hpp"

namespace jumploci::fixtures {

namespace {

ArtinianAlgebra truncated(unsigned vars, unsigned order, std::vector<std::string> names) {
    return ArtinianAlgebra::from_truncation(vars, order, {}, std::move(names));
}

ArtinianAlgebra xy_squares_algebra() {
    Polynomial x2 = Polynomial::monomial(2, {2, 0}, 1);
    Polynomial y2 = Polynomial::monomial(2, {0, 2}, 1);
    return ArtinianAlgebra::from_truncation(2, 3, {x2, y2}, {"x", "y"});
}

DgArtinianAlgebra dg_dual_numbers() {
    // k + k s, deg s = -1, ds = 0, s^2 = 0
    std::vector<std::vector<AlgElement>> products(2, std::vector<AlgElement>(2, AlgElement(2)));
    products[0][0] = AlgElement{1, 0};
    products[0][1] = AlgElement{0, 1};
    products[1][0] = AlgElement{0, 1};
    return DgArtinianAlgebra({"1", "s"}, {0, -1}, std::move(products),
                             {AlgElement(2), AlgElement(2)});
}

} // namespace

const std::vector<TestRing>& ring_catalog() {
    static const std::vector<TestRing> catalog = [] {
        std::vector<TestRing> rings;
        rings.push_back({"Q", "the base field",
                         DgArtinianAlgebra::from_classical(ArtinianAlgebra::rational_field())});
        rings.push_back({"dual_numbers", "k[x]/x^2",
                         DgArtinianAlgebra::from_classical(truncated(1, 2, {"x"}))});
        rings.push_back({"t3", "k[t]/t^3",
                         DgArtinianAlgebra::from_classical(truncated(1, 3, {"t"}))});
        rings.push_back({"t4", "k[t]/t^4",
                         DgArtinianAlgebra::from_classical(truncated(1, 4, {"t"}))});
        rings.push_back({"square_zero_pair", "k[x,y]/(x,y)^2",
                         DgArtinianAlgebra::from_classical(truncated(2, 2, {"x", "y"}))});
        rings.push_back({"xy_squares", "k[x,y]/(x^2,y^2)",
                         DgArtinianAlgebra::from_classical(xy_squares_algebra())});
        rings.push_back({"dg_dual_numbers", "k + k s, deg s = -1, ds = 0", dg_dual_numbers()});
        return rings;
    }();
    return catalog;
}

const TestRing& ring_by_name(std::string_view name) {
    for (const TestRing& r : ring_catalog())
        if (r.name == name)
            return r;
    throw SchemaError("unknown test ring '" + std::string(name) + "'", "ring");
}

std::vector<TestRing> classical_ring_catalog() {
    std::vector<TestRing> out;
    for (const TestRing& r : ring_catalog())
        if (r.ring.is_classical())
            out.push_back(r);
    return out;
}

const std::vector<NamedMorphism>& morphism_catalog() {
    static const std::vector<NamedMorphism> catalog = [] {
        // construct directly so the truncation presentations are retained
        ArtinianAlgebra dual = truncated(1, 2, {"x"});
        ArtinianAlgebra t3 = truncated(1, 3, {"t"});
        ArtinianAlgebra t4 = truncated(1, 4, {"t"});
        ArtinianAlgebra sq = truncated(2, 2, {"x", "y"});
        ArtinianAlgebra xy = xy_squares_algebra();

        std::vector<NamedMorphism> out;
        out.push_back({"t4->t3", AlgebraMorphism::on_variables(t4, t3, {t3.basis_element(1)})});
        out.push_back({"t4->t2", AlgebraMorphism::on_variables(t4, dual, {dual.basis_element(1)})});
        out.push_back({"t3->t2", AlgebraMorphism::on_variables(t3, dual, {dual.basis_element(1)})});
        out.push_back({"square_zero_pair->dual_numbers",
                       AlgebraMorphism::on_variables(sq, dual, {dual.basis_element(1), dual.zero()})});
        out.push_back({"xy_squares->dual_numbers",
                       AlgebraMorphism::on_variables(xy, dual, {dual.basis_element(1), dual.zero()})});
        out.push_back({"t2->Q", AlgebraMorphism::augmentation_to_field(dual)});
        out.push_back({"t3->Q", AlgebraMorphism::augmentation_to_field(t3)});
        out.push_back({"t4->Q", AlgebraMorphism::augmentation_to_field(t4)});
        out.push_back({"square_zero_pair->Q", AlgebraMorphism::augmentation_to_field(sq)});
        out.push_back({"xy_squares->Q", AlgebraMorphism::augmentation_to_field(xy)});
        (void)q;
        return out;
    }();
    return catalog;
}

Dgla abelian_two() {
    GradedSpace sp({"a", "b"}, {0, 1});
    return Dgla(sp, std::vector<Vec>(2, sp.zero()),
                std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, sp.zero())));
}

Dgla sl2() {
    GradedSpace sp({"e", "f", "h"}, {0, 0, 0});
    std::vector<std::vector<Vec>> br(3, std::vector<Vec>(3, sp.zero()));
    br[0][1] = Vec{0, 0, 1};
    br[1][0] = Vec{0, 0, -1};
    br[2][0] = Vec{2, 0, 0};
    br[0][2] = Vec{-2, 0, 0};
    br[2][1] = Vec{0, -2, 0};
    br[1][2] = Vec{0, 2, 0};
    return Dgla(sp, std::vector<Vec>(3, sp.zero()), br);
}

Dgla odd_square() {
    GradedSpace sp({"e", "f"}, {1, 2});
    std::vector<std::vector<Vec>> br(2, std::vector<Vec>(2, sp.zero()));
    br[0][0] = Vec{0, 1};
    return Dgla(sp, std::vector<Vec>(2, sp.zero()), br);
}

Dgla exterior_pair() {
    GradedSpace sp({"n1", "n2"}, {1, 1});
    return Dgla(sp, std::vector<Vec>(2, sp.zero()),
                std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, sp.zero())));
}

Dgla line_degree_one() {
    GradedSpace sp({"e"}, {1});
    return Dgla(sp, {Vec{0}}, {{Vec{0}}});
}

Dgla solvable_pair() {
    GradedSpace sp({"h", "e"}, {0, 1});
    std::vector<std::vector<Vec>> br(2, std::vector<Vec>(2, sp.zero()));
    br[0][1] = Vec{0, 1};
    br[1][0] = Vec{0, -1};
    return Dgla(sp, std::vector<Vec>(2, sp.zero()), br);
}

Representation sl2_standard_module() {
    Dgla g = sl2();
    GradedSpace vs({"v+", "v-"}, {0, 0});
    std::vector<std::vector<Vec>> action(3, std::vector<Vec>(2, vs.zero()));
    action[0][1] = Vec{1, 0};
    action[1][0] = Vec{0, 1};
    action[2][0] = Vec{1, 0};
    action[2][1] = Vec{0, -1};
    return Representation(g, vs, std::vector<Vec>(2, vs.zero()), action);
}

Representation odd_square_jet_module() {
    Dgla g = odd_square();
    GradedSpace vs({"v0", "v1", "v2"}, {0, 1, 2});
    std::vector<std::vector<Vec>> action(2, std::vector<Vec>(3, vs.zero()));
    action[0][0] = Vec{0, 1, 0}; // e v0 = v1
    action[0][1] = Vec{0, 0, 1}; // e v1 = v2
    action[1][0] = Vec{0, 0, 2}; // f v0 = 2 v2, forced by [e,e] = f
    return Representation(g, vs, std::vector<Vec>(3, vs.zero()), action);
}

Representation exterior_module() {
    Dgla g = exterior_pair();
    GradedSpace vs({"one", "x1", "x2", "x12"}, {0, 1, 1, 2});
    std::vector<std::vector<Vec>> action(2, std::vector<Vec>(4, vs.zero()));
    action[0][0] = Vec{0, 1, 0, 0};  // n1 . 1 = x1
    action[1][0] = Vec{0, 0, 1, 0};  // n2 . 1 = x2
    action[0][2] = Vec{0, 0, 0, 1};  // n1 . x2 = x12
    action[1][1] = Vec{0, 0, 0, -1}; // n2 . x1 = -x12
    return Representation(g, vs, std::vector<Vec>(4, vs.zero()), action);
}

Representation dual_numbers_module() {
    Dgla g = line_degree_one();
    GradedSpace vs({"v0", "v1"}, {0, 1});
    std::vector<std::vector<Vec>> action(1, std::vector<Vec>(2, vs.zero()));
    action[0][0] = Vec{0, 1}; // e v0 = v1
    return Representation(g, vs, std::vector<Vec>(2, vs.zero()), action);
}

Representation solvable_module() {
    Dgla g = solvable_pair();
    GradedSpace vs({"v0", "v1"}, {0, 1});
    std::vector<std::vector<Vec>> action(2, std::vector<Vec>(2, vs.zero()));
    action[0][1] = Vec{0, 1}; // h v1 = v1
    action[1][0] = Vec{0, 1}; // e v0 = v1
    return Representation(g, vs, std::vector<Vec>(2, vs.zero()), action);
}

const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> catalog = [] {
        std::vector<Fixture> out;

        out.push_back({"abelian", "abelian dgla on generators in degrees 0 and 1", abelian_two(),
                       std::nullopt, std::nullopt, std::nullopt});

        out.push_back({"sl2", "sl2 in degree 0 with its standard 2-dimensional module", sl2(),
                       sl2_standard_module(), std::nullopt, std::nullopt});

        {
            Dgla g = odd_square();
            DgArtinianAlgebra t3 = ring_by_name("t3").ring;
            TensorElement omega = TensorElement::zero(g, t3);
            omega.coeff[0][2] = 1; // t^2 e, which is Maurer-Cartan over k[t]/t^3
            out.push_back({"odd-square", "g_1 = k e, g_2 = k f, [e,e] = f, with the jet module",
                           g, odd_square_jet_module(),
                           MCCandidate(g, t3, std::move(omega)), std::nullopt});
        }

        out.push_back({"exterior", "two abelian degree-1 generators acting on the exterior algebra",
                       exterior_pair(), exterior_module(), std::nullopt, std::nullopt});

        {
            Dgla g = line_degree_one();
            DgArtinianAlgebra dual = ring_by_name("dual_numbers").ring;
            TensorElement omega = TensorElement::zero(g, dual);
            omega.coeff[0][1] = 1; // x e
            out.push_back({"dual-numbers", "one degree-1 generator with the rank-(1,1) module "
                                           "and omega = x e over k[x]/x^2",
                           g, dual_numbers_module(),
                           MCCandidate(g, dual, std::move(omega)), std::nullopt});
        }

        {
            Dgla g = solvable_pair();
            DgArtinianAlgebra t3 = ring_by_name("t3").ring;
            TensorElement omega = TensorElement::zero(g, t3);
            omega.coeff[1][1] = 1; // t e
            TensorElement u = TensorElement::zero(g, t3);
            u.coeff[0][1] = 1; // t h
            out.push_back({"solvable", "[h,e] = e with a two-dimensional module; the gauge "
                                       "action of exp(t h) moves omega = t e",
                           g, solvable_module(), MCCandidate(g, t3, std::move(omega)),
                           GaugeElement(g, t3, std::move(u))});
        }

        return out;
    }();
    return catalog;
}

const Fixture& fixture_by_name(std::string_view name) {
    for (const Fixture& f : fixture_catalog())
        if (f.name == name)
            return f;
    throw SchemaError("unknown fixture '" + std::string(name) + "'", "fixture");
}

} // namespace jumploci::fixtures
