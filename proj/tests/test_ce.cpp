#include "jumploci/ce.hpp"
#include "jumploci/errors.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace jumploci;
using namespace jumploci::testutil;

namespace {

Dgla make_sl2() {
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

Dgla make_odd_square() {
    GradedSpace sp({"e", "f"}, {1, 2});
    std::vector<std::vector<Vec>> br(2, std::vector<Vec>(2, sp.zero()));
    br[0][0] = Vec{0, 1};
    return Dgla(sp, std::vector<Vec>(2, sp.zero()), br);
}

Dgla make_line_degree_one() {
    GradedSpace sp({"e"}, {1});
    return Dgla(sp, {Vec{0}}, {{Vec{0}}});
}

Dgla make_contractible() {
    GradedSpace sp({"a", "b"}, {0, 1});
    return Dgla(sp, {Vec{0, 1}, Vec{0, 0}},
                std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, sp.zero())));
}

Dgla make_koszul_g() {
    GradedSpace sp({"n1", "n2"}, {1, 1});
    return Dgla(sp, std::vector<Vec>(2, sp.zero()),
                std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, sp.zero())));
}

Representation make_koszul_module(const Dgla& g) {
    GradedSpace vs({"one", "x1", "x2", "x12"}, {0, 1, 1, 2});
    std::vector<std::vector<Vec>> action(2, std::vector<Vec>(4, vs.zero()));
    action[0][0] = Vec{0, 1, 0, 0};
    action[1][0] = Vec{0, 0, 1, 0};
    action[0][2] = Vec{0, 0, 0, 1};
    action[1][1] = Vec{0, 0, 0, -1};
    return Representation(g, vs, std::vector<Vec>(4, vs.zero()), action);
}

bool leibniz_holds(const CeComplex& cg, const CeComplex& cm) {
    const unsigned W = cg.weight_bound();
    for (std::size_t ia = 0; ia < cg.dim(); ++ia)
        for (std::size_t ib = 0; ib < cm.dim(); ++ib) {
            if (cg.weight_of(ia) + cm.weight_of(ib) + 1 > W)
                continue;
            CeElement a = cg.basis_cochain(cg.basis()[ia]);
            CeElement b = cm.basis_cochain(cm.basis()[ib]);
            CeElement lhs = cm.apply_d(ce_module_action(a, b));
            CeElement r1 = ce_module_action(cg.apply_d(a), b);
            CeElement r2 = ce_module_action(a, cm.apply_d(b));
            Rational sign = cg.degree_of(ia) % 2 == 0 ? 1 : -1;
            for (std::size_t i = 0; i < lhs.coords.size(); ++i)
                if (lhs.coords[i] != r1.coords[i] + sign * r2.coords[i])
                    return false;
        }
    return true;
}

} // namespace

TEST_CASE("ce_build: abelian dgla gives the dual of d_g only") {
    Dgla g = make_contractible();
    CeComplex c = ce_build_trivial(g, 3);
    // every nonzero entry of the differential must come from d_g: with zero
    // bracket the complex of a contractible dgla is acyclic where reliable
    auto coh = ce_cohomology(c);
    for (auto [deg, dim] : coh.dims) {
        if (coh.unreliable.count(deg))
            continue;
        CHECK(dim == (deg == 0 ? 1 : 0));
    }

    GradedSpace flat({"a", "b"}, {0, 1});
    Dgla abelian(flat, std::vector<Vec>(2, flat.zero()),
                 std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, flat.zero())));
    CeComplex czero = ce_build_trivial(abelian, 3);
    CHECK(czero.differential().is_zero());
}

TEST_CASE("ce_build: sl2 with trivial coefficients computes (1,0,0,1)") {
    CeComplex c = ce_build_trivial(make_sl2(), 3);
    auto coh = ce_cohomology(c);
    CHECK(coh.grading == CeGrading::Suspended);
    CHECK(coh.dims[0] == 1);
    CHECK(coh.dims[1] == 0);
    CHECK(coh.dims[2] == 0);
    CHECK(coh.dims[3] == 1);
    CHECK(coh.unreliable.empty()); // exterior algebra on 3 odd symbols is finite
}

TEST_CASE("ce_build: one generator in degree 1 gives a polynomial-type algebra") {
    CeComplex c = ce_build_trivial(make_line_degree_one(), 3);
    // weights 0..3 in degrees 0,2,4,6: one monomial each
    auto census = c.basis_census();
    CHECK(census == std::map<int, std::size_t>{{0, 1}, {2, 1}, {4, 1}, {6, 1}});
    CHECK(c.differential().is_zero());
}

TEST_CASE("ce_product: unit law and graded commutativity") {
    CeComplex c = ce_build_trivial(make_sl2(), 4);
    CeElement unit = c.unit_cochain();
    for (std::size_t i = 0; i < c.dim(); ++i) {
        CeElement lambda = c.basis_cochain(c.basis()[i]);
        CHECK(ce_product(unit, lambda).coords == lambda.coords);
        CHECK(ce_product(lambda, unit).coords == lambda.coords);
    }
    for (const Dgla& g : {make_sl2(), make_odd_square(), make_koszul_g()}) {
        CeComplex cc = ce_build_trivial(g, 4);
        for (std::size_t i = 0; i < cc.dim(); ++i)
            for (std::size_t j = 0; j < cc.dim(); ++j) {
                if (cc.weight_of(i) + cc.weight_of(j) > 4)
                    continue;
                CeElement a = cc.basis_cochain(cc.basis()[i]);
                CeElement b = cc.basis_cochain(cc.basis()[j]);
                Rational sign = (cc.degree_of(i) * cc.degree_of(j)) % 2 == 0 ? 1 : -1;
                CeElement ab = ce_product(a, b);
                CeElement ba = ce_product(b, a);
                for (std::size_t t = 0; t < cc.dim(); ++t)
                    CHECK(ab.coords[t] == sign * ba.coords[t]);
            }
    }
}

TEST_CASE("ce_product: the two splittings of e.e") {
    // dual generator of a single degree-1 element: an even symbol, so the
    // crossed splitting carries no sign and the square pairs to 2
    CeComplex c = ce_build_trivial(make_line_degree_one(), 3);
    CeElement e_dual = c.basis_cochain({{0}, 0});
    CeElement square = ce_product(e_dual, e_dual);
    CHECK(square.coords[c.index_of({{0, 0}, 0})] == 2);
}

TEST_CASE("ce_product: weight overflow is reported") {
    CeComplex c = ce_build_trivial(make_line_degree_one(), 3);
    CeElement top = c.basis_cochain({{0, 0}, 0});
    CHECK_THROWS_AS((void)ce_product(top, top), WeightOverflow);
}

TEST_CASE("ce_module_action: unit, associativity, trivial coefficients") {
    Dgla g = make_sl2();
    CeComplex cg = ce_build_trivial(g, 4);
    CeComplex cm = ce_build(g, adjoint_rep(g), 4);

    CeElement unit = cg.unit_cochain();
    for (std::size_t i = 0; i < cm.dim(); ++i) {
        CeElement mu = cm.basis_cochain(cm.basis()[i]);
        CHECK(ce_module_action(unit, mu).coords == mu.coords);
    }

    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> pick_g(0, cg.dim() - 1);
        std::uniform_int_distribution<std::size_t> pick_m(0, cm.dim() - 1);
        std::size_t ia = pick_g(rng()), ib = pick_g(rng()), ic = pick_m(rng());
        if (cg.weight_of(ia) + cg.weight_of(ib) + cm.weight_of(ic) > 4)
            continue;
        CeElement a = cg.basis_cochain(cg.basis()[ia]);
        CeElement b = cg.basis_cochain(cg.basis()[ib]);
        CeElement m = cm.basis_cochain(cm.basis()[ic]);
        CHECK(ce_module_action(ce_product(a, b), m).coords ==
              ce_module_action(a, ce_module_action(b, m)).coords);
    }

    // with trivial coefficients the action is the product
    CeComplex ct = ce_build(g, Representation::trivial(g), 4);
    for (std::size_t i = 0; i < ct.dim(); ++i)
        for (std::size_t j = 0; j < ct.dim(); ++j) {
            if (ct.weight_of(i) + ct.weight_of(j) > 4)
                continue;
            CeElement a = ct.basis_cochain(ct.basis()[i]);
            CeElement b = ct.basis_cochain(ct.basis()[j]);
            CHECK(ce_module_action(a, b).coords == ce_product(a, b).coords);
        }
}

TEST_CASE("ce differential: d^2 = 0 and Leibniz on all fixtures at W = 4") {
    std::vector<std::pair<Dgla, Representation>> cases;
    Dgla sl2 = make_sl2();
    cases.push_back({sl2, Representation::trivial(sl2)});
    cases.push_back({sl2, adjoint_rep(sl2)});
    Dgla odd = make_odd_square();
    cases.push_back({odd, Representation::trivial(odd)});
    cases.push_back({odd, adjoint_rep(odd)});
    Dgla con = make_contractible();
    cases.push_back({con, Representation::trivial(con)});
    cases.push_back({con, adjoint_rep(con)});
    Dgla kz = make_koszul_g();
    cases.push_back({kz, Representation::trivial(kz)});
    cases.push_back({kz, make_koszul_module(kz)});

    for (const auto& [g, v] : cases) {
        // construction itself verifies d^2 = 0 below the horizon
        CeComplex cm = ce_build(g, v, 4);
        CeComplex cg = ce_build_trivial(g, 4);
        CHECK(leibniz_holds(cg, cm));
    }
}

TEST_CASE("ce_cohomology: symmetric-power census for abelian dglas") {
    // two degree-1 generators, zero differential: the complex is a
    // polynomial algebra on two degree-2 duals with zero differential
    CeComplex c = ce_build_trivial(make_koszul_g(), 4);
    auto coh = ce_cohomology(c);
    CHECK(coh.dims[0] == 1);
    CHECK(coh.dims[2] == 2);
    CHECK(coh.dims[4] == 3);
    CHECK(coh.dims[6] == 4);
    CHECK(coh.dims[8] == 5);
    // weight-5 monomials all land in degree 10, so every shown degree is exact
    CHECK(coh.unreliable.empty());

    // for sl2 truncated at W = 2 the missing weight-3 cochains distort
    // degree 2 (and 3 would be missing entirely): the horizon is flagged
    auto tight = ce_cohomology(ce_build_trivial(make_sl2(), 2));
    CHECK(tight.unreliable.count(2) == 1);
    CHECK(tight.unreliable.count(0) == 0);
}

TEST_CASE("ce_cohomology: degree zero holds the constants") {
    for (const Dgla& g : {make_sl2(), make_odd_square(), make_line_degree_one()}) {
        auto coh = ce_cohomology(ce_build_trivial(g, 4));
        CHECK(coh.dims[0] == 1);
        CHECK(coh.unreliable.count(0) == 0);
    }
}

TEST_CASE("ce differential matches an independent naive evaluator on sl2") {
    // second route: classical formula for a degree-0 Lie algebra on subset
    // cochains, written independently of the CeComplex assembly
    Dgla g = make_sl2();
    auto bracket = [&](std::size_t i, std::size_t j) { return g.basis_bracket(i, j); };

    // subsets of {0,1,2} by weight
    std::vector<std::vector<std::size_t>> subsets[4];
    for (std::size_t mask = 0; mask < 8; ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t b = 0; b < 3; ++b)
            if (mask & (std::size_t(1) << b))
                s.push_back(b);
        subsets[s.size()].push_back(s);
    }
    // d: C^m -> C^{m+1}, (d lambda)(x_0..x_m) = sum_{a<b} (-1)^{a+b}
    //   lambda([x_a,x_b], rest)
    auto naive_matrix = [&](std::size_t m) {
        QMatrix d(subsets[m + 1].size(), subsets[m].size());
        for (std::size_t row = 0; row < subsets[m + 1].size(); ++row) {
            const auto& w = subsets[m + 1][row];
            for (std::size_t a = 0; a < w.size(); ++a)
                for (std::size_t b = a + 1; b < w.size(); ++b) {
                    Vec br = bracket(w[a], w[b]);
                    std::vector<std::size_t> rest;
                    for (std::size_t t = 0; t < w.size(); ++t)
                        if (t != a && t != b)
                            rest.push_back(w[t]);
                    for (std::size_t l = 0; l < 3; ++l) {
                        if (br[l] == 0)
                            continue;
                        // sort (l, rest) as a set; repeated index kills it
                        std::vector<std::size_t> full = rest;
                        bool dead = false;
                        int sign = 1;
                        std::size_t pos = 0;
                        while (pos < full.size() && full[pos] < l) {
                            sign = -sign;
                            ++pos;
                        }
                        if (pos < full.size() && full[pos] == l)
                            dead = true;
                        if (dead)
                            continue;
                        full.insert(full.begin() + static_cast<long>(pos), l);
                        for (std::size_t col = 0; col < subsets[m].size(); ++col)
                            if (subsets[m][col] == full)
                                d.at(row, col) += Rational((a + b) % 2 == 0 ? 1 : -1) * br[l] *
                                                  sign;
                    }
                }
        }
        return d;
    };

    std::size_t r0 = naive_matrix(0).rank();
    std::size_t r1 = naive_matrix(1).rank();
    std::size_t r2 = naive_matrix(2).rank();
    std::map<int, std::size_t> naive_dims{
        {0, 1 - r0}, {1, 3 - r1 - r0}, {2, 3 - r2 - r1}, {3, 1 - r2}};

    auto coh = ce_cohomology(ce_build_trivial(g, 3));
    for (auto [deg, dim] : naive_dims)
        CHECK(coh.dims[deg] == dim);
}

TEST_CASE("ce elements: homogeneity bookkeeping") {
    CeComplex c = ce_build_trivial(make_sl2(), 3);
    CeElement mixed = c.zero_element();
    mixed.coords[c.index_of({{}, 0})] = 1;
    mixed.coords[c.index_of({{0}, 0})] = 1;
    CHECK_THROWS_AS((void)c.element_degree(mixed), MathError);
    CHECK(c.element_degree(c.unit_cochain()) == 0);
}
