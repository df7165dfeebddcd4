#include "jumploci/dgla.hpp"
#include "jumploci/errors.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace jumploci;

namespace {

Dgla make_sl2() {
    GradedSpace sp({"e", "f", "h"}, {0, 0, 0});
    auto vec = [&](Rational e, Rational f, Rational h) { return Vec{e, f, h}; };
    std::vector<std::vector<Vec>> br(3, std::vector<Vec>(3, sp.zero()));
    br[0][1] = vec(0, 0, 1);   // [e,f] = h
    br[1][0] = vec(0, 0, -1);  // [f,e] = -h
    br[2][0] = vec(2, 0, 0);   // [h,e] = 2e
    br[0][2] = vec(-2, 0, 0);  // [e,h] = -2e
    br[2][1] = vec(0, -2, 0);  // [h,f] = -2f
    br[1][2] = vec(0, 2, 0);   // [f,h] = 2f
    return Dgla(sp, std::vector<Vec>(3, sp.zero()), br);
}

Dgla make_abelian(std::vector<std::string> names, std::vector<int> degrees) {
    GradedSpace sp(std::move(names), std::move(degrees));
    std::size_t n = sp.dim();
    return Dgla(sp, std::vector<Vec>(n, sp.zero()),
                std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, sp.zero())));
}

// g_1 = k e, g_2 = k f, [e,e] = f, d = 0
Dgla make_odd_square() {
    GradedSpace sp({"e", "f"}, {1, 2});
    std::vector<std::vector<Vec>> br(2, std::vector<Vec>(2, sp.zero()));
    br[0][0] = Vec{0, 1};
    return Dgla(sp, std::vector<Vec>(2, sp.zero()), br);
}

} // namespace

TEST_CASE("validate_dgla accepts the standard fixtures") {
    CHECK(validate_dgla(make_abelian({"a", "b"}, {0, 1})).empty());
    CHECK(validate_dgla(make_sl2()).empty());
    CHECK(validate_dgla(make_odd_square()).empty());
}

TEST_CASE("validate_dgla accepts a contractible dgla with differential") {
    GradedSpace sp({"a", "b"}, {0, 1});
    std::vector<Vec> diff{Vec{0, 1}, Vec{0, 0}}; // d(a) = b
    Dgla g(sp, diff, std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, sp.zero())));
    CHECK(validate_dgla(g).empty());
}

TEST_CASE("validate_dgla reports a Jacobi violation with its witness") {
    GradedSpace sp({"e", "f", "h"}, {0, 0, 0});
    auto vec = [&](Rational e, Rational f, Rational h) { return Vec{e, f, h}; };
    std::vector<std::vector<Vec>> br(3, std::vector<Vec>(3, sp.zero()));
    br[0][1] = vec(0, 0, 1);
    br[1][0] = vec(0, 0, -1);
    br[2][0] = vec(3, 0, 0); // corrupted: [h,e] = 3e
    br[0][2] = vec(-3, 0, 0);
    br[2][1] = vec(0, -2, 0);
    br[1][2] = vec(0, 2, 0);
    Dgla g(sp, std::vector<Vec>(3, sp.zero()), br);
    auto report = validate_dgla(g);
    CHECK(!report.empty());
    bool jacobi_on_efh = false;
    for (const Violation& v : report)
        if (v.law == "jacobi" && v.witness == std::vector<std::string>{"e", "f", "h"})
            jacobi_on_efh = true;
    CHECK(jacobi_on_efh);
}

TEST_CASE("validate_representation on the shipped examples") {
    Dgla sl2 = make_sl2();

    CHECK(validate_representation(Representation::trivial(sl2)).empty());
    CHECK(validate_representation(adjoint_rep(sl2)).empty());

    // standard 2-dimensional module: e v- = v+, f v+ = v-, h v+- = +-v+-
    GradedSpace vs({"v+", "v-"}, {0, 0});
    std::vector<std::vector<Vec>> action(3, std::vector<Vec>(2, vs.zero()));
    action[0][1] = Vec{1, 0};  // e v- = v+
    action[1][0] = Vec{0, 1};  // f v+ = v-
    action[2][0] = Vec{1, 0};  // h v+ = v+
    action[2][1] = Vec{0, -1}; // h v- = -v-
    Representation std2(sl2, vs, std::vector<Vec>(2, vs.zero()), action);
    CHECK(validate_representation(std2).empty());

    // corrupting the action surfaces a bracket-compatibility violation
    action[2][0] = Vec{2, 0};
    Representation bad(sl2, vs, std::vector<Vec>(2, vs.zero()), action);
    CHECK(!validate_representation(bad).empty());
}

TEST_CASE("adjoint representations validate (metamorphic with Jacobi/Leibniz)") {
    for (const Dgla& g : {make_sl2(), make_odd_square(), make_abelian({"a"}, {1})})
        CHECK(validate_representation(adjoint_rep(g)).empty());

    GradedSpace sp({"a", "b"}, {0, 1});
    Dgla contractible(sp, {Vec{0, 1}, Vec{0, 0}},
                      std::vector<std::vector<Vec>>(2, std::vector<Vec>(2, sp.zero())));
    CHECK(validate_representation(adjoint_rep(contractible)).empty());
}

TEST_CASE("tensor products of representations") {
    Dgla sl2 = make_sl2();
    Representation ad = adjoint_rep(sl2);
    Representation triv = Representation::trivial(sl2);

    Representation v_k = tensor_rep(ad, triv);
    CHECK(v_k.dim() == 3);
    CHECK(validate_representation(v_k).empty());
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t s = 0; s < 3; ++s)
            CHECK(v_k.basis_action(a, s) == ad.basis_action(a, s));

    Representation k_k = tensor_rep(triv, triv);
    CHECK(k_k.dim() == 1);
    CHECK(k_k.is_trivial_rank_one());

    Representation ad_ad = tensor_rep(ad, ad);
    CHECK(ad_ad.dim() == 9);
    CHECK(validate_representation(ad_ad).empty());
}

TEST_CASE("tensor products over graded dglas stay valid") {
    Dgla odd = make_odd_square();
    Representation ad = adjoint_rep(odd);
    Representation t = tensor_rep(ad, ad);
    CHECK(validate_representation(t).empty());
    // associativity up to the canonical relabeling of basis pairs
    Representation left = tensor_rep(tensor_rep(ad, ad), ad);
    Representation right = tensor_rep(ad, tensor_rep(ad, ad));
    CHECK(left.space().degrees() == right.space().degrees());
    for (std::size_t a = 0; a < odd.dim(); ++a)
        for (std::size_t s = 0; s < left.dim(); ++s)
            CHECK(left.basis_action(a, s) == right.basis_action(a, s));
}

TEST_CASE("rep morphism validator") {
    Dgla sl2 = make_sl2();
    Representation ad = adjoint_rep(sl2);
    Representation v_k = tensor_rep(ad, Representation::trivial(sl2));
    RepMorphism iso{&v_k, &ad, QMatrix::identity(3)};
    CHECK(validate_rep_morphism(iso).empty());

    QMatrix skew = QMatrix::identity(3);
    skew.at(0, 1) = 1;
    RepMorphism bad{&v_k, &ad, skew};
    CHECK(!validate_rep_morphism(bad).empty());
}
