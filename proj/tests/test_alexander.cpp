#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "knotforms/alexander.hpp"

using namespace knotforms;

static LaurentPoly P(const std::string& s) { return parse_poly(s); }

TEST_CASE("presentation matrix V - t V^T") {
    SeifertMatrix v = catalog("left_trefoil");
    Matrix<LaurentPoly> m = presentation(v);
    CHECK(m.at(0, 0) == P("1 - t"));
    CHECK(m.at(0, 1) == P("-1"));
    CHECK(m.at(1, 0) == P("t"));
    CHECK(m.at(1, 1) == P("1 - t"));
    CHECK(presentation(SeifertMatrix()).rows() == 0);

    // at t = 1 the presentation becomes V - V^T
    std::mt19937_64 rng(7);
    SeifertMatrix r = random_seifert(2, rng);
    Matrix<LaurentPoly> pm = presentation(r);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(pm.at(i, j).eval(1) == mpq_class(r.at(i, j) - r.at(j, i)));
}

TEST_CASE("alexander polynomial") {
    CHECK(alexander_poly(catalog("left_trefoil")) == P("t^2 - t + 1"));
    CHECK(alexander_poly(catalog("figure_eight")) == P("t^2 - 3*t + 1"));
    CHECK(alexander_poly(SeifertMatrix()) == P("1"));

    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        SeifertMatrix a = random_seifert(1 + i % 2, rng);
        SeifertMatrix b = random_seifert(1 + (i / 2) % 2, rng);
        // multiplicativity under block sum
        CHECK(equal_up_to_unit(alexander_poly(block_sum(a, b)),
                               alexander_poly(a) * alexander_poly(b)));
        // symmetry and |delta(1)| = 1
        LaurentPoly d = alexander_poly(a);
        CHECK(equal_up_to_unit(involute(d), d));
        CHECK(abs(d.eval(1)) == 1);
    }
}

TEST_CASE("invariant factors on frozen examples") {
    auto trefoil = invariant_factors(presentation(catalog("left_trefoil")));
    REQUIRE(trefoil.size() == 1);
    CHECK(trefoil[0] == P("t^2 - t + 1"));

    Matrix<LaurentPoly> id(3, 3, LaurentPoly(0));
    for (int i = 0; i < 3; ++i) id.at(i, i) = LaurentPoly(1);
    CHECK(invariant_factors(id).empty());

    Matrix<LaurentPoly> diag(2, 2, LaurentPoly(0));
    diag.at(0, 0) = P("t - 1");
    diag.at(1, 1) = P("t - 1") * P("t - 2");
    auto chain = invariant_factors(diag);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0] == P("t - 1"));
    CHECK(chain[1] == P("t^2 - 3*t + 2"));

    Matrix<LaurentPoly> singular(2, 2, LaurentPoly(0));
    singular.at(0, 0) = P("t");
    CHECK_THROWS_AS(invariant_factors(singular), SingularPresentation);
}

TEST_CASE("product of invariant factors is delta up to unit") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 60; ++i) {
        SeifertMatrix v = random_seifert(1 + i % 3, rng);
        auto factors = invariant_factors(presentation(v));
        LaurentPoly prod(1);
        for (const auto& f : factors) prod *= f;
        CHECK(equal_up_to_unit(prod, alexander_poly(v)));
        // each factor divides the next
        for (std::size_t k = 0; k + 1 < factors.size(); ++k)
            CHECK(poly_divmod(factors[k + 1], factors[k]).second.is_zero());
    }
}

TEST_CASE("invariant factors are S-equivalence invariants") {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 200; ++i) {
        SeifertMatrix v = random_seifert(1 + i % 2, rng);
        SeifertMatrix w = random_s_equivalent(v, 1 + i % 4, rng());
        CHECK(invariant_factors(presentation(v)) == invariant_factors(presentation(w)));
    }
}

TEST_CASE("module isomorphism") {
    CHECK_FALSE(modules_isomorphic(catalog("left_trefoil"), catalog("unknot")));
    CHECK_FALSE(modules_isomorphic(catalog("left_trefoil"), catalog("figure_eight")));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        SeifertMatrix v = random_seifert(1 + i % 3, rng);
        // a knot and its inverse have isomorphic Alexander modules
        CHECK(modules_isomorphic(v, inverse(v)));
        CHECK(modules_isomorphic(v, random_s_equivalent(v, 3, rng())));
    }
}
