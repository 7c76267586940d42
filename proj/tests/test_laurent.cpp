#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "knotforms/rational_func.hpp"

using namespace knotforms;

static LaurentPoly P(const std::string& s) { return parse_poly(s); }

TEST_CASE("laurent arithmetic on frozen examples") {
    CHECK(P("t - 1") * P("t + 1") == P("t^2 - 1"));
    CHECK(P("t^2 - t + 1") + LaurentPoly() == P("t^2 - t + 1"));
    // (1 - t)(1 - 1/t) = 2 - t - 1/t, expanded by hand
    CHECK(P("1 - t") * P("1 - t^-1") == P("2 - t - t^-1"));
}

TEST_CASE("involution is a self-inverse ring map") {
    CHECK(involute(P("t^2 - t + 1")) == P("t^-2 - t^-1 + 1"));
    CHECK(involute(P("5/3")) == P("5/3"));
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = kftest::rand_laurent(rng), b = kftest::rand_laurent(rng);
        CHECK(involute(involute(a)) == a);
        CHECK(involute(a * b) == involute(a) * involute(b));
        CHECK(involute(a + b) == involute(a) + involute(b));
    }
}

TEST_CASE("unit normalization") {
    UnitNormal un = normalize_unit(P("-t^3 + t^2 - t"));
    CHECK(un.normal == P("t^2 - t + 1"));
    CHECK(un.sign == -1);
    CHECK(un.exp == 1);

    CHECK(normalize_unit(P("t^2 - t + 1")).normal == P("t^2 - t + 1"));
    CHECK(normalize_unit(P("t^2 - t + 1")).unit() == LaurentPoly(1));

    UnitNormal mono = normalize_unit(P("5*t^-4"));
    CHECK(mono.normal == P("5"));
    CHECK(mono.exp == -4);

    CHECK_THROWS_AS(normalize_unit(LaurentPoly()), ZeroPolynomial);

    std::mt19937_64 rng(102);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = kftest::rand_laurent(rng);
        if (p.is_zero()) continue;
        UnitNormal u = normalize_unit(p);
        CHECK(u.unit() * u.normal == p);  // round trip
        CHECK(u.normal.lowest_exp() == 0);
        CHECK(u.normal.trailing_coeff() > 0);
    }
}

TEST_CASE("rational function reduction") {
    CHECK(RationalFunc(P("t^2 - 1"), P("t - 1")) == RationalFunc(P("t + 1")));
    CHECK(RationalFunc(LaurentPoly(), P("t^3 + 2")).is_zero());
    CHECK_THROWS_AS(rf_reduce(P("1"), LaurentPoly()), ZeroDenominator);

    RationalFunc f(P("1 - t"), P("t^2 - t + 1"));
    CHECK(f.num() == P("1 - t"));
    CHECK(f.den() == P("t^2 - t + 1"));
    CHECK(f.den().leading_coeff() > 0);
    CHECK(f.den().coeff(0) != 0);
}

TEST_CASE("integrality predicate") {
    CHECK(rf_is_integral_laurent(RationalFunc(P("t^-1 + 3"))));
    CHECK_FALSE(rf_is_integral_laurent(RationalFunc(P("1"), P("t - 1"))));
    CHECK_FALSE(rf_is_integral_laurent(RationalFunc(P("1/2*t"))));
}

TEST_CASE("rational function field properties") {
    std::mt19937_64 rng(103);
    int done = 0;
    while (done < 150) {
        LaurentPoly a = kftest::rand_laurent(rng), b = kftest::rand_laurent(rng);
        LaurentPoly c = kftest::rand_laurent(rng), d = kftest::rand_laurent(rng);
        if (b.is_zero() || d.is_zero()) continue;
        ++done;
        RationalFunc f(a, b), g(c, d);
        // embedding is a ring map
        CHECK(RationalFunc(a) * RationalFunc(c) == RationalFunc(a * c));
        CHECK(RationalFunc(a) + RationalFunc(c) == RationalFunc(a + c));
        // field identities through the canonical form
        CHECK(f - f == RationalFunc());
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) - g == f);
        if (!g.is_zero()) CHECK((f / g) * g == f);
        // equality iff the difference reduces to zero
        CHECK((f == g) == (f - g).is_zero());
        // involution respects the arithmetic
        CHECK(involute(f * g) == involute(f) * involute(g));
    }
}

TEST_CASE("polynomial text format round trips") {
    CHECK(poly_str(P("t^2 - t + 1")) == "t^2 - t + 1");
    CHECK(poly_str(P("-1 + 2*t^3 - t^-2")) == "2*t^3 - 1 - t^-2");
    CHECK(poly_str(LaurentPoly()) == "0");
    CHECK(poly_str(P("3/2*t")) == "3/2*t");
    CHECK_THROWS_AS(parse_poly("t^"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("2 +"), ParseError);

    std::mt19937_64 rng(104);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly p = kftest::rand_laurent(rng);
        CHECK(parse_poly(poly_str(p)) == p);
    }
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("4/6") == mpq_class(2, 3));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational(" 1/1000000 ") == mpq_class(1, 1000000));
    CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("poly division and gcd over Q[t]") {
    auto [q, r] = poly_divmod(P("t^3 - 1"), P("t - 1"));
    CHECK(q == P("t^2 + t + 1"));
    CHECK(r.is_zero());
    CHECK(poly_gcd(P("t^2 - 1"), P("t^2 - 2*t + 1")) == P("t - 1"));
    CHECK(poly_gcd(P("t^2 + 1"), P("t - 1")) == P("1"));
    CHECK(square_free_part(P("t^2 - 2*t + 1")) == P("t - 1"));

    std::mt19937_64 rng(105);
    int done = 0;
    while (done < 150) {
        LaurentPoly a = kftest::rand_poly(rng), b = kftest::rand_poly(rng);
        if (b.is_zero()) continue;
        ++done;
        auto [qq, rr] = poly_divmod(a, b);
        CHECK(qq * b + rr == a);
        if (!rr.is_zero()) CHECK(rr.degree() < b.degree());
    }
}
