#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "knotforms/alexander.hpp"
#include "knotforms/blanchfield.hpp"

using namespace knotforms;

static LaurentPoly P(const std::string& s) { return parse_poly(s); }

TEST_CASE("trefoil Blanchfield matrix, inverted by hand") {
    SeifertMatrix v = catalog("left_trefoil");
    Matrix<RationalFunc> w = blanchfield_matrix(v);
    LaurentPoly delta = P("t^2 - t + 1");
    LaurentPoly omt = P("1 - t");
    CHECK(w.at(0, 0) == RationalFunc(omt * P("1 - t"), delta));
    CHECK(w.at(0, 1) == RationalFunc(omt * P("1"), delta));
    CHECK(w.at(1, 0) == RationalFunc(omt * P("-t"), delta));
    CHECK(w.at(1, 1) == RationalFunc(omt * P("1 - t"), delta));
    CHECK(blanchfield_matrix(SeifertMatrix()).rows() == 0);
}

TEST_CASE("adjugate route agrees with the definition") {
    // (V - tV^T) * W = (1-t) * I, so the fraction-free elimination really
    // computed the inverse.
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        SeifertMatrix v = random_seifert(1 + i % 3, rng);
        Matrix<LaurentPoly> a = presentation(v);
        Matrix<RationalFunc> w = blanchfield_matrix(v);
        const std::size_t n = v.size();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                RationalFunc acc;
                for (std::size_t k = 0; k < n; ++k)
                    acc += RationalFunc(a.at(r, k)) * w.at(k, c);
                CHECK(acc == (r == c ? RationalFunc(P("1 - t")) : RationalFunc()));
            }
    }
}

TEST_CASE("Hermitian identity holds exactly") {
    for (const auto& name : catalog_names())
        CHECK(is_hermitian(blanchfield_matrix(catalog(name))));

    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        SeifertMatrix v = random_seifert(1 + i % 2, rng);
        SeifertMatrix moved = random_s_equivalent(v, 2, rng());
        CHECK(is_hermitian(blanchfield_matrix(moved)));
    }
}

TEST_CASE("delta clears every denominator") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        SeifertMatrix v = random_seifert(1 + i % 3, rng);
        RationalFunc delta{alexander_poly(v)};
        Matrix<RationalFunc> w = blanchfield_matrix(v);
        for (std::size_t r = 0; r < w.rows(); ++r)
            for (std::size_t c = 0; c < w.cols(); ++c)
                CHECK((delta * w.at(r, c)).is_laurent());
    }
}

TEST_CASE("pairing values and sesquilinearity") {
    SeifertMatrix v = catalog("left_trefoil");
    std::vector<LaurentPoly> e1{P("1"), LaurentPoly()};
    std::vector<LaurentPoly> zero{LaurentPoly(), LaurentPoly()};
    CHECK(pairing(v, e1, e1) == RationalFunc(P("1 - t") * P("1 - t"), P("t^2 - t + 1")));
    CHECK(pairing(v, zero, e1).is_zero());
    CHECK_THROWS_AS(pairing(v, {P("1")}, e1), SizeMismatch);

    std::mt19937_64 rng(24);
    for (int i = 0; i < 60; ++i) {
        SeifertMatrix r = random_seifert(1, rng);
        std::vector<LaurentPoly> x{kftest::rand_laurent(rng), kftest::rand_laurent(rng)};
        std::vector<LaurentPoly> y{kftest::rand_laurent(rng), kftest::rand_laurent(rng)};
        // hermitian symmetry: <x,y> = conj(<y,x>)
        CHECK(pairing(r, x, y) == involute(pairing(r, y, x)));
        // sesquilinearity in scalar multiples
        LaurentPoly p = kftest::rand_laurent(rng), q = kftest::rand_laurent(rng);
        std::vector<LaurentPoly> xp{x[0] * p, x[1] * p};
        std::vector<LaurentPoly> yq{y[0] * q, y[1] * q};
        CHECK(pairing(r, xp, yq) ==
              RationalFunc(involute(p)) * pairing(r, x, y) * RationalFunc(q));
    }
}

TEST_CASE("coset equality mod Z[t,1/t]") {
    RationalFunc f(P("1"), P("t - 1"));
    CHECK(pairings_equal_mod_integral(f, f + RationalFunc(P("t^3"))));
    CHECK_FALSE(pairings_equal_mod_integral(f, RationalFunc(P("1"), P("t + 1"))));
    CHECK_FALSE(pairings_equal_mod_integral(RationalFunc(P("1/2*t")), RationalFunc()));
}
