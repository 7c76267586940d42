#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "knotforms/signatures.hpp"

using namespace knotforms;
using kftest::oracle_hermitian_signature;
using kftest::oracle_pencil;

TEST_CASE("circle points") {
    CirclePoint one = circle_point(0);
    CHECK(one.re == 1);
    CHECK(one.im == 0);
    CirclePoint i = circle_point(1);
    CHECK(i.re == 0);
    CHECK(i.im == 1);
    CirclePoint p = circle_point(mpq_class(1, 2));
    CHECK(p.re == mpq_class(3, 5));
    CHECK(p.im == mpq_class(4, 5));
    CHECK_THROWS(CirclePoint(1, 1));

    std::mt19937_64 rng(31);
    for (int k = 0; k < 100; ++k) {
        mpq_class s = kftest::rand_rat(rng, -30, 30);
        CirclePoint w = circle_point(s);
        CHECK(w.re * w.re + w.im * w.im == 1);
    }
}

TEST_CASE("Levine-Tristram signature at fixed points") {
    SeifertMatrix trefoil = catalog("left_trefoil");
    CHECK(lt_signature_at(trefoil, CirclePoint(-1, 0)) == 2);
    CHECK(lt_signature_at(trefoil, circle_point(1)) == 2);  // omega = i
    CHECK(lt_signature_at(SeifertMatrix(), circle_point(1)) == 0);
    CHECK(lt_signature_at(catalog("right_trefoil"), CirclePoint(-1, 0)) == -2);

    CHECK_THROWS_AS(lt_signature_at(trefoil, CirclePoint(1, 0)), AtUnity);
}

TEST_CASE("rational circle points are never roots of a knot delta") {
    // The minimal polynomial of a rational non-real circle point divides
    // c*t^2 - 2a*t + c with a^2 + b^2 = c^2, whose value at t = 1 is even.
    // A factor like that would force delta(1) even, contradicting
    // delta(1) = +-1, so AtRoot cannot fire at a CirclePoint for valid
    // Seifert input; evaluation stays nonzero everywhere we can sample.
    std::mt19937_64 rng(39);
    for (const auto& name : catalog_names()) {
        SeifertMatrix v = catalog(name);
        if (v.size() == 0) continue;
        for (int j = 0; j < 20; ++j) {
            CirclePoint w = circle_point(kftest::rand_rat(rng, -20, 20));
            if (w.re == 1) continue;
            CHECK_NOTHROW(lt_signature_at(v, w));
        }
    }
}

TEST_CASE("ordinary signature") {
    CHECK(ordinary_signature(catalog("left_trefoil")) == 2);
    CHECK(ordinary_signature(catalog("right_trefoil")) == -2);
    CHECK(ordinary_signature(catalog("figure_eight")) == 0);
    CHECK(ordinary_signature(SeifertMatrix()) == 0);
    CHECK(ordinary_signature(catalog("granny_knot")) == 4);

    std::mt19937_64 rng(32);
    for (int k = 0; k < 50; ++k) {
        SeifertMatrix a = kftest::random_seifert(1 + k % 2, rng);
        SeifertMatrix b = kftest::random_seifert(1 + (k / 2) % 2, rng);
        CHECK(ordinary_signature(block_sum(a, b)) ==
              ordinary_signature(a) + ordinary_signature(b));
        // sigma(-V) = -sigma(V)
        CHECK(ordinary_signature(inverse(a)) == -ordinary_signature(a));
    }
}

TEST_CASE("signature agrees with the characteristic-polynomial oracle") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long> srand(-12, 12);
    int done = 0;
    while (done < 60) {
        SeifertMatrix v = kftest::random_seifert(1 + done % 2, rng);
        mpq_class s(srand(rng), 7);
        s.canonicalize();
        CirclePoint omega = circle_point(s);
        if (omega.re == 1) continue;
        int fast;
        try {
            fast = lt_signature_at(v, omega);
        } catch (const AtRoot&) {
            continue;
        }
        int slow = oracle_hermitian_signature(oracle_pencil(v, omega.re, omega.im));
        CHECK(fast == slow);
        ++done;
    }
}

TEST_CASE("signature consistency at omega = -1") {
    std::mt19937_64 rng(34);
    for (int k = 0; k < 60; ++k) {
        SeifertMatrix v = kftest::random_seifert(1 + k % 3, rng);
        LaurentPoly delta = alexander_poly(v);
        if (delta.eval(-1) == 0) continue;  // cannot happen for knot matrices
        CHECK(lt_signature_at(v, CirclePoint(-1, 0)) == ordinary_signature(v));
    }
}

TEST_CASE("trefoil profile: cuts at 1/6 and 5/6") {
    SignatureProfile p = signature_profile(catalog("left_trefoil"));
    REQUIRE(p.cuts.size() == 2);
    REQUIRE(p.arcs.size() == 2);
    CHECK(p.cuts[0].exact_theta);
    CHECK(*p.cuts[0].exact_theta == mpq_class(1, 6));
    CHECK(*p.cuts[1].exact_theta == mpq_class(5, 6));
    CHECK(*p.cuts[0].exact_z == 1);
    CHECK(p.arcs[0] == 2);   // on (1/6, 5/6)
    CHECK(p.arcs[1] == 0);   // through theta = 0
}

TEST_CASE("profiles of the simple knots") {
    SignatureProfile unknot = signature_profile(SeifertMatrix());
    CHECK(unknot.cuts.empty());
    CHECK(unknot.constant_value == 0);

    SignatureProfile fig8 = signature_profile(catalog("figure_eight"));
    CHECK(fig8.cuts.empty());
    CHECK(fig8.constant_value == 0);

    // granny: same cuts as the trefoil, sigma = 4 in the middle
    SignatureProfile granny = signature_profile(catalog("granny_knot"));
    REQUIRE(granny.cuts.size() == 2);
    CHECK(granny.arcs[0] == 4);
    CHECK(granny.arcs[1] == 0);
}

TEST_CASE("mirror negates the profile arc-for-arc") {
    std::mt19937_64 rng(35);
    for (int k = 0; k < 25; ++k) {
        SeifertMatrix v = kftest::random_seifert(1 + k % 2, rng);
        SignatureProfile p = signature_profile(v);
        SignatureProfile q = signature_profile(mirror(v));
        REQUIRE(p.arcs.size() == q.arcs.size());
        REQUIRE(p.cuts.size() == q.cuts.size());
        for (std::size_t i = 0; i < p.arcs.size(); ++i) CHECK(p.arcs[i] == -q.arcs[i]);
        if (p.cuts.empty()) {
            CHECK(*p.constant_value == -*q.constant_value);
        }
        // reverse preserves the profile
        SignatureProfile r = signature_profile(reverse(v));
        CHECK(p.arcs == r.arcs);
    }
}

TEST_CASE("piecewise constancy: extra samples inside each arc agree") {
    std::mt19937_64 rng(36);
    for (int k = 0; k < 15; ++k) {
        SeifertMatrix v = kftest::random_seifert(1 + k % 3, rng);
        LaurentPoly delta = alexander_poly(v);
        auto cuts = unit_circle_root_cuts(delta, mpq_class(1, 1 << 16));
        SignatureProfile p = signature_profile(v);
        // sample the wrap arc (through theta = 0 <-> z near 2) five times
        mpq_class zlo = cuts.empty() ? mpq_class(-2) : cuts.back().hi;
        int wrap_sigma = p.cuts.empty() ? *p.constant_value : p.arcs.back();
        for (int j = 1; j <= 5; ++j) {
            mpq_class s = mpq_class(j, 100) * (2 - zlo) / 4;  // small s => z near 2
            CirclePoint w = circle_point(s);
            mpq_class z = 2 * w.re;
            if (z <= zlo) continue;
            CHECK(lt_signature_at(v, w) == wrap_sigma);
        }
    }
}

TEST_CASE("signature integral on the catalog") {
    mpq_class eps(1, 1000000);
    auto trefoil = signature_integral(catalog("left_trefoil"), eps);
    CHECK(trefoil.exact());
    CHECK(trefoil.lo == mpq_class(4, 3));

    auto right = signature_integral(catalog("right_trefoil"), eps);
    CHECK(right.exact());
    CHECK(right.lo == mpq_class(-4, 3));

    auto unknot = signature_integral(SeifertMatrix(), eps);
    CHECK(unknot.exact());
    CHECK(unknot.lo == 0);

    auto fig8 = signature_integral(catalog("figure_eight"), eps);
    CHECK(fig8.exact());
    CHECK(fig8.lo == 0);

    auto granny = signature_integral(catalog("granny_knot"), eps);
    CHECK(granny.exact());
    CHECK(granny.lo == mpq_class(8, 3));

    auto square = signature_integral(catalog("square_knot"), eps);
    CHECK(square.exact());
    CHECK(square.lo == 0);
}

TEST_CASE("integral antisymmetry and additivity") {
    std::mt19937_64 rng(37);
    mpq_class eps(1, 100000);
    for (int k = 0; k < 12; ++k) {
        SeifertMatrix a = kftest::random_seifert(1 + k % 2, rng);
        SeifertMatrix b = kftest::random_seifert(1, rng);
        auto ia = signature_integral(a, eps);
        auto inv = signature_integral(inverse(a), eps);
        CHECK(inv.lo == -ia.hi);
        CHECK(inv.hi == -ia.lo);
        auto ib = signature_integral(b, eps);
        auto isum = signature_integral(block_sum(a, b), eps / 2);
        // interval containment: I(a+b) inside I(a) + I(b)
        CHECK(isum.lo >= ia.lo + ib.lo - eps);
        CHECK(isum.hi <= ia.hi + ib.hi + eps);
    }
}

TEST_CASE("integral with irrational cuts is certified, not exact") {
    // delta with roots at the primitive 14th roots of unity
    Matrix<mpz_class> m(6, 6, mpz_class(0));
    // Seifert matrix of the (2,7) torus knot: lower bidiagonal pattern
    for (int i = 0; i < 6; ++i) {
        m.at(i, i) = -1;
        if (i + 1 < 6) m.at(i + 1, i) = 1;
    }
    SeifertMatrix torus27(m);
    LaurentPoly delta = alexander_poly(torus27);
    CHECK(poly_str(delta) == "t^6 - t^5 + t^4 - t^3 + t^2 - t + 1");
    mpq_class eps(1, 1 << 20);
    auto iv = signature_integral(torus27, eps);
    CHECK_FALSE(iv.exact());
    CHECK(iv.hi - iv.lo < eps);
    SignatureProfile p = signature_profile(torus27);
    REQUIRE(p.cuts.size() == 6);
    // signature ladder down to the middle arc and back up
    CHECK(p.arcs == std::vector<int>{-2, -4, -6, -4, -2, 0});
    // cuts at theta = 1/14, 3/14, 5/14 and mirrors: arcs of length 1/7 carry
    // -2, -4, -4, -2 and the middle arc of length 2/7 carries -6, so the
    // integral is -(2+4+4+2)/7 - 12/7 = -24/7
    CHECK(iv.lo.get_d() == doctest::Approx(-24.0 / 7).epsilon(1e-6));
}

TEST_CASE("profile is an S-equivalence invariant") {
    std::mt19937_64 rng(38);
    for (int k = 0; k < 40; ++k) {
        SeifertMatrix v = kftest::random_seifert(1 + k % 2, rng);
        SeifertMatrix w = random_s_equivalent(v, 3, rng());
        SignatureProfile pv = signature_profile(v);
        SignatureProfile pw = signature_profile(w);
        CHECK(pv.arcs == pw.arcs);
        CHECK(pv.constant_value == pw.constant_value);
        REQUIRE(pv.cuts.size() == pw.cuts.size());
        for (std::size_t i = 0; i < pv.cuts.size(); ++i) {
            CHECK(pv.cuts[i].exact_theta == pw.cuts[i].exact_theta);
            // cut data comes from the same normalized delta, so the
            // enclosures agree verbatim
            CHECK(pv.cuts[i].z.lo == pw.cuts[i].z.lo);
            CHECK(pv.cuts[i].z.hi == pw.cuts[i].z.hi);
        }
    }
}
