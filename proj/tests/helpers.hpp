#pragma once

#include <random>
#include <vector>

#include "knotforms/gaussian.hpp"
#include "knotforms/laurent.hpp"
#include "knotforms/matrix.hpp"
#include "knotforms/polymat.hpp"
#include "knotforms/seifert.hpp"

namespace kftest {

using namespace knotforms;

inline mpq_class rand_rat(std::mt19937_64& rng, long lo = -4, long hi = 4) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 4);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline LaurentPoly rand_laurent(std::mt19937_64& rng, int max_terms = 4, long max_exp = 3) {
    std::uniform_int_distribution<int> terms(0, max_terms);
    std::uniform_int_distribution<long> exp(-max_exp, max_exp);
    LaurentPoly p;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) p.add_term(exp(rng), rand_rat(rng));
    return p;
}

inline LaurentPoly rand_poly(std::mt19937_64& rng, long max_deg = 4) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    LaurentPoly p;
    long d = deg(rng);
    for (long e = 0; e <= d; ++e) p.add_term(e, rand_rat(rng));
    return p;
}

// --- independent signature oracle -----------------------------------------
//
// Counts eigenvalue signs of a Hermitian matrix from the characteristic
// polynomial of its real doubling [[A, -B], [B, A]], using Sturm sequences
// and a gcd tower for multiplicities. Shares no code path with the
// congruence diagonalization it cross-checks.

namespace charpoly_oracle {

inline std::vector<LaurentPoly> sturm(const LaurentPoly& p) {
    std::vector<LaurentPoly> chain{p, derivative(p)};
    for (;;) {
        const LaurentPoly& a = chain[chain.size() - 2];
        const LaurentPoly& b = chain[chain.size() - 1];
        if (b.is_zero()) {
            chain.pop_back();
            break;
        }
        LaurentPoly r = poly_divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int sign_changes_at(const std::vector<LaurentPoly>& chain, const mpq_class& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Distinct roots of square-free p in the open interval (a, b).
inline int count_roots(const LaurentPoly& p, const mpq_class& a, const mpq_class& b) {
    auto chain = sturm(p);
    return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

// Signature = (positive eigenvalues) - (negative eigenvalues), counted with
// multiplicity via the tower a_0 = chi, a_{k+1} = gcd(a_k, a_k').
inline int signature_from_charpoly(const LaurentPoly& chi) {
    mpq_class bound = 1;
    for (const auto& [e, c] : chi.terms()) {
        mpq_class m = abs(c / chi.leading_coeff());
        if (m > bound) bound = m;
    }
    bound += 1;
    int sig = 0;
    LaurentPoly a = chi;
    while (!a.is_zero() && a.degree() > 0) {
        LaurentPoly s = square_free_part(a);
        sig += count_roots(s, mpq_class(0), bound);
        sig -= count_roots(s, -bound, mpq_class(0));
        a = poly_gcd(a, derivative(a));
    }
    return sig;
}

}  // namespace charpoly_oracle

// Hermitian (GaussRat) matrix signature through the independent route.
inline int oracle_hermitian_signature(const Matrix<GaussRat>& h) {
    const std::size_t n = h.rows();
    Matrix<LaurentPoly> m(2 * n, 2 * n, LaurentPoly(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = LaurentPoly(h.at(i, j).re);
            m.at(n + i, n + j) = LaurentPoly(h.at(i, j).re);
            m.at(i, n + j) = LaurentPoly(-h.at(i, j).im);
            m.at(n + i, j) = LaurentPoly(h.at(i, j).im);
        }
    // chi(x) = det(M - x I); the variable of LaurentPoly plays the role of x.
    for (std::size_t i = 0; i < 2 * n; ++i) m.at(i, i) -= LaurentPoly::t();
    LaurentPoly chi = det_poly(m);
    int doubled = charpoly_oracle::signature_from_charpoly(chi);
    if (doubled % 2 != 0) throw std::logic_error("oracle: doubled signature is odd");
    return doubled / 2;
}

// The Levine-Tristram pencil, duplicated here so the oracle path does not
// depend on the implementation under test.
inline Matrix<GaussRat> oracle_pencil(const SeifertMatrix& v, const mpq_class& re,
                                      const mpq_class& im) {
    const std::size_t n = v.size();
    GaussRat w(re, im);
    GaussRat a = GaussRat(mpq_class(1)) - w;
    GaussRat b = a.conj();
    Matrix<GaussRat> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = a * GaussRat(mpq_class(v.at(i, j))) + b * GaussRat(mpq_class(v.at(j, i)));
    return h;
}

}  // namespace kftest
