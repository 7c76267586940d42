#include "knotforms/polymat.hpp"

#include <stdexcept>

namespace knotforms {

mpz_class det_integer(const Matrix<mpz_class>& m) {
    if (!m.is_square()) throw SizeMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Matrix<mpz_class> a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw std::logic_error("det_integer: inexact Bareiss division");
                a.at(i, j) = q;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

namespace {

// Scales each row by a unit t^k so entries are ordinary polynomials;
// returns the total exponent pulled out.
long clear_row_units(Matrix<LaurentPoly>& a) {
    long total = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        long low = 0;
        bool any = false;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            long l = a.at(i, j).lowest_exp();
            low = any ? std::min(low, l) : l;
            any = true;
        }
        if (!any || low == 0) continue;
        LaurentPoly shift = LaurentPoly::t(-low);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.at(i, j) = a.at(i, j) * shift;
        total += low;
    }
    return total;
}

// Pivot choice: lowest degree first, then row order; keeps intermediate
// polynomial degrees small and the elimination deterministic.
std::size_t pick_pivot_row(const Matrix<LaurentPoly>& a, std::size_t col, std::size_t from) {
    std::size_t best = a.rows();
    long best_deg = 0;
    for (std::size_t i = from; i < a.rows(); ++i) {
        if (a.at(i, col).is_zero()) continue;
        long d = a.at(i, col).degree();
        if (best == a.rows() || d < best_deg) {
            best = i;
            best_deg = d;
        }
    }
    return best;
}

}  // namespace

LaurentPoly det_poly(const Matrix<LaurentPoly>& m) {
    if (!m.is_square()) throw SizeMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    Matrix<LaurentPoly> a = m;
    long unit_exp = clear_row_units(a);
    LaurentPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = pick_pivot_row(a, k, k);
        if (p == n) return LaurentPoly();
        if (p != k) {
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = poly_exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    LaurentPoly det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det * LaurentPoly::t(unit_exp);
}

DetAdj det_and_adjugate(const Matrix<LaurentPoly>& m) {
    if (!m.is_square()) throw SizeMismatch("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {LaurentPoly(1), Matrix<LaurentPoly>(0, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero() && m.at(i, j).lowest_exp() < 0)
                throw std::logic_error("det_and_adjugate: expects ordinary polynomial entries");

    // One-step fraction-free Gauss-Jordan on [m | I]: afterwards the left
    // block is det * I and the right block is the adjugate (up to the row
    // permutation applied, undone below).
    Matrix<LaurentPoly> a(n, 2 * n, LaurentPoly(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = m.at(i, j);
        a.at(i, n + i) = LaurentPoly(1);
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = pick_pivot_row(a, k, k);
        if (p == n) throw SingularPresentation();
        if (p != k) {
            a.swap_rows(k, p);
            std::swap(perm[k], perm[p]);
            sign = -sign;
        }
        const LaurentPoly pivot = a.at(k, k);
        // Pivot row stays untouched; every other row is combined against it
        // and divided by the previous pivot (exact by the Bareiss identities).
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const LaurentPoly factor = a.at(i, k);
            for (std::size_t j = k + 1; j < 2 * n; ++j)
                a.at(i, j) = poly_exact_div(pivot * a.at(i, j) - factor * a.at(k, j), prev);
            a.at(i, k) = LaurentPoly(0);
        }
        prev = pivot;
    }
    // The algorithm ran on B = P*A (P the accumulated row permutation), so the
    // right block holds adj(B) and prev = det(B). Undo: det(A) = sign*det(B)
    // and adj(A) = sign * adj(B) * P, i.e. column k of adj(B) lands in column
    // perm[k] of adj(A).
    LaurentPoly det = prev;
    if (sign < 0) det = -det;
    DetAdj out;
    out.det = det;
    out.adj = Matrix<LaurentPoly>(n, n, LaurentPoly(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            LaurentPoly v = a.at(i, n + k);
            out.adj.at(i, perm[k]) = sign < 0 ? -v : v;
        }
    return out;
}

}  // namespace knotforms
