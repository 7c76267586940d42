#include "knotforms/alexander.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace knotforms {

Matrix<LaurentPoly> presentation(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    Matrix<LaurentPoly> m(n, n);
    const LaurentPoly t = LaurentPoly::t();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = LaurentPoly(mpq_class(v.at(i, j))) - t * LaurentPoly(mpq_class(v.at(j, i)));
    return m;
}

LaurentPoly alexander_poly(const SeifertMatrix& v) {
    LaurentPoly d = det_poly(presentation(v));
    return normalize_unit(d).normal;  // det(V - V^T) = 1 keeps d nonzero
}

namespace {

// Strips units t^k from every entry of row/column-cleared working copy and
// finds the position of the lowest-degree nonzero entry (row-major ties).
std::optional<std::pair<std::size_t, std::size_t>> lowest_degree_entry(
    const Matrix<LaurentPoly>& m, std::size_t from) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    long best_deg = 0;
    for (std::size_t i = from; i < m.rows(); ++i)
        for (std::size_t j = from; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            long d = m.at(i, j).degree();
            if (!best || d < best_deg) {
                best = {i, j};
                best_deg = d;
            }
        }
    return best;
}

// Scales whole rows by units t^k (a legal presentation change) so every
// entry is an ordinary polynomial.
void clear_units(Matrix<LaurentPoly>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        long low = 0;
        bool any = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            long l = m.at(i, j).lowest_exp();
            low = any ? std::min(low, l) : l;
            any = true;
        }
        if (!any || low == 0) continue;
        LaurentPoly shift = LaurentPoly::t(-low);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * shift;
    }
}

}  // namespace

std::vector<LaurentPoly> invariant_factors(const Matrix<LaurentPoly>& m) {
    if (!m.is_square()) throw SizeMismatch("presentation matrix");
    if (m.rows() == 0) return {};
    if (det_poly(m).is_zero()) throw SingularPresentation();

    Matrix<LaurentPoly> a = m;
    clear_units(a);
    const std::size_t n = a.rows();
    std::vector<LaurentPoly> diag;

    for (std::size_t k = 0; k < n; ++k) {
        auto pos = lowest_degree_entry(a, k);
        if (!pos) break;  // cannot happen for nonsingular input
        a.swap_rows(k, pos->first);
        a.swap_cols(k, pos->second);

        for (;;) {
            // Reduce column k below the pivot, then row k right of it.
            bool touched = false;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a.at(i, k).is_zero()) continue;
                auto [q, r] = poly_divmod(a.at(i, k), a.at(k, k));
                if (!q.is_zero()) {
                    for (std::size_t j = k; j < n; ++j) a.at(i, j) -= q * a.at(k, j);
                }
                if (!r.is_zero()) {
                    a.swap_rows(k, i);  // strictly smaller degree becomes the pivot
                    touched = true;
                    break;
                }
            }
            if (touched) continue;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a.at(k, j).is_zero()) continue;
                auto [q, r] = poly_divmod(a.at(k, j), a.at(k, k));
                if (!q.is_zero()) {
                    for (std::size_t i = k; i < n; ++i) a.at(i, j) -= q * a.at(i, k);
                }
                if (!r.is_zero()) {
                    a.swap_cols(k, j);
                    touched = true;
                    break;
                }
            }
            if (touched) continue;

            // Cross is clear. Enforce divisibility of the remaining block.
            bool divides_all = true;
            for (std::size_t i = k + 1; i < n && divides_all; ++i)
                for (std::size_t j = k + 1; j < n && divides_all; ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    if (!poly_divmod(a.at(i, j), a.at(k, k)).second.is_zero()) {
                        // Fold the offending row into the pivot row and redo.
                        for (std::size_t c = k; c < n; ++c) a.at(k, c) += a.at(i, c);
                        divides_all = false;
                    }
                }
            if (divides_all) break;
        }
        // Units of Q[t,1/t] are c*t^k: strip the t-power, then make monic.
        diag.push_back(monic(normalize_unit(a.at(k, k)).normal));
    }

    std::vector<LaurentPoly> factors;
    for (const auto& f : diag)
        if (!f.is_constant()) factors.push_back(f);

    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (!poly_divmod(factors[i + 1], factors[i]).second.is_zero())
            throw std::logic_error("invariant_factors: divisibility chain broken");
    return factors;
}

bool modules_isomorphic(const SeifertMatrix& v1, const SeifertMatrix& v2) {
    return invariant_factors(presentation(v1)) == invariant_factors(presentation(v2));
}

}  // namespace knotforms
