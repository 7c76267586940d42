#include "knotforms/blanchfield.hpp"

#include "knotforms/alexander.hpp"

namespace knotforms {

Matrix<RationalFunc> blanchfield_matrix(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    if (n == 0) return Matrix<RationalFunc>(0, 0);
    DetAdj da = det_and_adjugate(presentation(v));
    const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
    Matrix<RationalFunc> w(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w.at(i, j) = rf_reduce(one_minus_t * da.adj.at(i, j), da.det);
    return w;
}

RationalFunc pairing(const SeifertMatrix& v, const std::vector<LaurentPoly>& x,
                     const std::vector<LaurentPoly>& y) {
    const std::size_t n = v.size();
    if (x.size() != n || y.size() != n) throw SizeMismatch("pairing vectors");
    Matrix<RationalFunc> w = blanchfield_matrix(v);
    RationalFunc acc;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        RationalFunc xi(involute(x[i]));
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            acc += xi * w.at(i, j) * RationalFunc(y[j]);
        }
    }
    return acc;
}

bool pairings_equal_mod_integral(const RationalFunc& f, const RationalFunc& g) {
    return rf_is_integral_laurent(f - g);
}

bool is_hermitian(const Matrix<RationalFunc>& w) {
    if (!w.is_square()) return false;
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (involute(w.at(j, i)) != w.at(i, j)) return false;
    return true;
}

}  // namespace knotforms
