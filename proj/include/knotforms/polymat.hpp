#pragma once

#include <gmpxx.h>

#include "knotforms/laurent.hpp"
#include "knotforms/matrix.hpp"

namespace knotforms {

// Exact determinant of an integer matrix (fraction-free Bareiss).
mpz_class det_integer(const Matrix<mpz_class>& m);

// Exact determinant of a Laurent-polynomial matrix. Rows are scaled by
// units t^k to clear negative exponents; the unit is divided back out.
LaurentPoly det_poly(const Matrix<LaurentPoly>& m);

// Determinant and adjugate of a square Laurent-polynomial matrix via
// fraction-free Gauss-Jordan elimination, so that adj * m = det * I.
struct DetAdj {
    LaurentPoly det;
    Matrix<LaurentPoly> adj;
};
DetAdj det_and_adjugate(const Matrix<LaurentPoly>& m);  // SingularPresentation on det = 0

}  // namespace knotforms
