#pragma once

#include <vector>

#include "knotforms/laurent.hpp"
#include "knotforms/polymat.hpp"
#include "knotforms/seifert.hpp"

namespace knotforms {

// Presentation matrix V - t*V^T of the Alexander module.
Matrix<LaurentPoly> presentation(const SeifertMatrix& v);

// det(V - t*V^T), unit-normalized (lowest exponent 0, positive trailing
// coefficient). Satisfies delta(1) = +-1.
LaurentPoly alexander_poly(const SeifertMatrix& v);

// Invariant factors of the module presented by m over Q[t, 1/t]: the
// nontrivial diagonal entries of the Smith normal form, monic, each
// dividing the next. Throws SingularPresentation when det(m) = 0.
std::vector<LaurentPoly> invariant_factors(const Matrix<LaurentPoly>& m);

// Rationalized Alexander modules isomorphic, decided by invariant factors.
bool modules_isomorphic(const SeifertMatrix& v1, const SeifertMatrix& v2);

}  // namespace knotforms
