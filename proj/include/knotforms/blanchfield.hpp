#pragma once

#include <vector>

#include "knotforms/rational_func.hpp"
#include "knotforms/seifert.hpp"

namespace knotforms {

// (1-t) * (V - t*V^T)^{-1}, entrywise reduced. Represents the Blanchfield
// linking form; satisfies W(1/t)^T = W(t) exactly. Empty for the unknot.
Matrix<RationalFunc> blanchfield_matrix(const SeifertMatrix& v);

// conj(x)^T * W * y where conj applies t -> 1/t to each coordinate of x.
// Values are exact elements of Q(t); reduce mod Z[t,1/t] via
// pairings_equal_mod_integral. SizeMismatch when lengths differ.
RationalFunc pairing(const SeifertMatrix& v, const std::vector<LaurentPoly>& x,
                     const std::vector<LaurentPoly>& y);

// f == g in Q(t)/Z[t,1/t].
bool pairings_equal_mod_integral(const RationalFunc& f, const RationalFunc& g);

// Checks the Hermitian identity W(1/t)^T = W(t) entrywise.
bool is_hermitian(const Matrix<RationalFunc>& w);

}  // namespace knotforms
