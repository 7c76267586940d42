#pragma once

#include <optional>
#include <vector>

#include "knotforms/certified.hpp"
#include "knotforms/laurent.hpp"

namespace knotforms {

// Isolated root of the symmetrized polynomial on the open interval (-2, 2)
// of the trace coordinate z = t + 1/t. Exact rational roots carry `exact`;
// either way [lo, hi] encloses the root and touches no other root.
struct ZCut {
    std::optional<mpq_class> exact;
    mpq_class lo, hi;

    QInterval interval() const { return {lo, hi}; }
};

// Unit-circle root locations of a symmetric Laurent polynomial (typically an
// Alexander polynomial): substitutes z = t + 1/t after stripping t = +-1
// factors and isolates the real roots of the resulting polynomial inside
// (-2, 2) with Sturm sequences. Cuts are returned in ascending z order, with
// enclosures no wider than max_width, pairwise disjoint. Repeated roots are
// collapsed. Throws NotSymmetric when delta(1/t) is not a unit multiple of
// delta(t).
std::vector<ZCut> unit_circle_root_cuts(const LaurentPoly& delta, const mpq_class& max_width);

// The trace-coordinate polynomial P with P(t + 1/t) * t^(deg/2) equal to the
// normalized, +-1-stripped symmetrization of delta. Exposed for tests.
LaurentPoly trace_polynomial(const LaurentPoly& delta);

}  // namespace knotforms
