#pragma once

#include <optional>
#include <vector>

#include "knotforms/certified.hpp"
#include "knotforms/gaussian.hpp"
#include "knotforms/roots.hpp"
#include "knotforms/seifert.hpp"

namespace knotforms {

// Exact rational point on the unit circle.
struct CirclePoint {
    mpq_class re, im;

    CirclePoint(const mpq_class& r, const mpq_class& i);  // validates re^2 + im^2 = 1

    bool is_one() const { return re == 1; }
    CirclePoint conjugate() const { return {re, -im}; }
};

// Rational parametrization omega(s) = ((1-s^2) + 2s*i) / (1+s^2); s = 0 is 1,
// s = 1 is i, s -> infinity approaches -1 along the upper semicircle.
CirclePoint circle_point(const mpq_class& s);

// Signature of the Hermitian matrix (1-omega)V + (1-conj(omega))V^T, an even
// integer. AtUnity for omega = 1, AtRoot where the Alexander polynomial
// vanishes.
int lt_signature_at(const SeifertMatrix& v, const CirclePoint& omega);

// Signature of V + V^T.
int ordinary_signature(const SeifertMatrix& v);

// One jump location of the signature function, as an angle theta in (0,1)
// with omega = exp(2*pi*i*theta). Exact theta is recorded in the five
// rational-cosine cases (z in {-2,-1,0,1,2}); the z coordinate is exact
// whenever the root of the trace polynomial is rational.
struct ThetaCut {
    std::optional<mpq_class> exact_theta;
    QInterval theta;
    std::optional<mpq_class> exact_z;
    QInterval z;
};

// Arc decomposition of the circle: cuts in ascending theta order, one even
// signature value per open arc. arcs[i] sits between cuts[i] and cuts[i+1];
// the last arc wraps through theta = 0. A cut-free profile is the constant
// recorded in constant_value.
struct SignatureProfile {
    std::vector<ThetaCut> cuts;
    std::vector<int> arcs;
    std::optional<int> constant_value;  // set iff cuts is empty
};

SignatureProfile signature_profile(const SeifertMatrix& v);

// Certified interval for the integral of the Levine-Tristram signatures over
// the circle of unit length. Width < eps; a point interval when every cut is
// an exact rational angle.
struct CertifiedInterval {
    mpq_class lo, hi;
    bool exact() const { return lo == hi; }
};

CertifiedInterval signature_integral(const SeifertMatrix& v, const mpq_class& eps);

}  // namespace knotforms
