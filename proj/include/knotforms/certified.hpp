#pragma once

#include <gmpxx.h>

#include "knotforms/errors.hpp"

namespace knotforms {

// Closed rational interval [lo, hi] used as a certified enclosure.
struct QInterval {
    mpq_class lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(const mpq_class& v) : lo(v), hi(v) {}  // NOLINT
    QInterval(const mpq_class& l, const mpq_class& h) : lo(l), hi(h) {}

    bool is_point() const { return lo == hi; }
    mpq_class width() const { return hi - lo; }
    bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator-() const { return {-hi, -lo}; }

    // Scale by an exact rational.
    QInterval scaled(const mpq_class& s) const {
        return s >= 0 ? QInterval{lo * s, hi * s} : QInterval{hi * s, lo * s};
    }
};

inline bool disjoint(const QInterval& a, const QInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

// Enclosure of sqrt(w) for w >= 0 with width at most 2^-prec_bits.
QInterval sqrt_enclosure(const mpq_class& w, unsigned prec_bits);

// Enclosure of arctan(x) for x >= 0; width shrinks with prec_bits.
QInterval atan_enclosure(const mpq_class& x, unsigned prec_bits);

// Enclosure of pi (Machin's formula with truncation bounds).
QInterval pi_enclosure(unsigned prec_bits);

// Enclosure of the normalized circle coordinate
//   theta(z) = arctan(sqrt((2-z)/(2+z))) / pi  in  [0, 1/2)
// for z in (-2, 2]; decreasing in z. Domain error outside.
QInterval theta_enclosure(const QInterval& z, unsigned prec_bits);

}  // namespace knotforms
