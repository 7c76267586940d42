#pragma once

#include "knotforms/rational.hpp"

namespace knotforms {

// Gaussian rational a + b*i with exact components. Supports the field
// operations needed for Hermitian congruence diagonalization.
struct GaussRat {
    mpq_class re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(const mpq_class& r) : re(r), im(0) {}  // NOLINT
    GaussRat(long r) : re(r), im(0) {}              // NOLINT
    GaussRat(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }  // |z|^2

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        if (o.is_zero()) throw ZeroDenominator();
        mpq_class n = o.norm();
        GaussRat p = *this * o.conj();
        return {p.re / n, p.im / n};
    }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

}  // namespace knotforms
