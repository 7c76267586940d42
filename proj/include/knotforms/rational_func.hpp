#pragma once

#include <string>

#include "knotforms/laurent.hpp"

namespace knotforms {

// Element of Q(t) in reduced canonical form:
//   num: Laurent polynomial (may carry the unit t^k and all rational scale)
//   den: ordinary polynomial, coprime to num, with integer coprime
//        coefficients, positive leading coefficient, nonzero constant term.
// Zero is 0/1. Equality is component-wise.
class RationalFunc {
public:
    RationalFunc() : den_(LaurentPoly(1)) {}
    RationalFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly(1)) {}  // NOLINT
    RationalFunc(const mpq_class& c) : RationalFunc(LaurentPoly(c)) {}     // NOLINT
    RationalFunc(long c) : RationalFunc(LaurentPoly(c)) {}                 // NOLINT
    RationalFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True iff the value is a Laurent polynomial (denominator 1).
    bool is_laurent() const { return den_.is_one(); }

    RationalFunc operator-() const;
    RationalFunc operator+(const RationalFunc& o) const;
    RationalFunc operator-(const RationalFunc& o) const;
    RationalFunc operator*(const RationalFunc& o) const;
    RationalFunc operator/(const RationalFunc& o) const;  // ZeroDenominator
    RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
    RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
    RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }

    bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunc& o) const { return !(*this == o); }

private:
    friend RationalFunc rf_reduce(const LaurentPoly& num, const LaurentPoly& den);

    LaurentPoly num_;
    LaurentPoly den_;
};

// Reduced canonical form of num/den. Throws ZeroDenominator.
RationalFunc rf_reduce(const LaurentPoly& num, const LaurentPoly& den);

// t -> 1/t applied to the value.
RationalFunc involute(const RationalFunc& f);

// True iff f lies in Z[t, 1/t]: a Laurent polynomial with integer coefficients.
bool rf_is_integral_laurent(const RationalFunc& f);

// "num / den" in the polynomial textual form; plain "num" when den = 1.
std::string rf_str(const RationalFunc& f);

}  // namespace knotforms
