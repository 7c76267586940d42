#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotforms/rational.hpp"

namespace knotforms {

// Sparse Laurent polynomial over Q in the variable t: a map from integer
// exponent to nonzero rational coefficient. The zero polynomial is the
// empty map. Values are immutable in spirit; arithmetic returns fresh
// objects and never leaves zero coefficients behind.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const mpq_class& constant);  // NOLINT: implicit by design
    LaurentPoly(long constant) : LaurentPoly(mpq_class(constant)) {}
    LaurentPoly(int constant) : LaurentPoly(mpq_class(constant)) {}

    // c * t^e
    static LaurentPoly term(const mpq_class& c, long e);
    // t^e
    static LaurentPoly t(long e = 1) { return term(1, e); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const;
    bool is_one() const;

    // Lowest/highest exponent with nonzero coefficient. Throw on zero.
    long lowest_exp() const;
    long degree() const;

    mpq_class coeff(long e) const;
    mpq_class leading_coeff() const;   // coefficient at degree()
    mpq_class trailing_coeff() const;  // coefficient at lowest_exp()

    const std::map<long, mpq_class>& terms() const { return coeffs_; }
    std::size_t term_count() const { return coeffs_.size(); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Total order; used only for deterministic containers and output.
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    // Exact evaluation at a nonzero rational point (negative exponents allowed).
    mpq_class eval(const mpq_class& x) const;

    // Internal: inserts c*t^e, merging and dropping zeros.
    void add_term(long e, const mpq_class& c);

private:
    std::map<long, mpq_class> coeffs_;
};

// t -> 1/t on every term; a ring involution.
LaurentPoly involute(const LaurentPoly& p);

// Unit normalization: p = sign * t^exp * normal, where normal has lowest
// exponent 0 and positive trailing coefficient. Throws ZeroPolynomial.
struct UnitNormal {
    LaurentPoly normal;
    int sign = 1;   // +1 or -1
    long exp = 0;   // power of t in the unit
    LaurentPoly unit() const { return LaurentPoly::term(sign, exp); }
};
UnitNormal normalize_unit(const LaurentPoly& p);

// True when p and q differ by a unit +-t^k (both nonzero), or both are zero.
bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q);

// --- ordinary-polynomial helpers (no negative exponents) ---

bool is_ordinary_poly(const LaurentPoly& p);

// Division with remainder in Q[t]: a = b*q + r, deg r < deg b.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

// Monic gcd in Q[t]; gcd(0,0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient; throws on nonzero remainder.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly derivative(const LaurentPoly& p);

// p / gcd(p, p'): same roots, all simple.
LaurentPoly square_free_part(const LaurentPoly& p);

// Scales p to integer coefficients with content 1 and positive leading
// coefficient; returns the scaled polynomial (p times a positive or
// negative rational).
LaurentPoly primitive_integer_scale(const LaurentPoly& p);

LaurentPoly monic(const LaurentPoly& p);

// --- textual form: "t^2 - t + 1", "-1 + 2*t^3 - t^-2", coefficients "p/q" ---

std::string poly_str(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text);

}  // namespace knotforms
