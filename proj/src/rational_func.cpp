#include "knotforms/rational_func.hpp"

namespace knotforms {

RationalFunc::RationalFunc(const LaurentPoly& num, const LaurentPoly& den) {
    *this = rf_reduce(num, den);
}

RationalFunc rf_reduce(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw ZeroDenominator();
    RationalFunc f;
    if (num.is_zero()) return f;

    // Split off units t^k so both parts are ordinary with nonzero constant term.
    const long a = num.lowest_exp();
    const long b = den.lowest_exp();
    LaurentPoly n0, d0;
    for (const auto& [e, c] : num.terms()) n0.add_term(e - a, c);
    for (const auto& [e, c] : den.terms()) d0.add_term(e - b, c);

    LaurentPoly g = poly_gcd(n0, d0);
    if (!g.is_one()) {
        n0 = poly_exact_div(n0, g);
        d0 = poly_exact_div(d0, g);
    }

    // Push every rational scalar into the numerator: denominator becomes the
    // primitive integer representative with positive leading coefficient.
    LaurentPoly d1 = primitive_integer_scale(d0);
    // d0 = d1 * s for a rational scalar s = lead(d0)/lead(d1).
    mpq_class s = d0.leading_coeff() / d1.leading_coeff();
    LaurentPoly n1;
    for (const auto& [e, c] : n0.terms()) n1.add_term(e + a - b, c / s);

    RationalFunc out;
    out.num_ = n1;
    out.den_ = d1;
    return out;
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
    return rf_reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const {
    return rf_reduce(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
    return rf_reduce(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
    if (o.is_zero()) throw ZeroDenominator();
    return rf_reduce(num_ * o.den_, den_ * o.num_);
}

RationalFunc involute(const RationalFunc& f) {
    return rf_reduce(involute(f.num()), involute(f.den()));
}

bool rf_is_integral_laurent(const RationalFunc& f) {
    if (!f.is_laurent()) return false;
    for (const auto& [e, c] : f.num().terms())
        if (!is_integer(c)) return false;
    return true;
}

std::string rf_str(const RationalFunc& f) {
    if (f.is_laurent()) return poly_str(f.num());
    std::string num = poly_str(f.num());
    if (f.num().term_count() > 1) num = "(" + num + ")";
    std::string den = poly_str(f.den());
    if (f.den().term_count() > 1) den = "(" + den + ")";
    return num + " / " + den;
}

}  // namespace knotforms
