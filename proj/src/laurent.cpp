#include "knotforms/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace knotforms {

LaurentPoly::LaurentPoly(const mpq_class& constant) {
    if (constant != 0) coeffs_[0] = constant;
}

LaurentPoly LaurentPoly::term(const mpq_class& c, long e) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[e] = c;
    return p;
}

bool LaurentPoly::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentPoly::lowest_exp() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.begin()->first;
}

long LaurentPoly::degree() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.rbegin()->first;
}

mpq_class LaurentPoly::coeff(long e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

mpq_class LaurentPoly::leading_coeff() const { return coeffs_.rbegin()->second; }

mpq_class LaurentPoly::trailing_coeff() const { return coeffs_.begin()->second; }

void LaurentPoly::add_term(long e, const mpq_class& c) {
    if (c == 0) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
    if (coeffs_.empty()) return 0;
    if (x == 0) {
        if (lowest_exp() < 0) throw ZeroDenominator();
        return coeff(0);
    }
    // Horner over the exponent range, walking from high to low.
    mpq_class acc = 0;
    long prev_e = degree();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        for (long k = 0; k < prev_e - it->first; ++k) acc *= x;
        acc += it->second;
        prev_e = it->first;
    }
    if (prev_e > 0) {
        for (long k = 0; k < prev_e; ++k) acc *= x;
    } else if (prev_e < 0) {
        mpq_class inv = 1 / x;
        for (long k = 0; k < -prev_e; ++k) acc *= inv;
    }
    return acc;
}

LaurentPoly involute(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
    return r;
}

UnitNormal normalize_unit(const LaurentPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    UnitNormal un;
    un.exp = p.lowest_exp();
    un.sign = sign_of(p.trailing_coeff()) < 0 ? -1 : 1;
    for (const auto& [e, c] : p.terms()) un.normal.add_term(e - un.exp, un.sign < 0 ? -c : c);
    return un;
}

bool equal_up_to_unit(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return normalize_unit(p).normal == normalize_unit(q).normal;
}

bool is_ordinary_poly(const LaurentPoly& p) {
    return p.is_zero() || p.lowest_exp() >= 0;
}

static void require_poly(const LaurentPoly& p, const char* who) {
    if (!is_ordinary_poly(p)) throw std::logic_error(std::string(who) + ": negative exponents");
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    require_poly(a, "poly_divmod");
    require_poly(b, "poly_divmod");
    if (b.is_zero()) throw ZeroDenominator();
    LaurentPoly q;
    LaurentPoly r = a;
    const long db = b.degree();
    const mpq_class lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        mpq_class c = r.leading_coeff() / lb;
        long e = r.degree() - db;
        LaurentPoly t = LaurentPoly::term(c, e);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        LaurentPoly r = poly_divmod(x, y).second;
        x = y;
        y = r;
        if (!y.is_zero()) y = monic(y);  // keeps coefficient growth in check
    }
    if (x.is_zero()) return x;
    return monic(x);
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("poly_exact_div: nonzero remainder");
    return q;
}

LaurentPoly derivative(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e - 1, c * e);
    return r;
}

LaurentPoly square_free_part(const LaurentPoly& p) {
    require_poly(p, "square_free_part");
    if (p.is_zero() || p.degree() == 0) return p;
    LaurentPoly g = poly_gcd(p, derivative(p));
    if (g.is_zero() || g.degree() == 0) return p;
    return poly_exact_div(p, g);
}

LaurentPoly primitive_integer_scale(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_class d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class n = c.get_num() * (den_lcm / c.get_den());
        num_gcd = gcd(num_gcd, n);
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c * scale);
    if (sign_of(r.leading_coeff()) < 0) r = -r;
    return r;
}

LaurentPoly monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    mpq_class lc = p.leading_coeff();
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c / lc);
    return r;
}

// --- textual form ---

std::string poly_str(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending exponents: "t^2 - t + 1".
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        long e = it->first;
        mpq_class c = it->second;
        bool neg = sign_of(c) < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        mpq_class a = neg ? mpq_class(-c) : c;
        if (e == 0) {
            out << rational_str(a);
        } else {
            if (a != 1) out << rational_str(a) << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eof() {
        skip_ws();
        return i >= s.size();
    }

    char peek() {
        skip_ws();
        return s[i];
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(i) + " in \"" + s + "\"");
    }

    mpz_class parse_uint() {
        skip_ws();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty()) fail("expected digits");
        return mpz_class(digits);
    }

    long parse_exponent() {
        skip_ws();
        int sign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        mpz_class v = parse_uint();
        if (!v.fits_slong_p()) fail("exponent out of range");
        return sign * v.get_si();
    }

    // term := coeff [ '*' tpart ] | coeff tpart | tpart
    // coeff := uint [ '/' uint ]
    void parse_term(LaurentPoly& acc, int sign) {
        skip_ws();
        mpq_class c = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            mpz_class num = parse_uint();
            mpz_class den = 1;
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = parse_uint();
                if (den == 0) fail("zero denominator");
            }
            c = mpq_class(num, den);
            c.canonicalize();
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long e = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            e = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = parse_exponent();
            }
        } else if (!have_coeff) {
            fail("expected a term");
        }
        acc.add_term(e, sign < 0 ? mpq_class(-c) : c);
    }

    LaurentPoly parse() {
        LaurentPoly acc;
        skip_ws();
        if (i >= s.size()) fail("empty polynomial");
        int sign = 1;
        if (s[i] == '-' || s[i] == '+') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        parse_term(acc, sign);
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-') fail("expected + or -");
            ++i;
            parse_term(acc, op == '-' ? -1 : 1);
        }
        return acc;
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
    PolyParser parser(text);
    return parser.parse();
}

}  // namespace knotforms
