#include "knotforms/certified.hpp"

#include <stdexcept>

namespace knotforms {

QInterval sqrt_enclosure(const mpq_class& w, unsigned prec_bits) {
    if (w < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    if (w == 0) return QInterval(mpq_class(0));
    // floor(sqrt(w * 4^p)) / 2^p brackets sqrt(w) within 2^-p.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 2 * prec_bits);
    mpz_class scaled_num = w.get_num() * scale;
    // floor(sqrt(num/den)) = floor(sqrt(num*den)/den) is awkward; instead use
    // floor(sqrt(floor(num*4^p/den))) which still gives a one-ulp bracket.
    mpz_class q = scaled_num / w.get_den();
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    mpz_class two_p;
    mpz_ui_pow_ui(two_p.get_mpz_t(), 2, prec_bits);
    mpq_class lo(r, two_p), hi(r + 1, two_p);
    lo.canonicalize();
    hi.canonicalize();
    // r = floor(sqrt(floor(w*4^p))) gives r^2 <= w*4^p < (r+1)^2 exactly.
    return {lo, hi};
}

namespace {

// Alternating series for arctan on [0, 1/2]: consecutive partial sums
// bracket the limit because the terms strictly decrease there.
QInterval atan_series(const mpq_class& x, unsigned prec_bits) {
    if (x == 0) return QInterval(mpq_class(0));
    mpq_class eps(mpz_class(1), mpz_class(1) << prec_bits);
    mpq_class power = x;  // x^(2k+1)
    const mpq_class x2 = x * x;
    mpq_class sum = 0, lower = 0, upper = x;
    for (unsigned long k = 0;; ++k) {
        mpq_class term = power / (2 * k + 1);
        if (k % 2 == 0) {
            sum += term;
            upper = sum;
        } else {
            sum -= term;
            lower = sum;
        }
        power *= x2;
        if (k >= 1 && upper - lower < eps) break;
    }
    return {lower, upper};
}

}  // namespace

QInterval atan_enclosure(const mpq_class& x, unsigned prec_bits) {
    if (x < 0) throw std::domain_error("atan_enclosure: negative argument");
    if (x == 0) return QInterval(mpq_class(0));
    // Halve the argument until it is small: atan(x) = 2*atan(x/(1+sqrt(1+x^2))).
    QInterval xs(x);
    unsigned doublings = 0;
    mpq_class half(1, 2);
    while (xs.hi > half) {
        QInterval inner(1 + xs.lo * xs.lo, 1 + xs.hi * xs.hi);
        QInterval s_lo = sqrt_enclosure(inner.lo, prec_bits + 4);
        QInterval s_hi = sqrt_enclosure(inner.hi, prec_bits + 4);
        // all positive: x/(1+sqrt(1+x^2)) is increasing in x
        mpq_class new_lo = xs.lo / (1 + s_hi.hi);
        mpq_class new_hi = xs.hi / (1 + s_lo.lo);
        xs = {new_lo, new_hi};
        ++doublings;
    }
    QInterval a_lo = atan_series(xs.lo, prec_bits + doublings + 2);
    QInterval a_hi = atan_series(xs.hi, prec_bits + doublings + 2);
    QInterval r{a_lo.lo, a_hi.hi};
    for (unsigned i = 0; i < doublings; ++i) r = r + r;
    return r;
}

QInterval pi_enclosure(unsigned prec_bits) {
    // pi = 16*atan(1/5) - 4*atan(1/239)
    QInterval a = atan_series(mpq_class(1, 5), prec_bits + 6);
    QInterval b = atan_series(mpq_class(1, 239), prec_bits + 6);
    return QInterval{16 * a.lo, 16 * a.hi} - QInterval{4 * b.lo, 4 * b.hi};
}

QInterval theta_enclosure(const QInterval& z, unsigned prec_bits) {
    if (z.lo <= -2 || z.hi > 2) throw std::domain_error("theta_enclosure: z outside (-2, 2]");
    // theta is decreasing in z. s(z) = sqrt((2-z)/(2+z)).
    auto s_at = [&](const mpq_class& zz) {
        mpq_class w = (2 - zz) / (2 + zz);
        return sqrt_enclosure(w, prec_bits + 4);
    };
    QInterval s_of_hi = s_at(z.hi);  // smaller s
    QInterval s_of_lo = s_at(z.lo);  // larger s
    QInterval at_lo = atan_enclosure(s_of_hi.lo, prec_bits + 4);
    QInterval at_hi = atan_enclosure(s_of_lo.hi, prec_bits + 4);
    QInterval pi = pi_enclosure(prec_bits + 4);
    // 0 <= atan < pi/2 here, pi > 3: safe positive division.
    mpq_class lo = at_lo.lo / pi.hi;
    mpq_class hi = at_hi.hi / pi.lo;
    return {lo, hi};
}

}  // namespace knotforms
