#include "knotforms/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotforms {

namespace {

// Positive-scalar normalization: divides by the coefficient content so the
// sign pattern (what Sturm counting reads) is untouched.
LaurentPoly scale_content_positive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = primitive_integer_scale(p);
    if (sign_of(q.leading_coeff()) != sign_of(p.leading_coeff())) q = -q;
    return q;
}

std::vector<LaurentPoly> sturm_chain(const LaurentPoly& p) {
    std::vector<LaurentPoly> chain;
    chain.push_back(scale_content_positive(p));
    LaurentPoly d = derivative(p);
    if (d.is_zero()) return chain;
    chain.push_back(scale_content_positive(d));
    for (;;) {
        const LaurentPoly& a = chain[chain.size() - 2];
        const LaurentPoly& b = chain[chain.size() - 1];
        LaurentPoly r = poly_divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(scale_content_positive(-r));
    }
    return chain;
}

int sign_changes(const std::vector<LaurentPoly>& chain, const mpq_class& x) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Roots of the square-free p in the open interval (a, b), both endpoints
// non-roots. Returns isolating open intervals; discovers rational midpoints
// that happen to be roots and reports them through `exact_hits`.
void isolate(const std::vector<LaurentPoly>& chain, const LaurentPoly& p, const mpq_class& a,
             const mpq_class& b, int va, int vb, std::vector<std::pair<mpq_class, mpq_class>>& out,
             std::vector<mpq_class>& exact_hits) {
    int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
        out.emplace_back(a, b);
        return;
    }
    mpq_class mid = (a + b) / 2;
    if (p.eval(mid) == 0) {
        exact_hits.push_back(mid);
        return;  // caller deflates and restarts
    }
    int vm = sign_changes(chain, mid);
    isolate(chain, p, a, mid, va, vm, out, exact_hits);
    isolate(chain, p, mid, b, vm, vb, out, exact_hits);
}

// Shrinks an isolating interval of a simple root by sign bisection.
std::pair<mpq_class, mpq_class> refine(const LaurentPoly& p, mpq_class lo, mpq_class hi,
                                       const mpq_class& width, std::optional<mpq_class>& found_exact) {
    int slo = sign_of(p.eval(lo));
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        int sm = sign_of(p.eval(mid));
        if (sm == 0) {
            found_exact = mid;
            return {mid, mid};
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// Bounded trial-division factorization; empty when the bound is exceeded.
std::vector<mpz_class> small_divisors(mpz_class n) {
    std::vector<mpz_class> primes;
    n = abs(n);
    if (n == 0) return {};
    const unsigned long bound = 1000000;
    for (unsigned long d = 2; mpz_class(d) * d <= n; ++d) {
        if (d > bound) return {};  // give up: a large prime factor remains
        while (n % d == 0) {
            primes.emplace_back(d);
            n /= d;
        }
    }
    if (n > 1) primes.push_back(n);
    std::vector<mpz_class> divs{1};
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        std::size_t mult = j - i;
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (std::size_t e = 1; e <= mult; ++e) {
            pw *= primes[i];
            for (std::size_t k = 0; k < base; ++k) {
                divs.push_back(divs[k] * pw);
                if (divs.size() > 4096) return {};  // too many candidates
            }
        }
        i = j;
    }
    return divs;
}

// Exact rational roots of the primitive integer polynomial p, when the
// divisor enumeration stays within desk-scale bounds.
std::vector<mpq_class> rational_roots(const LaurentPoly& p) {
    std::vector<mpq_class> roots;
    if (p.is_zero() || p.degree() == 0) return roots;
    LaurentPoly q = p;
    if (q.lowest_exp() > 0) {  // z = 0 roots
        roots.emplace_back(0);
        LaurentPoly shifted;
        for (const auto& [e, c] : q.terms()) shifted.add_term(e - q.lowest_exp(), c);
        q = shifted;
    }
    if (q.degree() == 0) return roots;
    if (q.degree() == 1) {
        roots.push_back(mpq_class(-q.coeff(0)) / mpq_class(q.leading_coeff()));
        return roots;
    }
    for (long small : {-1L, 1L})
        if (q.eval(small) == 0) roots.emplace_back(small);
    auto nums = small_divisors(mpz_class(q.coeff(0).get_num()));
    auto dens = small_divisors(mpz_class(q.leading_coeff().get_num()));
    if (!nums.empty() && !dens.empty() && nums.size() * dens.size() <= 8192) {
        for (const auto& pn : nums)
            for (const auto& pd : dens) {
                mpq_class cand(pn, pd);
                cand.canonicalize();
                for (int s : {1, -1}) {
                    mpq_class c = s * cand;
                    if (q.eval(c) == 0 &&
                        std::find(roots.begin(), roots.end(), c) == roots.end())
                        roots.push_back(c);
                }
            }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

LaurentPoly trace_polynomial(const LaurentPoly& delta) {
    if (delta.is_zero()) throw ZeroPolynomial();
    LaurentPoly q = normalize_unit(delta).normal;
    if (normalize_unit(involute(delta)).normal != q) throw NotSymmetric();

    const LaurentPoly t_minus_1 = LaurentPoly::t() - LaurentPoly(1);
    const LaurentPoly t_plus_1 = LaurentPoly::t() + LaurentPoly(1);
    while (!q.is_constant() && q.eval(1) == 0) q = poly_exact_div(q, t_minus_1);
    while (!q.is_constant() && q.eval(-1) == 0) q = poly_exact_div(q, t_plus_1);
    if (q.is_constant()) return LaurentPoly(1);

    const long d = q.degree();
    const long half = d / 2;
    if (d % 2 != 0) throw std::logic_error("trace_polynomial: odd degree after stripping");
    for (long i = 0; i <= d; ++i)
        if (q.coeff(i) != q.coeff(d - i))
            throw std::logic_error("trace_polynomial: not palindromic after stripping");

    // t^j + t^-j as polynomials in z: p_0 = 2, p_1 = z, p_{j+1} = z*p_j - p_{j-1}.
    LaurentPoly prev(2);
    LaurentPoly cur = LaurentPoly::t();  // reuse the container; variable is z
    LaurentPoly out(q.coeff(half));
    for (long j = 1; j <= half; ++j) {
        out += cur * LaurentPoly(q.coeff(half + j));
        LaurentPoly next = LaurentPoly::t() * cur - prev;
        prev = cur;
        cur = next;
    }
    return out;
}

std::vector<ZCut> unit_circle_root_cuts(const LaurentPoly& delta, const mpq_class& max_width) {
    if (max_width <= 0) throw std::domain_error("max_width must be positive");
    LaurentPoly p = trace_polynomial(delta);
    if (p.is_constant()) return {};
    p = primitive_integer_scale(square_free_part(p));

    const mpq_class lo_end(-2), hi_end(2);
    if (p.eval(lo_end) == 0 || p.eval(hi_end) == 0)
        throw std::logic_error("unit_circle_root_cuts: root at z = +-2 survived stripping");

    // Deflate every rational root we can identify, keeping the ones inside
    // the open interval as exact cuts. Isolation then only sees the rest; a
    // bisection midpoint that turns out to be a root joins the exact list and
    // triggers a retry.
    std::vector<mpq_class> exact;
    auto deflate = [&](const mpq_class& root) {
        p = poly_exact_div(p, LaurentPoly::t() - LaurentPoly(root));
        if (lo_end < root && root < hi_end) exact.push_back(root);
    };
    for (const auto& r : rational_roots(p)) deflate(r);
    p = p.is_constant() ? p : primitive_integer_scale(p);

    std::vector<std::pair<mpq_class, mpq_class>> intervals;
    for (;;) {
        intervals.clear();
        auto chain = sturm_chain(p);
        std::vector<mpq_class> hits;
        isolate(chain, p, lo_end, hi_end, sign_changes(chain, lo_end), sign_changes(chain, hi_end),
                intervals, hits);
        if (hits.empty()) break;
        for (const auto& h : hits) deflate(h);
        p = p.is_constant() ? p : primitive_integer_scale(p);
    }
    std::sort(exact.begin(), exact.end());
    exact.erase(std::unique(exact.begin(), exact.end()), exact.end());

    std::vector<ZCut> cuts;
    for (const auto& e : exact) cuts.push_back({e, e, e});
    auto overlaps_exact = [&](const std::pair<mpq_class, mpq_class>& iv) {
        for (const auto& e : exact)
            if (iv.first <= e && e <= iv.second) return true;
        return false;
    };
    for (auto& [lo, hi] : intervals) {
        std::optional<mpq_class> found;
        mpq_class w = max_width;
        auto refined = refine(p, lo, hi, w, found);
        while (!found && overlaps_exact(refined)) {
            w /= 16;
            refined = refine(p, refined.first, refined.second, w, found);
        }
        if (found)
            cuts.push_back({*found, *found, *found});
        else
            cuts.push_back({std::nullopt, refined.first, refined.second});
    }

    std::sort(cuts.begin(), cuts.end(), [](const ZCut& a, const ZCut& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i].hi >= cuts[i + 1].lo)
            throw std::logic_error("unit_circle_root_cuts: enclosures touch");
    return cuts;
}

}  // namespace knotforms
