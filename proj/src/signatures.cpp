#include "knotforms/signatures.hpp"

#include <stdexcept>

#include "knotforms/alexander.hpp"

namespace knotforms {

CirclePoint::CirclePoint(const mpq_class& r, const mpq_class& i) : re(r), im(i) {
    if (re * re + im * im != 1)
        throw std::domain_error("CirclePoint: re^2 + im^2 must equal 1 exactly");
}

CirclePoint circle_point(const mpq_class& s) {
    mpq_class denom = 1 + s * s;
    return {(1 - s * s) / denom, 2 * s / denom};
}

namespace {

GaussRat eval_gauss(const LaurentPoly& p, const GaussRat& x) {
    GaussRat acc;
    for (const auto& [e, c] : p.terms()) {
        GaussRat pw(mpq_class(1));
        if (e >= 0) {
            for (long k = 0; k < e; ++k) pw = pw * x;
        } else {
            GaussRat inv = GaussRat(mpq_class(1)) / x;
            for (long k = 0; k < -e; ++k) pw = pw * inv;
        }
        acc += pw * GaussRat(c);
    }
    return acc;
}

// Signature of a nonsingular Hermitian matrix by congruence diagonalization
// with exact pivots; zero diagonal blocks are repaired by the standard
// column mix that makes a diagonal entry nonzero.
int hermitian_signature(Matrix<GaussRat> m) {
    const std::size_t n = m.rows();
    int sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t j = k + 1;
            while (j < n && m.at(j, j).is_zero()) ++j;
            if (j < n) {
                m.swap_rows(k, j);
                m.swap_cols(k, j);
            } else {
                // All remaining diagonal entries vanish; mix in a column with
                // a nonzero off-diagonal entry: new e_k = e_k + c*e_j gives
                // diagonal 2*Re(c * m[k][j]).
                j = k + 1;
                while (j < n && m.at(k, j).is_zero()) ++j;
                if (j == n) throw std::logic_error("hermitian_signature: singular matrix");
                GaussRat c = m.at(k, j).re != 0 ? GaussRat(mpq_class(1))
                                                : GaussRat(mpq_class(0), mpq_class(1));
                for (std::size_t t = 0; t < n; ++t) m.at(t, k) += m.at(t, j) * c;
                GaussRat cbar = c.conj();
                for (std::size_t t = 0; t < n; ++t) m.at(k, t) += cbar * m.at(j, t);
            }
        }
        const GaussRat pivot = m.at(k, k);
        if (!pivot.is_real())
            throw std::logic_error("hermitian_signature: non-real diagonal");
        sig += sign_of(pivot.re);
        // Schur complement: the two-sided congruence clearing row and column
        // k lands on m[i][j] - m[i][k]*m[k][j]/pivot for the trailing block.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            GaussRat f = m.at(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(k, j);
            m.at(i, k) = GaussRat();
        }
        for (std::size_t j = k + 1; j < n; ++j) m.at(k, j) = GaussRat();
    }
    return sig;
}

Matrix<GaussRat> hermitian_pencil(const SeifertMatrix& v, const CirclePoint& omega) {
    const std::size_t n = v.size();
    GaussRat w(omega.re, omega.im);
    GaussRat a = GaussRat(mpq_class(1)) - w;
    GaussRat b = a.conj();
    Matrix<GaussRat> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = a * GaussRat(mpq_class(v.at(i, j))) + b * GaussRat(mpq_class(v.at(j, i)));
    return h;
}

}  // namespace

namespace {

int lt_signature_checked(const SeifertMatrix& v, const CirclePoint& omega,
                         const LaurentPoly& delta) {
    if (omega.is_one()) throw AtUnity();
    if (v.size() == 0) return 0;
    if (eval_gauss(delta, GaussRat(omega.re, omega.im)).is_zero()) throw AtRoot();
    int sig = hermitian_signature(hermitian_pencil(v, omega));
    if (sig % 2 != 0) throw std::logic_error("lt_signature_at: odd signature");
    return sig;
}

}  // namespace

int lt_signature_at(const SeifertMatrix& v, const CirclePoint& omega) {
    if (omega.is_one()) throw AtUnity();
    if (v.size() == 0) return 0;
    return lt_signature_checked(v, omega, alexander_poly(v));
}

int ordinary_signature(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    if (n == 0) return 0;
    Matrix<GaussRat> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = GaussRat(mpq_class(v.at(i, j) + v.at(j, i)));
    return hermitian_signature(h);
}

namespace {

// Exact rational circle sample with z(s) = 2(1-s^2)/(1+s^2) strictly inside
// the gap (zlo, zhi) in the trace coordinate.
CirclePoint sample_in_gap(const mpq_class& zlo, const mpq_class& zhi) {
    mpq_class target = (zlo + zhi) / 2;
    mpq_class w = (2 - target) / (2 + target);  // s^2 at the target
    for (unsigned prec = 16;; prec += 16) {
        QInterval s = sqrt_enclosure(w, prec);
        for (const mpq_class& cand : {s.lo, s.hi}) {
            if (cand <= 0) continue;
            mpq_class z = 2 * (1 - cand * cand) / (1 + cand * cand);
            if (zlo < z && z < zhi) return circle_point(cand);
        }
        if (prec > 512) throw std::logic_error("sample_in_gap: no rational sample found");
    }
}

struct ProfileData {
    std::vector<ZCut> zcuts;        // ascending z
    std::vector<QInterval> thetas;  // theta enclosure per cut (decreasing)
    std::vector<std::optional<mpq_class>> exact_thetas;
    std::vector<int> gap_sigmas;    // one per z gap, ascending z (size cuts+1)
};

// theta values of the five rational-cosine angles.
std::optional<mpq_class> niven_theta(const mpq_class& z) {
    if (z == -1) return mpq_class(1, 3);
    if (z == 0) return mpq_class(1, 4);
    if (z == 1) return mpq_class(1, 6);
    return std::nullopt;  // z = +-2 cannot occur as a cut
}

ProfileData profile_data(const SeifertMatrix& v, const mpq_class& z_width, unsigned theta_bits) {
    ProfileData pd;
    if (v.size() == 0) {
        pd.gap_sigmas.push_back(0);
        return pd;
    }
    LaurentPoly delta = alexander_poly(v);
    pd.zcuts = unit_circle_root_cuts(delta, z_width);
    for (const auto& cut : pd.zcuts) {
        std::optional<mpq_class> nt = cut.exact ? niven_theta(*cut.exact) : std::nullopt;
        pd.exact_thetas.push_back(nt);
        if (nt)
            pd.thetas.push_back(QInterval(*nt));
        else
            pd.thetas.push_back(theta_enclosure(cut.interval(), theta_bits));
    }
    mpq_class prev(-2);
    for (std::size_t g = 0; g <= pd.zcuts.size(); ++g) {
        mpq_class next = g < pd.zcuts.size() ? pd.zcuts[g].lo : mpq_class(2);
        CirclePoint omega = sample_in_gap(prev, next);
        pd.gap_sigmas.push_back(lt_signature_checked(v, omega, delta));
        prev = g < pd.zcuts.size() ? pd.zcuts[g].hi : mpq_class(0);
    }
    return pd;
}

}  // namespace

SignatureProfile signature_profile(const SeifertMatrix& v) {
    ProfileData pd = profile_data(v, mpq_class(1, 1 << 20), 64);
    SignatureProfile profile;
    const std::size_t m = pd.zcuts.size();
    if (m == 0) {
        profile.constant_value = pd.gap_sigmas.at(0);
        return profile;
    }
    // Ascending theta: upper-semicircle cuts from the largest z downwards,
    // then their mirror images 1 - theta.
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t zi = m - 1 - i;
        ThetaCut cut;
        cut.exact_theta = pd.exact_thetas[zi];
        cut.theta = pd.thetas[zi];
        cut.exact_z = pd.zcuts[zi].exact;
        cut.z = pd.zcuts[zi].interval();
        profile.cuts.push_back(cut);
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t zi = i;
        ThetaCut cut;
        if (pd.exact_thetas[zi]) cut.exact_theta = 1 - *pd.exact_thetas[zi];
        cut.theta = QInterval(mpq_class(1)) - pd.thetas[zi];
        cut.exact_z = pd.zcuts[zi].exact;
        cut.z = pd.zcuts[zi].interval();
        profile.cuts.push_back(cut);
    }
    // Arc values: between ascending-theta cuts. The first m-1 arcs run over
    // the upper semicircle gaps in descending z, the middle arc crosses
    // theta = 1/2 (lowest z gap), the mirrored arcs repeat the upper values,
    // and the final arc wraps through theta = 0 (highest z gap).
    for (std::size_t i = 0; i + 1 < m; ++i) profile.arcs.push_back(pd.gap_sigmas[m - 1 - i]);
    profile.arcs.push_back(pd.gap_sigmas[0]);
    for (std::size_t i = 0; i + 1 < m; ++i) profile.arcs.push_back(pd.gap_sigmas[i + 1]);
    profile.arcs.push_back(pd.gap_sigmas[m]);
    return profile;
}

CertifiedInterval signature_integral(const SeifertMatrix& v, const mpq_class& eps) {
    if (eps <= 0) throw std::domain_error("signature_integral: eps must be positive");
    mpq_class z_width(1, 1 << 16);
    unsigned bits = 48;
    for (;;) {
        ProfileData pd = profile_data(v, z_width, bits);
        const std::size_t m = pd.zcuts.size();
        QInterval total(mpq_class(0));
        if (m == 0) {
            int s = pd.gap_sigmas.at(0);
            return {mpq_class(s), mpq_class(s)};
        }
        // Middle arc through omega = -1: length 1 - 2*theta(c_1).
        total = total + (QInterval(mpq_class(1)) - pd.thetas[0].scaled(2)).scaled(pd.gap_sigmas[0]);
        // Interior gaps, mirrored above and below the real axis.
        for (std::size_t i = 1; i < m; ++i)
            total = total + (pd.thetas[i - 1] - pd.thetas[i]).scaled(2 * pd.gap_sigmas[i]);
        // Wrap arc through omega = 1: length 2*theta(c_m).
        total = total + pd.thetas[m - 1].scaled(2 * pd.gap_sigmas[m]);

        bool all_exact = true;
        for (const auto& nt : pd.exact_thetas)
            if (!nt) all_exact = false;
        if (all_exact) {
            if (!total.is_point())
                throw std::logic_error("signature_integral: exact cuts gave a non-point interval");
            return {total.lo, total.hi};
        }
        if (total.width() < eps) return {total.lo, total.hi};
        z_width /= 256;
        bits += 32;
    }
}

}  // namespace knotforms
