#include "knotforms/magnus.hpp"

#include <algorithm>

namespace knotforms {

TowerElement TowerElement::identity(int rank, int level) {
    TowerElement e(rank, level);
    if (level == 0) e.exps_.assign(rank, 0);
    else e.base_ = std::make_shared<const TowerElement>(identity(rank, level - 1));
    return e;
}

TowerElement TowerElement::generator(int rank, int level, int index) {
    if (index < 1 || index > rank) throw RankMismatch("generator index out of range");
    TowerElement g(rank, level);
    if (level == 0) {
        g.exps_.assign(rank, 0);
        g.exps_[index - 1] = 1;
    } else {
        Vec delta(rank, 0);
        delta[index - 1] = 1;
        g.support_.emplace_back(std::make_shared<const TowerElement>(identity(rank, level - 1)),
                                delta);
        g.base_ = std::make_shared<const TowerElement>(generator(rank, level - 1, index));
    }
    return g;
}

bool TowerElement::is_identity() const {
    if (level_ == 0) {
        for (auto e : exps_)
            if (e != 0) return false;
        return true;
    }
    return support_.empty() && base_->is_identity();
}

int TowerElement::compare(const TowerElement& o) const {
    if (rank_ != o.rank_ || level_ != o.level_)
        throw RankMismatch("comparing tower elements of different shape");
    if (level_ == 0) {
        if (exps_ < o.exps_) return -1;
        if (o.exps_ < exps_) return 1;
        return 0;
    }
    if (int c = base_->compare(*o.base_); c != 0) return c;
    auto it = support_.begin(), jt = o.support_.begin();
    for (; it != support_.end() && jt != o.support_.end(); ++it, ++jt) {
        if (int c = it->first->compare(*jt->first); c != 0) return c;
        if (it->second < jt->second) return -1;
        if (jt->second < it->second) return 1;
    }
    if (it != support_.end()) return 1;
    if (jt != o.support_.end()) return -1;
    return 0;
}

void TowerElement::add_support(const Key& key, const Vec& value) {
    auto pos = std::lower_bound(
        support_.begin(), support_.end(), key,
        [](const auto& entry, const Key& k) { return entry.first->compare(*k) < 0; });
    if (pos != support_.end() && pos->first->compare(*key) == 0) {
        bool zero = true;
        for (int i = 0; i < rank_; ++i) {
            pos->second[i] += value[i];
            if (pos->second[i] != 0) zero = false;
        }
        if (zero) support_.erase(pos);
    } else {
        support_.emplace(pos, key, value);
    }
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
    if (rank_ != o.rank_ || level_ != o.level_)
        throw RankMismatch("multiplying tower elements of different shape");
    TowerElement r(rank_, level_);
    if (level_ == 0) {
        r.exps_.resize(rank_);
        for (int i = 0; i < rank_; ++i) r.exps_[i] = exps_[i] + o.exps_[i];
        return r;
    }
    r.support_ = support_;
    for (const auto& [key, value] : o.support_) {
        // (q1 . f2)(q1 x) = f2(x): translate the support by left
        // multiplication with our base.
        Key shifted = std::make_shared<const TowerElement>(*base_ * *key);
        r.add_support(shifted, value);
    }
    r.base_ = std::make_shared<const TowerElement>(*base_ * *o.base_);
    return r;
}

TowerElement TowerElement::inverse() const {
    TowerElement r(rank_, level_);
    if (level_ == 0) {
        r.exps_.resize(rank_);
        for (int i = 0; i < rank_; ++i) r.exps_[i] = -exps_[i];
        return r;
    }
    // (f, q)^-1 = (-(q^-1 . f), q^-1): entries move to q^-1 * key, negated.
    Key qinv = std::make_shared<const TowerElement>(base_->inverse());
    for (const auto& [key, value] : support_) {
        Vec neg(rank_);
        for (int i = 0; i < rank_; ++i) neg[i] = -value[i];
        r.add_support(std::make_shared<const TowerElement>(*qinv * *key), neg);
    }
    r.base_ = qinv;
    return r;
}

TowerElement tower_image(const FreeWord& w, int level) {
    if (level < 0) throw RankMismatch("tower level must be nonnegative");
    TowerElement acc = TowerElement::identity(w.rank(), level);
    for (const auto& [index, exp] : w.letters()) {
        TowerElement g = TowerElement::generator(w.rank(), level, index);
        acc = exp > 0 ? acc * g : acc * g.inverse();
    }
    return acc;
}

bool in_derived(const FreeWord& w, int n) {
    if (n <= 0) return true;
    return tower_image(w, n - 1).is_identity();
}

FreeWord derived_witness(int rank, int n) {
    if (rank < 2) throw RankMismatch("derived_witness needs rank >= 2");
    if (n < 0) throw RankMismatch("derived_witness needs n >= 0");
    FreeWord a = FreeWord::generator(rank, 1);
    FreeWord b = FreeWord::generator(rank, 2);
    if (n == 0) return a;

    FreeWord w = commutator(a, b);
    if (!in_derived(w, 1) || in_derived(w, 2))
        throw VerificationFailed("level-1 witness rejected by the tower oracle");
    std::vector<FreeWord> conjugators = {a, b, a * b, b * a, a * a, b * b};
    for (int m = 1; m < n; ++m) {
        bool found = false;
        for (const auto& c : conjugators) {
            FreeWord cand = commutator(w, conjugate(w, c));
            if (in_derived(cand, m + 1) && !in_derived(cand, m + 2)) {
                w = cand;
                found = true;
                break;
            }
        }
        if (!found)
            throw VerificationFailed("no conjugator produced a level-" + std::to_string(m + 1) +
                                     " witness");
    }
    return w;
}

}  // namespace knotforms
