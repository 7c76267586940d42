#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "knotforms/freeword.hpp"

namespace knotforms {

// Element of the iterated wreath product W_n modelling the free solvable
// quotient F_k / F_k^(n+1):
//   level 0:  Z^k (exponent vectors),
//   level n:  pairs (f, q) with q in W_{n-1} and f a finitely supported map
//             W_{n-1} -> Z^k, multiplied by
//             (f1, q1)(f2, q2) = (f1 + q1.f2, q1 q2),  (q.f)(x) = f(q^-1 x).
// Immutable; support entries are kept sorted with no zero vectors.
class TowerElement {
public:
    static TowerElement identity(int rank, int level);
    // Image of the generator x_index at the given level.
    static TowerElement generator(int rank, int level, int index);

    int rank() const { return rank_; }
    int level() const { return level_; }
    bool is_identity() const;

    TowerElement operator*(const TowerElement& o) const;  // RankMismatch
    TowerElement inverse() const;

    bool operator==(const TowerElement& o) const { return compare(o) == 0; }
    bool operator!=(const TowerElement& o) const { return compare(o) != 0; }
    bool operator<(const TowerElement& o) const { return compare(o) < 0; }

    int compare(const TowerElement& o) const;

private:
    using Vec = std::vector<std::int64_t>;
    using Key = std::shared_ptr<const TowerElement>;

    TowerElement(int rank, int level) : rank_(rank), level_(level) {}

    void add_support(const Key& key, const Vec& value);

    int rank_ = 0;
    int level_ = 0;
    Vec exps_;                                   // level 0
    std::vector<std::pair<Key, Vec>> support_;   // level > 0, sorted by key
    Key base_;                                   // level > 0
};

// Homomorphic image of w in W_n (identity word maps to the identity).
TowerElement tower_image(const FreeWord& w, int level);

// Exact membership in the derived subgroup F^(n): n = 0 is all of F;
// otherwise w lies in F^(n) iff its image in W_{n-1} is trivial.
bool in_derived(const FreeWord& w, int n);

// A word in F_k^(n) \ F_k^(n+1), built from nested commutators and verified
// by in_derived before returning. Requires k >= 2. VerificationFailed when
// the bounded search is exhausted (does not happen for desk-scale n).
FreeWord derived_witness(int rank, int n);

}  // namespace knotforms
