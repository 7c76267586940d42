#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

#include "knotforms/matrix.hpp"

namespace knotforms {

// Square integer matrix of even size with det(V - V^T) = 1: the Seifert
// form of a knot with respect to a genus-g surface basis. The 0x0 matrix
// is the unknot. Immutable after construction.
class SeifertMatrix {
public:
    SeifertMatrix() = default;  // unknot
    explicit SeifertMatrix(Matrix<mpz_class> entries);

    std::size_t size() const { return entries_.rows(); }
    std::size_t genus() const { return size() / 2; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
    const Matrix<mpz_class>& matrix() const { return entries_; }

    bool operator==(const SeifertMatrix& o) const { return entries_ == o.entries_; }
    bool operator!=(const SeifertMatrix& o) const { return !(*this == o); }

private:
    Matrix<mpz_class> entries_;
};

// Named catalog. Conventions are pinned so that the left trefoil has
// ordinary signature +2 and signature integral +4/3.
SeifertMatrix catalog(const std::string& name);  // UnknownName
const std::vector<std::string>& catalog_names();
bool catalog_is_fibered(const std::string& name);

// P^T V P for unimodular integer P. NotUnimodular, SizeMismatch.
SeifertMatrix congruence(const SeifertMatrix& v, const Matrix<mpz_class>& p);

// Data for an S-equivalence enlargement move.
struct EnlargementData {
    std::vector<mpz_class> u;  // length = size of the target matrix
    std::vector<mpz_class> v;
    mpz_class x;
};

// Column enlargement: the (2g+2)-square block matrix
//   [ V   u^T  0 ]
//   [ v    x   1 ]
//   [ 0    0   0 ]
SeifertMatrix column_enlarge(const SeifertMatrix& m, const EnlargementData& d);

// Transposed move, provided for convenience (S-equivalence is symmetric
// under transposition):
//   [ V   v^T  0 ]
//   [ u    x   0 ]
//   [ 0    1   0 ]
SeifertMatrix row_enlarge(const SeifertMatrix& m, const EnlargementData& d);

SeifertMatrix mirror(const SeifertMatrix& v);   // -V^T
SeifertMatrix reverse(const SeifertMatrix& v);  //  V^T
SeifertMatrix inverse(const SeifertMatrix& v);  // -V  (mirror of reverse)

// Block-diagonal sum (connected sum of knots).
SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// Applies `moves` seeded random S-equivalence moves (unimodular congruences
// built from elementary matrices with entries in [-2,2], and column
// enlargements with entries in [-2,2]). Deterministic for a given seed.
SeifertMatrix random_s_equivalent(const SeifertMatrix& v, unsigned moves, std::uint64_t seed);

// Random Seifert matrix of the given genus: random symmetric part plus the
// standard block making V - V^T symplectic. Test and corpus tooling.
SeifertMatrix random_seifert(std::size_t genus, std::mt19937_64& rng);

}  // namespace knotforms
