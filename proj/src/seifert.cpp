#include "knotforms/seifert.hpp"

#include <map>

#include "knotforms/polymat.hpp"

namespace knotforms {

SeifertMatrix::SeifertMatrix(Matrix<mpz_class> entries) : entries_(std::move(entries)) {
    if (!entries_.is_square()) throw InvalidSeifertMatrix("matrix is not square");
    if (entries_.rows() % 2 != 0) throw InvalidSeifertMatrix("size must be even");
    if (det_integer(entries_ - entries_.transpose()) != 1)
        throw InvalidSeifertMatrix("det(V - V^T) != 1");
}

namespace {

SeifertMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    Matrix<mpz_class> m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    return SeifertMatrix(m);
}

struct CatalogEntry {
    SeifertMatrix matrix;
    bool fibered;
};

const std::map<std::string, CatalogEntry>& catalog_map() {
    static const std::map<std::string, CatalogEntry> entries = [] {
        std::map<std::string, CatalogEntry> m;
        SeifertMatrix left = from_rows({{1, -1}, {0, 1}});
        SeifertMatrix right = from_rows({{-1, 1}, {0, -1}});
        SeifertMatrix fig8 = from_rows({{1, 1}, {0, -1}});
        m["unknot"] = {SeifertMatrix(), true};
        m["left_trefoil"] = {left, true};
        m["right_trefoil"] = {right, true};
        m["figure_eight"] = {fig8, true};
        m["granny_knot"] = {block_sum(left, left), true};
        m["square_knot"] = {block_sum(left, right), true};
        return m;
    }();
    return entries;
}

}  // namespace

SeifertMatrix catalog(const std::string& name) {
    auto it = catalog_map().find(name);
    if (it == catalog_map().end()) throw UnknownName(name);
    return it->second.matrix;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, entry] : catalog_map()) v.push_back(name);
        return v;
    }();
    return names;
}

bool catalog_is_fibered(const std::string& name) {
    auto it = catalog_map().find(name);
    if (it == catalog_map().end()) throw UnknownName(name);
    return it->second.fibered;
}

SeifertMatrix congruence(const SeifertMatrix& v, const Matrix<mpz_class>& p) {
    if (!p.is_square() || p.rows() != v.size()) throw SizeMismatch("congruence matrix");
    mpz_class d = det_integer(p);
    if (d != 1 && d != -1) throw NotUnimodular();
    return SeifertMatrix(p.transpose() * v.matrix() * p);
}

SeifertMatrix column_enlarge(const SeifertMatrix& m, const EnlargementData& d) {
    const std::size_t n = m.size();
    if (d.u.size() != n || d.v.size() != n) throw SizeMismatch("enlargement vectors");
    Matrix<mpz_class> w(n + 2, n + 2, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n) = d.u[i];
        w.at(n, i) = d.v[i];
    }
    w.at(n, n) = d.x;
    w.at(n, n + 1) = 1;
    return SeifertMatrix(w);
}

SeifertMatrix row_enlarge(const SeifertMatrix& m, const EnlargementData& d) {
    const std::size_t n = m.size();
    if (d.u.size() != n || d.v.size() != n) throw SizeMismatch("enlargement vectors");
    Matrix<mpz_class> w(n + 2, n + 2, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n) = d.v[i];
        w.at(n, i) = d.u[i];
    }
    w.at(n, n) = d.x;
    w.at(n + 1, n) = 1;
    return SeifertMatrix(w);
}

SeifertMatrix mirror(const SeifertMatrix& v) {
    return SeifertMatrix(v.matrix().transpose().scaled(mpz_class(-1)));
}

SeifertMatrix reverse(const SeifertMatrix& v) {
    return SeifertMatrix(v.matrix().transpose());
}

SeifertMatrix inverse(const SeifertMatrix& v) {
    return SeifertMatrix(v.matrix().scaled(mpz_class(-1)));
}

SeifertMatrix block_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    const std::size_t n = a.size(), m = b.size();
    Matrix<mpz_class> w(n + m, n + m, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) w.at(n + i, n + j) = b.at(i, j);
    return SeifertMatrix(w);
}

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Unimodular matrix assembled from a few elementary operations:
// shears with coefficients in [-2,2], swaps, and sign flips.
Matrix<mpz_class> random_unimodular(std::size_t n, std::mt19937_64& rng) {
    Matrix<mpz_class> p = Matrix<mpz_class>::identity(n);
    const int ops = 3;
    for (int k = 0; k < ops; ++k) {
        std::size_t i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
        switch (draw(rng, 0, 2)) {
            case 0: {  // shear: row i += c * row j
                if (i == j) break;
                long c = draw(rng, -2, 2);
                for (std::size_t t = 0; t < n; ++t) p.at(i, t) += c * p.at(j, t);
                break;
            }
            case 1:  // swap
                if (i != j) p.swap_rows(i, j);
                break;
            default:  // sign flip
                for (std::size_t t = 0; t < n; ++t) p.at(i, t) = -p.at(i, t);
        }
    }
    return p;
}

}  // namespace

SeifertMatrix random_s_equivalent(const SeifertMatrix& v, unsigned moves, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SeifertMatrix w = v;
    for (unsigned k = 0; k < moves; ++k) {
        bool enlarge = w.size() == 0 || draw(rng, 0, 1) == 0;
        if (enlarge) {
            EnlargementData d;
            d.u.resize(w.size());
            d.v.resize(w.size());
            for (auto& e : d.u) e = draw(rng, -2, 2);
            for (auto& e : d.v) e = draw(rng, -2, 2);
            d.x = draw(rng, -2, 2);
            w = column_enlarge(w, d);
        } else {
            w = congruence(w, random_unimodular(w.size(), rng));
        }
    }
    return w;
}

SeifertMatrix random_seifert(std::size_t genus, std::mt19937_64& rng) {
    const std::size_t n = 2 * genus;
    Matrix<mpz_class> m(n, n, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            long c = draw(rng, -3, 3);
            m.at(i, j) = c;
            m.at(j, i) = c;
        }
    // V - V^T becomes the standard symplectic form, so det(V - V^T) = 1.
    for (std::size_t g = 0; g < genus; ++g) m.at(2 * g, 2 * g + 1) += 1;
    return SeifertMatrix(m);
}

}  // namespace knotforms
