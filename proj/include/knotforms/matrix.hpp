#pragma once

#include <cstddef>
#include <vector>

#include "knotforms/errors.hpp"

namespace knotforms {

// Dense row-major matrix over an arbitrary ring T. Only what the
// invariant computations need; no numerics.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix m = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix m = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw SizeMismatch("matrix product");
        Matrix m(rows_, o.cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
            }
        return m;
    }

    Matrix scaled(const T& s) const {
        Matrix m = *this;
        for (auto& v : m.data_) v = v * s;
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix shapes differ");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

}  // namespace knotforms
