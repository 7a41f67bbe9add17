#pragma once

/**
 * @file matrix.hpp
 * @brief Dense exact matrices over Z and Q, with rank/kernel and determinants.
 *
 * RatMatrix is the rational workhorse (rank, kernel, inverse); IntMatrix adds
 * fraction-free (Bareiss) determinants and echelon forms, which keep every
 * intermediate entry an integer minor of the input and avoid gcd work.
 */

#include "qpl/algebra/numbers.hpp"
#include "qpl/util/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qpl {

template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionMismatch("ragged initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    friend Matrix operator+(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix sum");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }

    friend Matrix operator-(Matrix x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix difference");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }

    [[nodiscard]] std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using IntMatrix = Matrix<Int>;

/// Rank together with a basis of the right kernel {v : M v = 0}.
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<Rat>> kernel;
};

/// Exact rank and kernel basis via reduced row echelon form over Q.
RankKernel rank_kernel(const RatMatrix& m);

/// Reduced row echelon form over Q; pivot columns are returned in order.
struct Rref {
    RatMatrix form;
    std::vector<std::size_t> pivots;
};
Rref rref(const RatMatrix& m);

/// Determinant over Q (square matrices only).
Rat determinant(const RatMatrix& m);

/// Inverse over Q; throws DimensionMismatch if singular or non-square.
RatMatrix inverse(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Int determinant(const IntMatrix& m);

/**
 * Fraction-free row echelon form over Z.
 *
 * Row i of `rows` has its first nonzero entry in column pivots[i]; rows are
 * integer multiples of rational RREF rows, so they span the same Q-space.
 */
struct IntEchelon {
    std::vector<std::vector<Int>> rows;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;

    [[nodiscard]] std::size_t rank() const noexcept { return rows.size(); }
    /// Columns that carry no pivot, in increasing order.
    [[nodiscard]] std::vector<std::size_t> free_columns() const;
    /**
     * Reduce v modulo the row space.  Returns (w, s) with s > 0 such that
     * v ≡ w / s modulo the row space and w vanishes in every pivot column.
     */
    [[nodiscard]] std::pair<std::vector<Int>, Int> reduce(std::vector<Int> v) const;
};
IntEchelon fraction_free_echelon(const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace qpl
