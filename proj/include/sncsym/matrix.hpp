#pragma once

#include "sncsym/rational.hpp"

#include <stdexcept>
#include <vector>

namespace sncsym {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i) a(i, i) = 1;
        return a;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0) c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Exact Gauss-Jordan inverse; throws std::domain_error when singular.
    RationalMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
        const std::size_t n = rows_;
        RationalMatrix a = *this;
        RationalMatrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && a(pivot, col) == 0) ++pivot;
            if (pivot == n) throw std::domain_error("matrix is singular");
            if (pivot != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(pivot, j), a(col, j));
                    std::swap(inv(pivot, j), inv(col, j));
                }
            Rational p = a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) /= p;
                inv(col, j) /= p;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || a(r, col) == 0) continue;
                Rational f = a(r, col);
                for (std::size_t j = 0; j < n; ++j) {
                    if (a(col, j) != 0) a(r, j) -= f * a(col, j);
                    if (inv(col, j) != 0) inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

}  // namespace sncsym
