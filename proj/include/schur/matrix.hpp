#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schur/rational.hpp"

namespace schur {

/// Dense rows x cols grid of exact rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("Matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    std::span<const Rational> row(int r) const { return {e_.data() + size_t(r) * cols_, size_t(cols_)}; }
    std::span<Rational> row(int r) { return {e_.data() + size_t(r) * cols_, size_t(cols_)}; }

    void swap_rows(int a, int b) {
        for (int c = 0; c < cols_; ++c)
            std::swap(at(a, c), at(b, c));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix multiply: shape mismatch");
        Matrix p(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (!bkj.is_zero())
                        p.at(i, j) += aik * bkj;
                }
            }
        return p;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace schur
