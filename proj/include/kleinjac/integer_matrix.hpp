#pragma once

#include "kleinjac/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kleinjac {

/// Dense exact integer matrix, row-major. Dimensions are fixed at construction;
/// a 0x0 matrix is allowed so that empty blocks compose without special cases.
class IntegerMatrix {
public:
    IntegerMatrix() = default;

    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged initializer");
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Integer& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return (*this)(i, j);
    }
    const Integer& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return (*this)(i, j);
    }

    /// Copy of the sub-matrix with top-left corner (r0, c0).
    IntegerMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("IntegerMatrix::block out of range");
        IntegerMatrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const IntegerMatrix& b) {
        if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
            throw std::out_of_range("IntegerMatrix::set_block out of range");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
        a.require_same_shape(b, "+");
        IntegerMatrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }

    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
        a.require_same_shape(b, "-");
        IntegerMatrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }

    friend IntegerMatrix operator-(const IntegerMatrix& a) {
        IntegerMatrix out = a;
        for (auto& v : out.data_) v = -v;
        return out;
    }

    friend IntegerMatrix operator*(const Integer& s, const IntegerMatrix& a) {
        IntegerMatrix out = a;
        for (auto& v : out.data_) v *= s;
        return out;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("IntegerMatrix: size mismatch in *");
        IntegerMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    Integer determinant() const {
        if (!is_square()) throw std::invalid_argument("IntegerMatrix::determinant: matrix not square");
        const std::size_t n = rows_;
        if (n == 0) return Integer(1);
        IntegerMatrix m = *this;
        Integer sign = 1;
        Integer prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && m(p, k) == 0) ++p;
                if (p == n) return Integer(0);
                m.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = 0;
            }
            prev = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    }

    bool is_unimodular() const {
        if (!is_square()) return false;
        Integer d = determinant();
        return d == 1 || d == -1;
    }

    /// Exact inverse of a unimodular matrix (Gauss-Jordan over the rationals;
    /// the result is integral because det = +-1).
    IntegerMatrix inverse() const {
        if (!is_unimodular()) throw std::domain_error("IntegerMatrix::inverse: matrix is not unimodular");
        const std::size_t n = rows_;
        std::vector<Rational> a(n * 2 * n);
        auto cell = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * 2 * n + j]; };
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) cell(i, j) = Rational((*this)(i, j));
            cell(i, n + i) = 1;
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t p = col;
            while (cell(p, col) == 0) ++p;  // a pivot exists since det != 0
            if (p != col)
                for (std::size_t j = 0; j < 2 * n; ++j) std::swap(cell(p, j), cell(col, j));
            const Rational pivot = cell(col, col);
            for (std::size_t j = 0; j < 2 * n; ++j) cell(col, j) /= pivot;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || cell(i, col) == 0) continue;
                const Rational f = cell(i, col);
                for (std::size_t j = 0; j < 2 * n; ++j) cell(i, j) -= f * cell(col, j);
            }
        }
        IntegerMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& v = cell(i, n + j);
                if (!is_integer(v)) throw std::logic_error("IntegerMatrix::inverse: non-integral entry");
                inv(i, j) = boost::multiprecision::numerator(v);
            }
        return inv;
    }

    std::vector<std::vector<long long>> to_rows() const {
        std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).convert_to<long long>();
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("IntegerMatrix index out of range");
    }

    void require_same_shape(const IntegerMatrix& b, const char* op) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument(std::string("IntegerMatrix: size mismatch in ") + op);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

}  // namespace kleinjac
