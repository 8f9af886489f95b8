#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrook/errors.hpp"
#include "qrook/ratfunc.hpp"

namespace qrook {

/// Dense row-major matrix over an exact field (RatFunc or Rational).
/// Multiplication skips zero entries, so the sparse operators built here
/// (at most two nonzeros per column) stay cheap.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix scalar(std::size_t n, const F& c) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const F> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<const F> data() const { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!qrook::is_zero(x)) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !qrook::is_zero((*this)(i, j))) return false;
        return true;
    }
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& x : data_) n += qrook::is_zero(x) ? 0 : 1;
        return n;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!qrook::is_zero(o.data_[i])) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i)
            if (!qrook::is_zero(o.data_[i])) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const F& c) {
        if (qrook::is_zero(c)) {
            for (auto& x : data_) x = F(0);
            return *this;
        }
        for (auto& x : data_)
            if (!qrook::is_zero(x)) x *= c;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const F& c) { return a *= c; }
    friend Matrix operator*(const F& c, Matrix a) { return a *= c; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

namespace detail {

template <class F>
void multiply_row(const Matrix<F>& a, const Matrix<F>& b, Matrix<F>& c, std::size_t i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
        const F& x = a(i, l);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const F& y = b(l, j);
            if (is_zero(y)) continue;
            c(i, j) += x * y;
        }
    }
}

}  // namespace detail

/// Reference product, single-threaded.
template <class F>
Matrix<F> multiply_serial(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
    Matrix<F> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) detail::multiply_row(a, b, c, i);
    return c;
}

/// Product with rows distributed over OpenMP threads. Bitwise identical to
/// multiply_serial: each output row is accumulated in the same order.
template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
    Matrix<F> c(a.rows(), b.cols());
    const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 1) if (n >= 16)
    for (long i = 0; i < n; ++i) detail::multiply_row(a, b, c, static_cast<std::size_t>(i));
    return c;
}

template <class F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
    return multiply(a, b);
}

template <class F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!is_zero(b(k, l))) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return c;
}

template <class F>
Matrix<F> submatrix(const Matrix<F>& m, std::span<const std::size_t> idx) {
    Matrix<F> s(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = m(idx[i], idx[j]);
    return s;
}

/// Rank by Gaussian elimination over the field.
template <class F>
std::size_t rank(Matrix<F> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            F f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Inverse by Gauss-Jordan elimination; throws NotInvertible when singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) throw NotInvertible("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        F piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero(a(c, j))) a(c, j) /= piv;
            if (!is_zero(inv(c, j))) inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a(i, c))) continue;
            F f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero(a(c, j))) a(i, j) -= f * a(c, j);
                if (!is_zero(inv(c, j))) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Entrywise value at q = q0.
Matrix<Rational> specialize(const Matrix<RatFunc>& m, const Rational& q0);

/// Lifts a rational matrix to constant entries of Q(q).
Matrix<RatFunc> lift(const Matrix<Rational>& m);

}  // namespace qrook
