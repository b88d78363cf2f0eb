#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "acs/polynomial.hpp"
#include "acs/rational.hpp"

namespace acs {

/// Dense row-major matrix. T is Rational or Polynomial; products seed their
/// accumulators from the first summand so T needs no zero element.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    Matrix transpose() const {
        if (data_.empty()) return Matrix(cols_, rows_, T{});
        Matrix out(cols_, rows_, data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    template <class S>
    Matrix& scale(const S& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix product: inner dimensions " + std::to_string(a.cols_) +
                                        " and " + std::to_string(b.rows_) + " differ");
        if (a.cols_ == 0) throw std::invalid_argument("Matrix product: empty inner dimension");
        Matrix out(a.rows_, b.cols_, a(0, 0));
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < b.cols_; ++j) {
                T acc = a(i, 0) * b(0, j);
                for (std::size_t r = 1; r < a.cols_; ++r) acc += a(i, r) * b(r, j);
                out(i, j) = std::move(acc);
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Polynomial>;

inline RatMatrix zero_matrix(std::size_t rows, std::size_t cols) {
    return RatMatrix(rows, cols, Rational(0));
}

inline RatMatrix identity_matrix(std::size_t n) {
    RatMatrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

inline bool is_zero(const RatMatrix& m) {
    for (const auto& x : m.data())
        if (!x.is_zero()) return false;
    return true;
}

inline RatMatrix scaled(RatMatrix m, const Rational& s) { return m.scale(s); }

inline RatVector operator*(const RatMatrix& m, const RatVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("Matrix-vector product: size mismatch");
    RatVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

/// Column matrix from a vector.
inline RatMatrix column(const RatVector& v) {
    RatMatrix m = zero_matrix(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

inline PolyMatrix constant_poly_matrix(const RatMatrix& m, std::size_t nvars) {
    PolyMatrix out(m.rows(), m.cols(), Polynomial(nvars));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Polynomial::constant(nvars, m(i, j));
    return out;
}

inline PolyMatrix poly_identity(std::size_t n, std::size_t nvars) {
    return constant_poly_matrix(identity_matrix(n), nvars);
}

inline RatMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
    RatMatrix out = zero_matrix(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(point);
    return out;
}

inline PolyMatrix differentiate(const PolyMatrix& m, std::size_t var) {
    PolyMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).diff(var);
    return out;
}

inline bool is_zero(const PolyMatrix& m) {
    for (const auto& p : m.data())
        if (!p.is_zero()) return false;
    return true;
}

}  // namespace acs
