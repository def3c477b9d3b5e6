#pragma once

// Exact arithmetic primitives: arbitrary-precision integers and rationals,
// dense vectors and matrices over them. Nothing in the certification paths
// touches floating point except as a hint that is re-checked exactly.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lgcert {

using Integer = mpz_class;
using Rational = mpq_class;

using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

/// Canonical "p/q" text (just "p" when the denominator is 1).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text.
Rational parse_rational(const std::string& text);

Rational dot(const QVector& a, const QVector& b);
Rational norm_sq(const QVector& a);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& c, const QVector& a);
QVector to_rational(const ZVector& v);
bool is_zero(const QVector& v);

/// Floor and nearest-integer of an exact rational.
Integer floor(const Rational& q);
Integer round_nearest(const Rational& q);
/// Representative of q modulo 1 in [0, 1).
Rational frac(const Rational& q);
/// num/den in lowest terms. Throws InvalidInput for den = 0.
Rational fraction(const Integer& num, const Integer& den);

/// Dense row-major matrix. Used for bases (rows are vectors), Gram matrices,
/// projectors and transforms.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<T>& v);
    void swap_rows(std::size_t i, std::size_t j);

    Matrix transpose() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& c, const QMatrix& a);
QVector operator*(const QVector& v, const QMatrix& m);  // row vector times matrix
QMatrix to_rational(const ZMatrix& m);

bool is_symmetric(const QMatrix& m);
bool is_zero(const QMatrix& m);
Rational max_abs(const QMatrix& m);
Rational trace(const QMatrix& m);

Rational determinant(QMatrix m);
std::size_t rank(QMatrix m);
/// Throws InvalidInput when m is singular.
QMatrix inverse(const QMatrix& m);
/// Exact solve of x·A = b for a row vector x (A of full row rank). Returns
/// false when b is outside the row space of A.
bool solve_left(const QMatrix& a, const QVector& b, QVector& x);

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        for (const auto& v : r) data_.push_back(v);
    }
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

template <typename T>
void Matrix<T>::set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

} // namespace lgcert
