#pragma once

#include <cstddef>
#include <vector>

#include "certitrack/gaussian.hpp"

namespace certitrack {

// Fixed-length vector over Q[i].  Length is set at construction; entries may be
// filled in afterwards (the containers are value types, cheap to copy by GMP's
// refcounting is NOT available -- copies are deep, so pass by const& in hot paths).
class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t len) : entries_(len) {}
    explicit QVector(std::vector<GaussianRational> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    const GaussianRational& operator[](std::size_t i) const { return entries_[i]; }
    GaussianRational& operator[](std::size_t i) { return entries_[i]; }

    bool is_zero() const;

    friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }

private:
    std::vector<GaussianRational> entries_;
};

// Rectangular matrix over Q[i], row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    GaussianRational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    static QMatrix identity(std::size_t n);

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> data_;
};

mpq_class norm_sq(const QVector& v);
GaussianRational hermitian_inner(const QVector& u, const QVector& v);

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const GaussianRational& c, const QVector& v);
QVector operator*(const mpq_class& c, const QVector& v);

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const mpq_class& c, const QMatrix& m);
QVector mat_vec(const QMatrix& m, const QVector& v);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);

// Exact solve of A x = b (A square).  Throws SingularMatrixError when A has no
// inverse.  Implementation: clear denominators row by row, then fraction-free
// Bareiss elimination over Z[i]; see linalg.cpp.
QVector solve_linear(const QMatrix& A, const QVector& b);

// Exact inverse (one elimination, n right-hand sides).  Throws SingularMatrixError.
QMatrix invert(const QMatrix& A);

// sum_j w_j * sum_i |m_ij|^2 -- the column-weighted squared Frobenius norm.
mpq_class frobenius_sq_weighted(const QMatrix& m, const std::vector<mpq_class>& col_weights);

} // namespace certitrack
