#include "certitrack/linalg.hpp"

#include <cassert>

#include "certitrack/errors.hpp"

namespace certitrack {

bool QVector::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1, 0);
    return m;
}

mpq_class norm_sq(const QVector& v) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i].abs_sq();
    return s;
}

GaussianRational hermitian_inner(const QVector& u, const QVector& v) {
    if (u.size() != v.size()) throw DimensionMismatchError("hermitian_inner: length mismatch");
    GaussianRational s;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i].conj();
    return s;
}

QVector operator+(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector add: length mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector sub: length mismatch");
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector operator*(const GaussianRational& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

QVector operator*(const mpq_class& c, const QVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatchError("matrix add: shape mismatch");
    QMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

QMatrix operator*(const mpq_class& c, const QMatrix& m) {
    QMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = c * m(i, j);
    return r;
}

QVector mat_vec(const QMatrix& m, const QVector& v) {
    if (m.cols() != v.size()) throw DimensionMismatchError("mat_vec: shape mismatch");
    QVector r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        GaussianRational s;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatchError("mat_mul: shape mismatch");
    QMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

mpq_class frobenius_sq_weighted(const QMatrix& m, const std::vector<mpq_class>& col_weights) {
    if (col_weights.size() != m.cols())
        throw DimensionMismatchError("frobenius_sq_weighted: weight count != column count");
    mpq_class total = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (sgn(col_weights[j]) < 0)
            throw DimensionMismatchError("frobenius_sq_weighted: negative weight");
        if (sgn(col_weights[j]) == 0) continue;
        mpq_class col = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) col += m(i, j).abs_sq();
        total += col_weights[j] * col;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Exact solving.
//
// Denominators are cleared per row (scaling a row of [A|B] by a positive integer
// does not change the solution set), which leaves a Gaussian-integer matrix.
// Elimination then uses the Bareiss one-step update
//
//     M[i][j] <- (M[i][j]*M[k][k] - M[i][k]*M[k][j]) / prev_pivot
//
// where the division is exact: every intermediate entry is (up to sign) a minor
// of the row-scaled input matrix, and Z[i] is an integral domain, so the minor
// identity that makes Bareiss fraction-free over Z applies verbatim.  This keeps
// entry bit lengths linear in the elimination step instead of exponential.
// ---------------------------------------------------------------------------

namespace {

struct GInt {
    mpz_class re, im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GInt mul(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt sub(const GInt& a, const GInt& b) {
    return {a.re - b.re, a.im - b.im};
}

// Exact division a/b in Z[i].  Precondition (guaranteed by the Bareiss identity):
// b divides a exactly.  (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2).
GInt div_exact(const GInt& a, const GInt& b) {
    mpz_class den = b.re * b.re + b.im * b.im;
    mpz_class nre = a.re * b.re + a.im * b.im;
    mpz_class nim = a.im * b.re - a.re * b.im;
    GInt q;
#ifndef NDEBUG
    {
        mpz_class r;
        mpz_tdiv_r(r.get_mpz_t(), nre.get_mpz_t(), den.get_mpz_t());
        assert(sgn(r) == 0 && "Bareiss division not exact (re)");
        mpz_tdiv_r(r.get_mpz_t(), nim.get_mpz_t(), den.get_mpz_t());
        assert(sgn(r) == 0 && "Bareiss division not exact (im)");
    }
#endif
    mpz_divexact(q.re.get_mpz_t(), nre.get_mpz_t(), den.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), nim.get_mpz_t(), den.get_mpz_t());
    return q;
}

GaussianRational to_rational(const GInt& g) {
    return {mpq_class(g.re), mpq_class(g.im)};
}

// Clear denominators of [A | B] row by row into a Gaussian-integer grid.
// Each row is scaled by the lcm of its 2*(cols) denominators.
std::vector<std::vector<GInt>> integerize(const QMatrix& A, const QMatrix& B) {
    std::size_t n = A.rows(), extra = B.cols();
    std::vector<std::vector<GInt>> M(n, std::vector<GInt>(A.cols() + extra));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class scale = 1;
        auto fold = [&scale](const GaussianRational& g) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), g.re.get_den().get_mpz_t());
            mpz_lcm(scale.get_mpz_t(), l.get_mpz_t(), g.im.get_den().get_mpz_t());
        };
        for (std::size_t j = 0; j < A.cols(); ++j) fold(A(i, j));
        for (std::size_t j = 0; j < extra; ++j) fold(B(i, j));
        auto scaled = [&scale](const GaussianRational& g) -> GInt {
            mpq_class r = g.re * scale, im = g.im * scale;
            assert(r.get_den() == 1 && im.get_den() == 1);
            return {r.get_num(), im.get_num()};
        };
        for (std::size_t j = 0; j < A.cols(); ++j) M[i][j] = scaled(A(i, j));
        for (std::size_t j = 0; j < extra; ++j) M[i][A.cols() + j] = scaled(B(i, j));
    }
    return M;
}

// Forward Bareiss elimination on the n x (n+extra) grid; leaves an upper-triangular
// integer system, then back-substitutes each right-hand column over Q[i].
// Returns one solution column per right-hand side.
std::vector<QVector> eliminate(const QMatrix& A, const QMatrix& B) {
    std::size_t n = A.rows(), width = A.cols() + B.cols();
    auto M = integerize(A, B);

    GInt prev{1, 0};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && M[pivot][k].is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrixError();
        if (pivot != k) std::swap(M[pivot], M[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j)
                M[i][j] = div_exact(sub(mul(M[i][j], M[k][k]), mul(M[i][k], M[k][j])), prev);
            M[i][k] = GInt{0, 0};
        }
        prev = M[k][k];
    }
    if (M[n - 1][n - 1].is_zero()) throw SingularMatrixError();

    std::vector<QVector> out;
    out.reserve(B.cols());
    for (std::size_t c = 0; c < B.cols(); ++c) {
        QVector x(n);
        for (std::size_t k = n; k-- > 0;) {
            GaussianRational s = to_rational(M[k][n + c]);
            for (std::size_t j = k + 1; j < n; ++j) s -= to_rational(M[k][j]) * x[j];
            x[k] = s / to_rational(M[k][k]);
        }
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace

QVector solve_linear(const QMatrix& A, const QVector& b) {
    if (A.rows() != A.cols()) throw DimensionMismatchError("solve_linear: matrix not square");
    if (A.rows() != b.size()) throw DimensionMismatchError("solve_linear: rhs length mismatch");
    if (A.rows() == 0) return QVector(0);
    QMatrix B(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) B(i, 0) = b[i];
    QVector x = eliminate(A, B)[0];
#ifndef NDEBUG
    assert(mat_vec(A, x) == b && "solve_linear: A*x != b");
#endif
    return x;
}

QMatrix invert(const QMatrix& A) {
    if (A.rows() != A.cols()) throw DimensionMismatchError("invert: matrix not square");
    std::size_t n = A.rows();
    auto cols = eliminate(A, QMatrix::identity(n));
    QMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = cols[j][i];
#ifndef NDEBUG
    assert(mat_mul(A, inv) == QMatrix::identity(n) && "invert: A*inv != I");
#endif
    return inv;
}

} // namespace certitrack
