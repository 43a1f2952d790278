#include "certitrack/conditioning.hpp"

#include "certitrack/errors.hpp"

namespace certitrack {

const mpq_class& Constants::u0() {
    static const mpq_class v(8793, 50000);
    return v;
}

const mpq_class& Constants::delta() {
    static const mpq_class v(3, 4);
    return v;
}

const mpq_class& Constants::w0_num() {
    static const mpq_class v(17, 50000);
    return v;
}

const mpq_class& Constants::l0() {
    static const mpq_class v(999, 1000);
    return v;
}

mpq_class Constants::eps0(unsigned d) {
    mpq_class dq(d);
    mpq_class cube = (4 * dq) * (4 * dq) * (4 * dq);
    mpq_class inner = 1 + mpq_class(9, 8) * u0();
    return (u0() * u0()) / (cube * inner * inner);
}

mpq_class Constants::w0(unsigned d) {
    mpq_class dq(d);
    return w0_num() / (dq * dq * dq);
}

QMatrix augmented_inverse(const QMatrix& Dg, const QVector& z) {
    if (z.is_zero()) throw ZeroVectorError("augmented_inverse: z = 0");
    std::size_t n = Dg.rows();
    if (Dg.cols() != n + 1 || z.size() != n + 1)
        throw DimensionMismatchError("augmented_inverse: expected n x (n+1) Jacobian and length-(n+1) point");
    QMatrix aug(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= n; ++j) aug(i, j) = Dg(i, j);
    for (std::size_t j = 0; j <= n; ++j) aug(n, j) = z[j].conj();
    return invert(aug);
}

mpq_class chi1_tilde_sq(const QMatrix& M, const mpq_class& n4, const mpq_class& n7,
                        const std::vector<unsigned>& degrees) {
    if (sgn(n4) <= 0 || sgn(n7) <= 0)
        throw DimensionMismatchError("chi1_tilde_sq: n4 and n7 must be positive");
    std::size_t n = degrees.size();
    if (M.rows() != n + 1 || M.cols() != n + 1)
        throw DimensionMismatchError("chi1_tilde_sq: matrix must be (n+1) x (n+1)");
    // column weights: n4 * d_l * n7^(d_l - 1) for the Jacobian columns, n7 for
    // the last (z*) column
    std::vector<mpq_class> w(n + 1);
    for (std::size_t l = 0; l < n; ++l) {
        mpq_class p = 1;
        for (unsigned e = 1; e < degrees[l]; ++e) p *= n7;
        w[l] = n4 * mpq_class(degrees[l]) * p;
    }
    w[n] = n7;
    return frobenius_sq_weighted(M, w);
}

mpq_class b_factor(const QMatrix& M, const QVector& v1, const QVector& v2,
                   const mpq_class& n1, const mpq_class& n4, const mpq_class& n5,
                   const mpq_class& n7) {
    std::size_t n = v1.size();
    if (v2.size() != n || M.rows() != n + 1 || M.cols() != n + 1)
        throw DimensionMismatchError("b_factor: shape mismatch");
    mpq_class den = n1 * n4 - n5 * n5;
    if (sgn(den) <= 0) throw CollinearSystemsError();
    QVector v3(n + 1);
    for (std::size_t i = 0; i < n; ++i) v3[i] = n4 * v1[i] - n5 * v2[i];
    // last entry of (v3; 0) stays zero
    QVector v4 = mat_vec(M, v3);
    return 1 + norm_sq(v4) / (n7 * den);
}

StepWindow step_window(const mpq_class& a, const mpq_class& b, unsigned d) {
    if (sgn(a) <= 0 || sgn(b) <= 0)
        throw DimensionMismatchError("step_window: a, b must be positive");
    StepWindow w;
    w.W = Constants::w0(d) / (a * b);
    w.L = 1 - w.W + (w.W * w.W) / 6;
    w.U = 1 - w.W / 2;
    return w;
}

QVector newton_update(const QMatrix& jac, const QVector& value, const QVector& z) {
    std::size_t n = jac.rows();
    if (jac.cols() != n + 1 || z.size() != n + 1 || value.size() != n)
        throw DimensionMismatchError("newton_update: shape mismatch");
    QMatrix aug(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= n; ++j) aug(i, j) = jac(i, j);
    for (std::size_t j = 0; j <= n; ++j) aug(n, j) = z[j].conj();
    QVector rhs(n + 1);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = value[i];
    QVector w = solve_linear(aug, rhs);
    return z - w;
}

QVector newton_step(const PolySystem& f, const QVector& z) {
    return newton_update(jacobian(f, z), evaluate(f, z), z);
}

} // namespace certitrack
