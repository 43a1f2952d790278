#pragma once

#include "certitrack/linalg.hpp"
#include "certitrack/polysys.hpp"

namespace certitrack {

// The fixed rational run-time constants.  All exact; no decimal truncation
// anywhere (u0 = 0.17586 is stored as 8793/50000 and eps0 is derived from it
// symbolically).
struct Constants {
    static const mpq_class& u0();      // 8793/50000
    static const mpq_class& delta();   // 3/4
    static const mpq_class& w0_num();  // 17/50000
    static const mpq_class& l0();      // 999/1000

    // eps0(d) = u0^2 / ((4d)^3 * (1 + 9*u0/8)^2); < 1/5 for every d >= 1,
    // which is what the rounding step's precondition needs.
    static mpq_class eps0(unsigned d);

    // W0(d) = (17/50000) / d^3
    static mpq_class w0(unsigned d);
};

// Everything the tracker derives from one linear-system factorization: the
// inverse augmented matrix M and the scalars built on top of it.
struct ConditionData {
    mpq_class a;       // weighted squared Frobenius norm (chi1 with Frobenius norm)
    mpq_class b;       // 1 + ||v4||^2 / (n7(n1*n4 - n5^2))  (chi2 squared)
    mpq_class phi_sq;  // a*b
    mpq_class W, L, U;
    mpq_class eps;     // eps0(d) / a
    QMatrix M;
};

// Inverse of the (n+1)x(n+1) matrix whose first n rows are Dg and whose last
// row is the conjugate transpose of z.  Throws SingularMatrixError.
QMatrix augmented_inverse(const QMatrix& Dg, const QVector& z);

// a = n4 * sum_k sum_{l<n} d_{l+1} |m_{kl}|^2 n7^(d_{l+1}-1)  +  sum_k |m_{kn}|^2 n7,
// i.e. the squared Frobenius norm of M * Diag(sqrt(d_l * n4) * n7^((d_l-1)/2), sqrt(n7)).
// Exact; only squares of the diagonal appear so no root is ever taken.
mpq_class chi1_tilde_sq(const QMatrix& M, const mpq_class& n4, const mpq_class& n7,
                        const std::vector<unsigned>& degrees);

// b = 1 + ||M(n4*v1 - n5*v2; 0)||^2 / (n7 (n1*n4 - n5^2)).
// Throws CollinearSystemsError when the denominator is not positive.
mpq_class b_factor(const QMatrix& M, const QVector& v1, const QVector& v2,
                   const mpq_class& n1, const mpq_class& n4, const mpq_class& n5,
                   const mpq_class& n7);

struct StepWindow {
    mpq_class W, L, U;
};

// W = W0(d)/(a*b); L = 1 - W + W^2/6; U = 1 - W/2.  Always 0 < L < U < 1.
StepWindow step_window(const mpq_class& a, const mpq_class& b, unsigned d);

// Projective Newton update z - (jac; z*)^{-1} (value; 0) given an already
// evaluated Jacobian and system value.  The tracker combines the two cached
// Jacobians affinely and calls this; it never re-differentiates the combined
// system.
QVector newton_update(const QMatrix& jac, const QVector& value, const QVector& z);

// Convenience form evaluating f and Df directly (diagnostics, tests).
QVector newton_step(const PolySystem& f, const QVector& z);

} // namespace certitrack
