#pragma once

#include "certitrack/linalg.hpp"

namespace certitrack {

struct RoundingResult {
    QVector z_tilde;          // Gaussian-integer entries, nonzero
    unsigned k = 0;           // scaling exponent: z_tilde = trunc(2^-k * m * z)
    mpq_class coord_bound_sq; // certified bound 9(n+1)/eps on every |re|^2, |im|^2
};

// Replace a projective point with a nearby short Gaussian-integer representative:
// clear denominators (m = product of all 2(n+1) coordinate denominators, x = m*z),
// pick the largest k with 4^k <= eps*||x||^2 / (2(n+1)*(21/20)^2), and truncate
// 2^-k * x toward zero.  The projective drift satisfies d_R(z_tilde, z) <= sqrt(eps)
// and every output integer c obeys c^2 <= 9(n+1)/eps, both certified.
//
// Preconditions: z != 0 (ZeroVectorError), 0 < eps < 1/5 (EpsOutOfRangeError).
// RoundedToZeroError guards the all-coordinates-truncated-to-zero case, which is
// unreachable when the preconditions hold.
RoundingResult short_zero(const QVector& z, const mpq_class& eps);

} // namespace certitrack
