#include "certitrack/rounding.hpp"

#include <cassert>

#include "certitrack/errors.hpp"

namespace certitrack {

RoundingResult short_zero(const QVector& z, const mpq_class& eps) {
    if (z.is_zero()) throw ZeroVectorError("short_zero: z = 0");
    if (!(sgn(eps) > 0 && eps < mpq_class(1, 5))) throw EpsOutOfRangeError();

    std::size_t len = z.size(); // n+1

    // m = product of all 2(n+1) denominators (the analyzed scaling, not the lcm)
    mpz_class m = 1;
    for (std::size_t i = 0; i < len; ++i) {
        m *= z[i].re.get_den();
        m *= z[i].im.get_den();
    }

    // x = m*z is a Gaussian-integer vector
    std::vector<mpz_class> xre(len), xim(len);
    mpz_class x_norm_sq = 0;
    for (std::size_t i = 0; i < len; ++i) {
        mpq_class r = z[i].re * m, im = z[i].im * m;
        assert(r.get_den() == 1 && im.get_den() == 1);
        xre[i] = r.get_num();
        xim[i] = im.get_num();
        x_norm_sq += xre[i] * xre[i] + xim[i] * xim[i];
    }

    // largest k with 4^k <= eps*||x||^2/(2(n+1)r), r = (21/20)^2 = 441/400;
    // literally: alpha starts at 4 and quadruples while alpha <= threshold
    mpq_class threshold = eps * mpq_class(x_norm_sq) / (2 * mpq_class(len) * mpq_class(441, 400));
    mpq_class alpha = 4;
    unsigned k = 0;
    while (alpha <= threshold) {
        alpha *= 4;
        ++k;
    }

    // truncate 2^-k x toward zero
    RoundingResult out;
    out.k = k;
    out.z_tilde = QVector(len);
    bool any_nonzero = false;
    for (std::size_t i = 0; i < len; ++i) {
        mpz_class tre, tim;
        mpz_tdiv_q_2exp(tre.get_mpz_t(), xre[i].get_mpz_t(), k);
        mpz_tdiv_q_2exp(tim.get_mpz_t(), xim[i].get_mpz_t(), k);
        any_nonzero |= (sgn(tre) != 0 || sgn(tim) != 0);
        out.z_tilde[i] = GaussianRational(mpq_class(tre), mpq_class(tim));
    }
    if (!any_nonzero) throw RoundedToZeroError();

    out.coord_bound_sq = 9 * mpq_class(len) / eps;
#ifndef NDEBUG
    for (std::size_t i = 0; i < len; ++i) {
        assert(out.z_tilde[i].re * out.z_tilde[i].re <= out.coord_bound_sq);
        assert(out.z_tilde[i].im * out.z_tilde[i].im <= out.coord_bound_sq);
    }
#endif
    return out;
}

} // namespace certitrack
