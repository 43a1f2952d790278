#include "certitrack/stepsize.hpp"

#include <stdexcept>

#include "certitrack/conditioning.hpp"
#include "certitrack/errors.hpp"

namespace certitrack {

SignResult compute_sign(const mpq_class& theta1, const mpq_class& theta2, const mpq_class& theta3,
                        const mpq_class& t, const mpq_class& L, const mpq_class& U) {
    mpq_class num = theta1 + t * theta2;
    // denominator theta1*(theta1 + 2t*theta2 + t^2*theta3) is positive whenever
    // theta2^2 < theta1*theta3 (negative discriminant), so r is well defined
    mpq_class r = (num * num) / (theta1 * (theta1 + 2 * t * theta2 + t * t * theta3));
    mpq_class mid = (L + U) / 2;
    int s = (sgn(num) > 0 && r > mid * mid) ? 1 : -1;
    return {s, std::move(r)};
}

namespace {

void validate(const StepQuery& q) {
    if (sgn(q.theta1) <= 0 || sgn(q.theta3) <= 0)
        throw std::invalid_argument("lu_quadratic: theta1 and theta3 must be positive");
    if (q.theta2 * q.theta2 >= q.theta1 * q.theta3)
        throw std::invalid_argument("lu_quadratic: need theta2^2 < theta1*theta3 (collinear input)");
    // The correctness argument needs only 0 < L < U < 1 (beta decreases under
    // the theta invariants); tracker-produced windows additionally sit within
    // 10^-3 of 1, but the routine stays usable for wider test windows.
    if (!(0 < q.L && q.L < q.U && q.U < 1))
        throw std::invalid_argument("lu_quadratic: need 0 < L < U < 1");
}

// depth cap: proven bound on the bisection depth, plus slack.  Matching
// continuation also has to fit under it; the slack dwarfs realistic
// denominators, so a trip always means a broken precondition.
unsigned depth_cap(const StepQuery& q, unsigned slack) {
    mpq_class bound = 16 * q.theta3 / (q.theta1 * (q.U - q.L));
    unsigned cap = slack;
    if (bound > 1) {
        mpz_class ratio = bound.get_num() / bound.get_den() + 1;
        cap += static_cast<unsigned>(mpz_sizeinbase(ratio.get_mpz_t(), 2));
    }
    return cap;
}

} // namespace

StepResult lu_quadratic(const StepQuery& q, const LuOptions& opts) {
    validate(q);
    mpq_class L2 = q.L * q.L;
    mpq_class U2 = q.U * q.U;

    // t = 1 first: if beta(1) >= L there is nothing to bisect -- either 1 is
    // valid, or beta never drops to [L, U] at all and the search is exhausted.
    SignResult at_one = compute_sign(q.theta1, q.theta2, q.theta3, 1, q.L, q.U);
    if (sgn(q.theta1 + q.theta2) > 0 && at_one.r >= L2)
        return {mpq_class(1), 0, at_one.r > U2};

    unsigned cap = depth_cap(q, opts.cap_slack);
    mpz_class target = opts.denominator_matching ? opts.target_denominator : mpz_class(1);

    // invariant: beta(lo) > (L+U)/2 > beta(hi); beta decreases, so the bracket
    // always contains the crossing point and some valid t
    mpq_class lo = 0, hi = 1;
    mpq_class t(1, 2);
    unsigned depth = 0;
    for (;;) {
        SignResult sr = compute_sign(q.theta1, q.theta2, q.theta3, t, q.L, q.U);
        bool valid = sgn(q.theta1 + t * q.theta2) >= 0 && L2 <= sr.r && sr.r <= U2;
        if (valid && t.get_den() >= target) return {t, depth, false};
        if (sr.s == 1)
            lo = t;
        else
            hi = t;
        t = (lo + hi) / 2;
        ++depth;
        if (depth > cap)
            throw BisectionCapExceededError("lu_quadratic: bisection depth " + std::to_string(depth) +
                                            " exceeded cap " + std::to_string(cap));
    }
}

bool real_collinear(const PolySystem& f, const PolySystem& g) {
    GaussianRational ip = bw_inner(f, g);
    if (sgn(ip.im) != 0) return false;
    return ip.re * ip.re == bw_norm_sq(f) * bw_norm_sq(g);
}

bool check_hypothesis(const PolySystem& f, const PolySystem& g) {
    PolySystem diff = linear_combination(GaussianRational(1, 0), f, GaussianRational(-1, 0), g);
    mpq_class re = bw_inner(g, diff).re;
    if (sgn(re) >= 0) return true;
    const mpq_class& l0 = Constants::l0();
    return re * re <= l0 * l0 * bw_norm_sq(g) * bw_norm_sq(diff);
}

} // namespace certitrack
