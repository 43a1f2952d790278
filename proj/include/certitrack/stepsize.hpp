#pragma once

#include "certitrack/polysys.hpp"

namespace certitrack {

// Inputs of one step-size query.  theta1 = ||g_i||^2, theta2 = Re<g_i, f-g>,
// theta3 = ||f-g||^2 in tracker use, but any rationals satisfying the
// invariants are accepted:
//   theta1, theta3 > 0;  theta2^2 < theta1*theta3;  0 < L < U < 1
// (the tracker always supplies L within 10^-3 of 1).
struct StepQuery {
    mpq_class theta1, theta2, theta3;
    mpq_class L, U;
};

// t is always a dyadic rational in (0, 1]; depth counts executed bisection
// halvings (the returned t has reduced denominator at most 2^(depth+1)).
// exhausted means "no valid t exists, take t = 1 and finish the segment".
struct StepResult {
    mpq_class t;
    unsigned depth = 0;
    bool exhausted = false;
};

struct SignResult {
    int s;        // +1 iff beta(t) > (L+U)/2, tracked without square roots
    mpq_class r;  // (theta1 + t*theta2)^2 / (theta1 * (theta1 + 2t*theta2 + t^2*theta3))
};

// Sign oracle: decides which side of (L+U)/2 the decreasing function
//   beta(t) = (theta1 + t*theta2) / sqrt(theta1 * (theta1 + 2t*theta2 + t^2*theta3))
// falls on, comparing squares and the numerator sign only.
SignResult compute_sign(const mpq_class& theta1, const mpq_class& theta2, const mpq_class& theta3,
                        const mpq_class& t, const mpq_class& L, const mpq_class& U);

struct LuOptions {
    // Keep bisecting past the first valid t until its (power-of-two) denominator
    // is at least target_denominator, so s + t reduces instead of deepening.
    bool denominator_matching = false;
    mpz_class target_denominator = 1;
    // depth cap = slack + ceil(log2(max(1, 16*theta3/(theta1*(U-L)))))
    unsigned cap_slack = 64;
};

// Bisection search for t with L <= beta(t) <= U:
//   - t = 1 accepted immediately when beta(1) >= L; exhausted if also beta(1) > U
//     (then no valid t exists anywhere and the caller finishes the segment);
//   - otherwise bisect [0,1] keeping beta(lo) > (L+U)/2 > beta(hi) until the
//     midpoint is valid (exact squared comparisons throughout).
// Throws BisectionCapExceededError past the depth cap (only reachable when the
// preconditions are violated) and std::invalid_argument on bad queries.
StepResult lu_quadratic(const StepQuery& q, const LuOptions& opts = {});

// Exact check that <f,g> has zero imaginary part and Re<f,g>^2 = ||f||^2*||g||^2
// (Cauchy-Schwarz equality), i.e. g is a real multiple of f.  Such pairs are
// rejected before tracking.
bool real_collinear(const PolySystem& f, const PolySystem& g);

// Input guard: true iff Re<g, f-g> >= -L0*||g||*||f-g||, decided in the square-
// compare form (Re >= 0, or Re^2 <= L0^2*||g||^2*||f-g||^2).  The matching upper
// bound Re<g,f-g> <= ||g||*||f-g|| is Cauchy-Schwarz and needs no check.
bool check_hypothesis(const PolySystem& f, const PolySystem& g);

} // namespace certitrack
