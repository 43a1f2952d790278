#include "certitrack/tracker.hpp"

#include <cassert>

#include "certitrack/errors.hpp"
#include "certitrack/rounding.hpp"
#include "certitrack/stepsize.hpp"

namespace certitrack {

const char* to_string(TrackStatus s) {
    switch (s) {
        case TrackStatus::Certified: return "Certified";
        case TrackStatus::HypothesisViolated: return "HypothesisViolated";
        case TrackStatus::SingularEncountered: return "SingularEncountered";
        case TrackStatus::MaxStepsExceeded: return "MaxStepsExceeded";
    }
    return "?";
}

CachedInvariants cache_invariants(const PolySystem& f, const PolySystem& g) {
    CachedInvariants c;
    c.n1 = bw_norm_sq(f);
    c.n2 = bw_norm_sq(g);
    c.n3 = bw_inner(f, g).re;
    c.n_dot = c.n1 + c.n2 - 2 * c.n3;
#ifndef NDEBUG
    {
        PolySystem diff = linear_combination(GaussianRational(1, 0), f, GaussianRational(-1, 0), g);
        assert(c.n_dot == bw_norm_sq(diff) && "n_dot must equal ||f-g||^2");
    }
#endif
    return c;
}

namespace {

unsigned bits_of(const mpz_class& v) {
    if (sgn(v) == 0) return 0;
    return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

} // namespace

unsigned max_coord_bits(const QVector& z) {
    unsigned m = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        m = std::max(m, bits_of(z[i].re.get_num()));
        m = std::max(m, bits_of(z[i].re.get_den()));
        m = std::max(m, bits_of(z[i].im.get_num()));
        m = std::max(m, bits_of(z[i].im.get_den()));
    }
    return m;
}

TrackResult track_segment(const PolySystem& f, const PolySystem& g, const QVector& z0,
                          const TrackerConfig& cfg) {
    TrackResult res;
    res.z_star = z0;

    if (f.n() != g.n() || f.degrees() != g.degrees())
        throw DimensionMismatchError("track_segment: f and g differ in shape or degrees");
    if (z0.size() != f.nvars())
        throw DimensionMismatchError("track_segment: start point has wrong length");

    // input guards: exact collinearity test, then the angle hypothesis
    // Re<g,f-g> >= -L0*||g||*||f-g||, which every path system inherits
    if (real_collinear(f, g)) {
        res.status = TrackStatus::HypothesisViolated;
        res.message = "f and g are real-collinear: Re<f,g>^2 = ||f||^2*||g||^2; "
                      "the hypothesis Re<g,f-g> >= -L0*||g||*||f-g|| (L0 = 999/1000) degenerates";
        return res;
    }
    if (!check_hypothesis(f, g)) {
        res.status = TrackStatus::HypothesisViolated;
        res.message = "input hypothesis violated: Re<g,f-g> < -L0*||g||*||f-g|| with L0 = 999/1000";
        return res;
    }

    const unsigned d = f.max_degree();
    const CachedInvariants inv = cache_invariants(f, g);
    const mpq_class eps0 = Constants::eps0(d);
    const auto check_bits = [&cfg](const QVector& v) {
        if (cfg.max_coord_bits == 0) return;
        unsigned b = max_coord_bits(v);
        if (b > cfg.max_coord_bits)
            throw BitLimitExceededError("coordinate bit length " + std::to_string(b) +
                                        " exceeds configured cap " + std::to_string(cfg.max_coord_bits));
    };

    QVector z = z0;
    mpq_class s = 0;
    unsigned long i = 0;

    while (s < 1) {
        if (i >= cfg.max_steps) {
            res.status = TrackStatus::MaxStepsExceeded;
            res.message = "step cap " + std::to_string(cfg.max_steps) + " reached at s = " + format_rational(s);
            res.z_star = z;
            res.steps = i;
            return res;
        }

        mpq_class one_minus_s = 1 - s;
        mpq_class n4 = one_minus_s * one_minus_s * inv.n2 + s * s * inv.n1 + 2 * s * one_minus_s * inv.n3;
        mpq_class n5 = one_minus_s * inv.n3 + s * inv.n1;
        mpq_class n6 = s * inv.n1 - one_minus_s * inv.n2 + (1 - 2 * s) * inv.n3;
        mpq_class n7 = norm_sq(z);

        // both Jacobians once per step; every later matrix is an affine combination
        QMatrix M1 = jacobian(g, z);
        QMatrix M2 = jacobian(f, z);

        ConditionData cond;
        try {
            cond.M = augmented_inverse(one_minus_s * M1 + s * M2, z);
        } catch (const SingularMatrixError&) {
            res.status = TrackStatus::SingularEncountered;
            res.message = "augmented Jacobian singular at step " + std::to_string(i) +
                          ", s = " + format_rational(s);
            res.z_star = z;
            res.steps = i;
            return res;
        }
        cond.a = chi1_tilde_sq(cond.M, n4, n7, f.degrees());
        if (sgn(cond.a) <= 0) { // only possible for a zero inverse; treat as condition failure
            res.status = TrackStatus::SingularEncountered;
            res.message = "degenerate condition estimate at step " + std::to_string(i);
            res.z_star = z;
            res.steps = i;
            return res;
        }

        QVector gz = evaluate(g, z);
        QVector v1 = evaluate(f, z);
        QVector v2 = one_minus_s * gz + s * v1;
        try {
            cond.b = b_factor(cond.M, v1, v2, inv.n1, n4, n5, n7);
        } catch (const CollinearSystemsError& e) {
            // unreachable once the upfront guard passed; report rather than crash
            res.status = TrackStatus::HypothesisViolated;
            res.message = std::string("collinearity degeneracy mid-path: ") + e.what();
            res.z_star = z;
            res.steps = i;
            return res;
        }
        cond.phi_sq = cond.a * cond.b;

        StepWindow win = step_window(cond.a, cond.b, d);
        cond.W = win.W;
        cond.L = win.L;
        cond.U = win.U;
        cond.eps = eps0 / cond.a;

        LuOptions lu_opts;
        lu_opts.denominator_matching = cfg.denominator_matching;
        lu_opts.target_denominator = s.get_den();
        lu_opts.cap_slack = cfg.bisection_cap_slack;
        StepResult step = lu_quadratic({n4, n6, inv.n_dot, win.L, win.U}, lu_opts);

        mpq_class s_next = s + step.t;
        if (s_next > 1) s_next = 1;

        // Newton step toward the zero of f_{s_next}, then shorten the iterate
        QVector v5 = (1 - s_next) * gz + s_next * v1;
        QVector z_next;
        try {
            z_next = newton_update((1 - s_next) * M1 + s_next * M2, v5, z);
        } catch (const SingularMatrixError&) {
            res.status = TrackStatus::SingularEncountered;
            res.message = "Newton system singular at step " + std::to_string(i) +
                          ", s' = " + format_rational(s_next);
            res.z_star = z;
            res.steps = i;
            return res;
        }
        check_bits(z_next);
        RoundingResult rounded = short_zero(z_next, cond.eps);
        check_bits(rounded.z_tilde);

        z = std::move(rounded.z_tilde);
        s = std::move(s_next);
        ++i;

        if (cfg.trace_level != TraceLevel::None) {
            StepRecord rec;
            rec.i = i - 1;
            rec.s = s;
            rec.t = step.t;
            rec.a = cond.a;
            rec.b = cond.b;
            rec.W = cond.W;
            rec.L = cond.L;
            rec.U = cond.U;
            rec.eps = cond.eps;
            rec.z_bits = max_coord_bits(z);
            rec.lu_depth = step.depth;
            if (cfg.trace_level == TraceLevel::Full) rec.z = z;
            res.trace.push_back(std::move(rec));
        }
    }

    res.z_star = z;
    res.steps = i;
    res.status = TrackStatus::Certified;
    return res;
}

} // namespace certitrack
