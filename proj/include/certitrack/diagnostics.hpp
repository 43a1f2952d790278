#pragma once

#include <string>
#include <vector>

#include "certitrack/polysys.hpp"
#include "certitrack/tracker.hpp"

namespace certitrack {

// The desk-scale benchmark family: g = x1^2 - x0^2, f = x1^2 - (1+m) x0^2,
// exact start zero z0 = (1,1); the path zero is (1, sqrt(1+ms)).
struct ToyFamily {
    mpq_class m;

    PolySystem g() const;
    PolySystem f() const;
    QVector z0() const;
};

// One benchmark row: condition length, derived step bounds, observed steps.
struct BoundsRow {
    mpq_class m;
    double c0 = 0;
    long lb = 0;        // floor(28 * c0) -- the printed-table lower bound
    long lb_text = 0;   // floor(28 * d^(3/2) * c0), the alternative closed form
    long ub = 0;        // ceil(79 * sqrt(n+1) * d^(3/2) * c0)
    unsigned long observed_steps = 0;
    double ratio_ub_over_steps = 0;
};

// Condition length of the toy path: integral over s in [1, 1+m] of
//   sqrt(1+s^2)/sqrt(2s) * sqrt(1/(1+s^2)^2 + 1/(4s(1+s)^2)).
// Adaptive Simpson quadrature to the given relative tolerance.  Throws
// QuadratureError if the subdivision cap is hit; std::invalid_argument for
// m <= 0 or rel_tol outside (0, 1e-4].
double condition_length_toy(const mpq_class& m, double rel_tol = 1e-8);

// (floor(28*c0), ceil(79*sqrt(n+1)*d^(3/2)*c0))
std::pair<long, long> step_bounds(double c0, unsigned n, unsigned d);
long step_lower_bound_text(double c0, unsigned d);

// Operator-norm condition number at double precision:
//   mu = ||f|| * sigma_max( (Df(z)|_{z_perp})^{-1} * Diag(sqrt(d_i)*||z||^(d_i-1)) ),
// +infinity when the restricted Jacobian is singular.  Exact inputs are converted
// to double only at the very end of each entry computation.
double mu_operator(const PolySystem& f, const QVector& z);

// Projective distance d_R(u,v) = acos(|<u,v>|/(||u|| ||v||)) at double precision
// from exact inner products.
double projective_distance(const QVector& u, const QVector& v);

struct ContractionReport {
    std::vector<double> displacements; // d_R between consecutive Newton iterates
    bool pass = false;
    bool singular = false; // Jacobian (augmented) singular at some iterate
    std::string message;
};

// Quadratic-basin proxy: run `iters` exact Newton steps from z and require each
// displacement to be at most 0.51x the previous one.  Heuristic screen, not a
// certificate (the true zero is unknown).
ContractionReport newton_contraction_check(const PolySystem& f, const QVector& z, unsigned iters);

struct BitStats {
    unsigned max_z_bits = 0;
    double mean_z_bits = 0;
    unsigned max_s_den_bits = 0;
    double mean_s_den_bits = 0;
};

BitStats bit_stats(const std::vector<StepRecord>& trace);

// Quadrature + tracker run for one toy m; cfg controls the tracking.
BoundsRow bounds_row_toy(const mpq_class& m, const TrackerConfig& cfg = {});

// The 18 m-values of the reference benchmark sweep.
const std::vector<long>& benchmark_m_values();

// Aligned-column rendering of rows: m, LB, steps, UB, UB/steps.
std::string bounds_table(const std::vector<BoundsRow>& rows);
std::string bounds_csv(const std::vector<BoundsRow>& rows); // m,ratio pairs

} // namespace certitrack
