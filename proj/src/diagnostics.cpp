#include "certitrack/diagnostics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "certitrack/errors.hpp"

namespace certitrack {

PolySystem ToyFamily::g() const {
    std::vector<MonomialTerm> terms{
        {{2u, 0u}, GaussianRational(mpq_class(-1))},
        {{0u, 2u}, GaussianRational(mpq_class(1))},
    };
    return PolySystem({HomogeneousPolynomial(2, 2, std::move(terms))});
}

PolySystem ToyFamily::f() const {
    std::vector<MonomialTerm> terms{
        {{2u, 0u}, GaussianRational(-(1 + m))},
        {{0u, 2u}, GaussianRational(mpq_class(1))},
    };
    return PolySystem({HomogeneousPolynomial(2, 2, std::move(terms))});
}

QVector ToyFamily::z0() const {
    QVector z(2);
    z[0] = GaussianRational(1, 0);
    z[1] = GaussianRational(1, 0);
    return z;
}

namespace {

double toy_integrand(double s) {
    double s2 = s * s;
    double chi1 = std::sqrt(1 + s2) / std::sqrt(2 * s);
    double dlen = std::sqrt(1.0 / ((1 + s2) * (1 + s2)) + 1.0 / (4 * s * (1 + s) * (1 + s)));
    return chi1 * dlen;
}

double simpson(double a, double fa, double m, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4 * fm + fb);
}

// classic adaptive Simpson with Richardson correction; eps is an absolute
// tolerance for this interval
double adaptive(double a, double fa, double b, double fb, double m, double fm, double whole,
                double eps, int depth, long& evals) {
    if (depth <= 0 || evals > 20'000'000)
        throw QuadratureError("condition_length_toy: subdivision cap exceeded");
    double lm = (a + m) / 2, rm = (m + b) / 2;
    double flm = toy_integrand(lm), frm = toy_integrand(rm);
    evals += 2;
    double left = simpson(a, fa, lm, flm, m, fm);
    double right = simpson(m, fm, rm, frm, b, fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15 * eps) return left + right + delta / 15.0;
    return adaptive(a, fa, m, fm, lm, flm, left, eps / 2, depth - 1, evals) +
           adaptive(m, fm, b, fb, rm, frm, right, eps / 2, depth - 1, evals);
}

} // namespace

double condition_length_toy(const mpq_class& m, double rel_tol) {
    if (sgn(m) <= 0) throw std::invalid_argument("condition_length_toy: m must be positive");
    if (!(rel_tol > 0 && rel_tol <= 1e-4))
        throw std::invalid_argument("condition_length_toy: rel_tol must lie in (0, 1e-4]");
    double a = 1.0, b = 1.0 + m.get_d();
    double fa = toy_integrand(a), fb = toy_integrand(b);
    double mid = (a + b) / 2, fmid = toy_integrand(mid);
    double coarse = simpson(a, fa, mid, fmid, b, fb);
    long evals = 3;
    // The 3-point estimate can overshoot the integral by orders of magnitude on
    // long intervals, so a relative tolerance keyed off it would be meaningless.
    // Run a cheap pilot pass first and scale the real tolerance by its value.
    double pilot_eps = std::max(std::abs(coarse), 1.0) * 1e-4;
    double pilot = adaptive(a, fa, b, fb, mid, fmid, coarse, pilot_eps, 64, evals);
    double eps = std::abs(pilot) * rel_tol;
    if (eps == 0) eps = rel_tol; // degenerate pilot; fall back to absolute
    return adaptive(a, fa, b, fb, mid, fmid, coarse, eps, 64, evals);
}

std::pair<long, long> step_bounds(double c0, unsigned n, unsigned d) {
    if (!(c0 > 0)) throw std::invalid_argument("step_bounds: c0 must be positive");
    double d32 = std::pow(double(d), 1.5);
    long lb = static_cast<long>(std::floor(28.0 * c0));
    long ub = static_cast<long>(std::ceil(79.0 * std::sqrt(double(n + 1)) * d32 * c0));
    return {lb, ub};
}

long step_lower_bound_text(double c0, unsigned d) {
    return static_cast<long>(std::floor(28.0 * std::pow(double(d), 1.5) * c0));
}

namespace {

std::complex<double> to_cd(const GaussianRational& g) {
    return {g.re.get_d(), g.im.get_d()};
}

} // namespace

double mu_operator(const PolySystem& f, const QVector& z) {
    using Eigen::MatrixXcd;
    if (z.is_zero()) throw ZeroVectorError("mu_operator: z = 0");
    const std::size_t n = f.n();

    QMatrix Df = jacobian(f, z);
    MatrixXcd J(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= n; ++j) J(i, j) = to_cd(Df(i, j));

    // orthonormal basis of the complement of z: QR of the single column z,
    // then drop the first column of the unitary factor
    Eigen::VectorXcd zc(n + 1);
    for (std::size_t j = 0; j <= n; ++j) zc(j) = to_cd(z[j]);
    Eigen::HouseholderQR<MatrixXcd> qr(zc);
    MatrixXcd Q = qr.householderQ();
    MatrixXcd basis = Q.rightCols(n);

    MatrixXcd B = J * basis; // restricted Jacobian, n x n
    Eigen::FullPivLU<MatrixXcd> lu(B);
    if (!lu.isInvertible()) return std::numeric_limits<double>::infinity();

    double z_norm = std::sqrt(norm_sq(z).get_d());
    MatrixXcd D = MatrixXcd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        D(i, i) = std::sqrt(double(f.degrees()[i])) * std::pow(z_norm, double(f.degrees()[i]) - 1.0);

    MatrixXcd A = lu.solve(D);
    Eigen::JacobiSVD<MatrixXcd> svd(A);
    double f_norm = std::sqrt(bw_norm_sq(f).get_d());
    return f_norm * svd.singularValues()(0);
}

double projective_distance(const QVector& u, const QVector& v) {
    mpq_class uu = norm_sq(u), vv = norm_sq(v);
    if (sgn(uu) == 0 || sgn(vv) == 0) throw ZeroVectorError("projective_distance: zero vector");
    mpq_class ip_sq = hermitian_inner(u, v).abs_sq();
    mpq_class cos_sq = ip_sq / (uu * vv); // exact, in [0,1] by Cauchy-Schwarz
    // Small angles cancel catastrophically in acos(sqrt(cos^2)); the sine is
    // recovered exactly in rationals instead, so tiny distances keep full
    // double precision.
    if (cos_sq * 2 >= 1) {
        mpq_class sin_sq = 1 - cos_sq;
        double s2 = sin_sq.get_d();
        if (s2 < 0) s2 = 0;
        return std::asin(std::sqrt(s2));
    }
    double c2 = cos_sq.get_d();
    if (c2 > 1) c2 = 1;
    if (c2 < 0) c2 = 0;
    return std::acos(std::sqrt(c2));
}

ContractionReport newton_contraction_check(const PolySystem& f, const QVector& z, unsigned iters) {
    if (iters < 2) throw std::invalid_argument("newton_contraction_check: iters must be >= 2");
    ContractionReport rep;
    QVector cur = z;
    for (unsigned l = 0; l < iters; ++l) {
        QVector next;
        try {
            next = newton_step(f, cur);
        } catch (const SingularMatrixError&) {
            rep.pass = false;
            rep.singular = true;
            rep.message = "singular Jacobian at Newton iterate " + std::to_string(l);
            return rep;
        }
        rep.displacements.push_back(projective_distance(cur, next));
        cur = std::move(next);
    }
    rep.pass = true;
    for (std::size_t l = 1; l < rep.displacements.size(); ++l) {
        if (rep.displacements[l] > 0.51 * rep.displacements[l - 1]) {
            rep.pass = false;
            rep.message = "displacement " + std::to_string(l) + " exceeds 0.51x the previous one";
            return rep;
        }
    }
    rep.message = "contraction holds";
    return rep;
}

BitStats bit_stats(const std::vector<StepRecord>& trace) {
    if (trace.empty()) throw std::invalid_argument("bit_stats: empty trace");
    BitStats st;
    double sum_z = 0, sum_s = 0;
    for (const auto& rec : trace) {
        unsigned sden = static_cast<unsigned>(mpz_sizeinbase(rec.s.get_den().get_mpz_t(), 2));
        st.max_z_bits = std::max(st.max_z_bits, rec.z_bits);
        st.max_s_den_bits = std::max(st.max_s_den_bits, sden);
        sum_z += rec.z_bits;
        sum_s += sden;
    }
    st.mean_z_bits = sum_z / double(trace.size());
    st.mean_s_den_bits = sum_s / double(trace.size());
    return st;
}

BoundsRow bounds_row_toy(const mpq_class& m, const TrackerConfig& cfg) {
    BoundsRow row;
    row.m = m;
    row.c0 = condition_length_toy(m);
    auto [lb, ub] = step_bounds(row.c0, 1, 2);
    row.lb = lb;
    row.ub = ub;
    row.lb_text = step_lower_bound_text(row.c0, 2);

    ToyFamily fam{m};
    TrackResult tr = track_segment(fam.f(), fam.g(), fam.z0(), cfg);
    if (tr.status != TrackStatus::Certified)
        throw Error(std::string("toy tracking failed: ") + to_string(tr.status) + " -- " + tr.message);
    row.observed_steps = tr.steps;
    row.ratio_ub_over_steps = double(row.ub) / double(tr.steps);
    return row;
}

const std::vector<long>& benchmark_m_values() {
    static const std::vector<long> v{10,   20,   30,   40,   50,    60,    70,    80,    90,
                                     100,  1000, 2000, 3000, 4000,  5000,  10000, 20000, 30000};
    return v;
}

std::string bounds_table(const std::vector<BoundsRow>& rows) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%10s %8s %8s %8s %10s\n", "m", "LB", "steps", "UB", "UB/steps");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%10s %8ld %8lu %8ld %10.2f\n", format_rational(r.m).c_str(),
                      r.lb, r.observed_steps, r.ub, r.ratio_ub_over_steps);
        out << line;
    }
    return out.str();
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
    std::ostringstream out;
    out << "m,ratio_ub_over_steps\n";
    char line[96];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%s,%.17g\n", format_rational(r.m).c_str(), r.ratio_ub_over_steps);
        out << line;
    }
    return out.str();
}

} // namespace certitrack
