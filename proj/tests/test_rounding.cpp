#include <doctest.h>

#include <cmath>
#include <random>

#include "certitrack/errors.hpp"
#include "certitrack/rounding.hpp"

using namespace certitrack;

namespace {

std::mt19937_64 rng(90021);

mpq_class rnd_q(long num_span, long den_span) {
    std::uniform_int_distribution<long> num(-num_span, num_span);
    std::uniform_int_distribution<long> den(1, den_span);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

QVector point2(mpq_class a, mpq_class b) {
    QVector z(2);
    z[0] = GaussianRational(std::move(a));
    z[1] = GaussianRational(std::move(b));
    return z;
}

bool is_gaussian_integer(const GaussianRational& g) {
    return g.re.get_den() == 1 && g.im.get_den() == 1;
}

double proj_dist(const QVector& u, const QVector& v) {
    mpq_class ip = hermitian_inner(u, v).abs_sq();
    mpq_class c2 = ip / (norm_sq(u) * norm_sq(v));
    double x = c2.get_d();
    if (x > 1) x = 1;
    if (x < 0) x = 0;
    return std::acos(std::sqrt(x));
}

} // namespace

TEST_CASE("short_zero hand-traced example: (1, 1001/1000), eps = 1/10") {
    RoundingResult r = short_zero(point2(1, mpq_class(1001, 1000)), mpq_class(1, 10));
    CHECK(r.k == 7);
    CHECK(r.z_tilde[0].re == 7);
    CHECK(r.z_tilde[1].re == 7);
    CHECK(r.z_tilde[0].im == 0);
    CHECK(r.z_tilde[1].im == 0);
    CHECK(r.coord_bound_sq == 180); // 9*2/(1/10)
}

TEST_CASE("short_zero stays put on already-short integer points") {
    RoundingResult r = short_zero(point2(1, 0), mpq_class(1, 10));
    CHECK(r.k == 0);
    CHECK(r.z_tilde[0].re == 1);
    CHECK(r.z_tilde[1].re == 0);

    // denominators cleared first: (3/2, 0) scales to (3, 0) and k stays 0
    r = short_zero(point2(mpq_class(3, 2), 0), mpq_class(1, 10));
    CHECK(r.k == 0);
    CHECK(r.z_tilde[0].re == 3);
    CHECK(r.z_tilde[1].re == 0);
}

TEST_CASE("short_zero guards") {
    CHECK_THROWS_AS(short_zero(point2(0, 0), mpq_class(1, 10)), ZeroVectorError);
    CHECK_THROWS_AS(short_zero(point2(1, 1), mpq_class(1, 5)), EpsOutOfRangeError);  // eps = 1/5
    CHECK_THROWS_AS(short_zero(point2(1, 1), 0), EpsOutOfRangeError);
    CHECK_THROWS_AS(short_zero(point2(1, 1), mpq_class(-1, 10)), EpsOutOfRangeError);
    CHECK_THROWS_AS(short_zero(point2(1, 1), 1), EpsOutOfRangeError);
}

TEST_CASE("short_zero randomized contract: bound, drift, integrality") {
    std::uniform_int_distribution<long> eps_den(6, 5000);
    std::uniform_int_distribution<int> dim(2, 5);
    for (int rep = 0; rep < 1000; ++rep) {
        std::size_t n = dim(rng);
        QVector z(n);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = GaussianRational(rnd_q(2000, 60), rnd_q(2000, 60));
            nonzero |= !z[i].is_zero();
        }
        if (!nonzero) continue;
        mpq_class eps(1, eps_den(rng));

        RoundingResult r = short_zero(z, eps);

        // Gaussian-integer output, not the zero vector
        bool any = false;
        for (std::size_t i = 0; i < r.z_tilde.size(); ++i) {
            CHECK(is_gaussian_integer(r.z_tilde[i]));
            any |= !r.z_tilde[i].is_zero();
        }
        CHECK(any);

        // exact coordinate bound: |re|^2, |im|^2 <= 9(n+1)/eps.  n here is the
        // projective dimension so n+1 = number of coordinates.
        mpq_class bound = mpq_class(9 * z.size()) / eps;
        CHECK(r.coord_bound_sq == bound);
        for (std::size_t i = 0; i < r.z_tilde.size(); ++i) {
            CHECK(r.z_tilde[i].re * r.z_tilde[i].re <= bound);
            CHECK(r.z_tilde[i].im * r.z_tilde[i].im <= bound);
        }

        // certified projective drift (float check with a whisker of slack)
        CHECK(proj_dist(r.z_tilde, z) <= std::sqrt(eps.get_d()) + 1e-12);
    }
}

TEST_CASE("short_zero is scale-invariant on the projective input") {
    for (int rep = 0; rep < 100; ++rep) {
        QVector z = point2(rnd_q(500, 40), rnd_q(500, 40));
        if (z.is_zero()) continue;
        mpq_class c = rnd_q(60, 10);
        if (sgn(c) <= 0) continue;
        // rational positive scaling: same projective point, same certified data
        QVector cz = point2(c * z[0].re, c * z[1].re);
        mpq_class eps(1, 37);
        RoundingResult a = short_zero(z, eps);
        RoundingResult b = short_zero(cz, eps);
        CHECK(proj_dist(a.z_tilde, b.z_tilde) <= 2 * std::sqrt(eps.get_d()) + 1e-12);
        CHECK(a.coord_bound_sq == b.coord_bound_sq);
    }
}

TEST_CASE("short_zero output is reproducible and idempotent-ish") {
    QVector z = point2(mpq_class(355, 113), mpq_class(-22, 7));
    mpq_class eps(1, 50);
    RoundingResult a = short_zero(z, eps);
    RoundingResult b = short_zero(z, eps);
    CHECK(a.z_tilde == b.z_tilde);
    CHECK(a.k == b.k);

    // rounding an already-rounded point moves it by at most the same drift
    RoundingResult c = short_zero(a.z_tilde, eps);
    CHECK(proj_dist(c.z_tilde, a.z_tilde) <= std::sqrt(eps.get_d()) + 1e-12);
}
