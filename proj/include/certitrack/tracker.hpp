#pragma once

#include <optional>
#include <string>
#include <vector>

#include "certitrack/conditioning.hpp"
#include "certitrack/polysys.hpp"

namespace certitrack {

enum class TrackStatus {
    Certified,
    HypothesisViolated,
    SingularEncountered,
    MaxStepsExceeded,
};

const char* to_string(TrackStatus s);

enum class TraceLevel { None, Summary, Full };

struct TrackerConfig {
    unsigned long max_steps = 1000000;
    bool denominator_matching = true;
    unsigned bisection_cap_slack = 64;
    TraceLevel trace_level = TraceLevel::Summary;
    // safety fuse (CERTITRACK_MAX_BITS): 0 = unlimited; otherwise the tracker
    // throws BitLimitExceededError when any coordinate numerator/denominator
    // outgrows this many bits
    unsigned max_coord_bits = 0;
};

// One record per executed step.  s is the path parameter reached BY this step
// (so the final record has s = 1 on certified runs and s increases strictly);
// the other fields are the quantities the step was computed from, z_bits the
// maximal coordinate bit length of the rounded point the step produced.
struct StepRecord {
    unsigned long i = 0;
    mpq_class s, t;
    mpq_class a, b;
    mpq_class W, L, U;
    mpq_class eps;
    unsigned z_bits = 0;
    unsigned lu_depth = 0;
    std::optional<QVector> z; // populated at TraceLevel::Full
};

struct TrackResult {
    QVector z_star;
    unsigned long steps = 0;
    std::vector<StepRecord> trace;
    TrackStatus status = TrackStatus::Certified;
    std::string message; // diagnostic detail for non-certified outcomes
};

struct CachedInvariants {
    mpq_class n1;    // ||f||^2
    mpq_class n2;    // ||g||^2
    mpq_class n3;    // Re<f,g>
    mpq_class n_dot; // ||f-g||^2 = n1 + n2 - 2*n3
};

CachedInvariants cache_invariants(const PolySystem& f, const PolySystem& g);

// max bit length over all coordinate numerators and denominators (re and im)
unsigned max_coord_bits(const QVector& z);

// Certified segment tracking: follow f_s = (1-s)g + s*f from s=0 to s=1 starting
// at z0 (trusted to approximate a zero of g), choosing every step size so the
// certification invariant survives, and rounding every iterate to a short
// Gaussian-integer point.  On Certified, z_star is an approximate zero of f.
TrackResult track_segment(const PolySystem& f, const PolySystem& g, const QVector& z0,
                          const TrackerConfig& cfg = {});

} // namespace certitrack
