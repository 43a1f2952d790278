#pragma once

#include <stdexcept>
#include <string>

namespace certitrack {

// Base class so callers can catch everything the library throws with one handler.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Linear algebra: the (augmented) matrix is not invertible.  This is a reportable
// condition-failure value, not a programming error -- the tracker turns it into a
// SingularEncountered status with the step index attached.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& what = "singular matrix") : Error(what) {}
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

// n1*n4 - n5^2 <= 0: the two systems (or a path point and the target) are
// real-collinear and the chi2 denominator degenerates.
struct CollinearSystemsError : Error {
    explicit CollinearSystemsError(const std::string& what = "systems are real-collinear") : Error(what) {}
};

// Bisection ran past its configured depth cap.  The cap sits well above the proven
// depth bound, so tripping it means a precondition was violated upstream; hard error.
struct BisectionCapExceededError : Error {
    explicit BisectionCapExceededError(const std::string& what) : Error(what) {}
};

struct ZeroVectorError : Error {
    explicit ZeroVectorError(const std::string& what = "zero vector") : Error(what) {}
};

struct EpsOutOfRangeError : Error {
    explicit EpsOutOfRangeError(const std::string& what = "eps must lie in (0, 1/5)") : Error(what) {}
};

// All coordinates truncated to zero while rounding; cannot happen when the rounding
// preconditions hold, but guarded so we never emit an invalid projective point.
struct RoundedToZeroError : Error {
    explicit RoundedToZeroError(const std::string& what = "rounding produced the zero vector") : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct QuadratureError : Error {
    explicit QuadratureError(const std::string& what) : Error(what) {}
};

// Safety fuse: an intermediate coordinate outgrew the configured bit cap
// (CERTITRACK_MAX_BITS).  Distinct from every tracker status.
struct BitLimitExceededError : Error {
    explicit BitLimitExceededError(const std::string& what) : Error(what) {}
};

} // namespace certitrack
