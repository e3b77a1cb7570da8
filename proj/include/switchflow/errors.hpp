#pragma once

#include <stdexcept>
#include <string>

namespace switchflow {

/// Base class for all switchflow errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// ad >= bc: the interval [a/b, c/d] is empty or degenerate.
struct DegenerateIntervalError : Error { using Error::Error; };

/// b == 0 or d == 0: no drift fixed point.
struct ZeroSlopeError : Error { using Error::Error; };

/// b < 0 or d < 0: repelling drift configuration, not supported.
struct UnsupportedSignError : Error { using Error::Error; };

/// A switching rate is <= 0 somewhere it must be positive.
struct NonpositiveRateError : Error { using Error::Error; };

/// Evaluation requested outside the model interval (or table span).
struct OutOfDomainError : Error { using Error::Error; };

/// Operation defined for affine rates only.
struct NotAffineError : Error { using Error::Error; };

/// Normalization quadrature failed to reach the requested tolerance,
/// or the stationary density is not integrable.
struct NormalizationError : Error { using Error::Error; };

/// Time step violates the CFL stability bound.
struct CflViolationError : Error { using Error::Error; };

/// Two fields live on different grids.
struct GridMismatchError : Error { using Error::Error; };

/// The queried density component diverges at an endpoint; no finite maximum.
struct SingularComponentError : Error { using Error::Error; };

}  // namespace switchflow
