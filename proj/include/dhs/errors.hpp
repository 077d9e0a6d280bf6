#pragma once

#include <stdexcept>
#include <string>

namespace dhs {

/// Base class for every typed error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- special-function kernel ----

/// Argument at (or within 1e-12 of) a non-positive integer pole of Gamma.
struct PoleError : Error {
  using Error::Error;
};

/// Series iteration cap reached before the relative-term tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

/// c - a - b within 1e-10 of an integer: the 2F1 connection formula breaks
/// down (its Gamma prefactors hit poles).
struct DegenerateParameterError : Error {
  using Error::Error;
};

// ---- model / general argument validation ----

/// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

/// Asymptotic wave-number radicand k^2 <= 0: the channel has no real
/// propagating solution at the requested energy (scattering ill-defined).
struct EvanescentChannelError : Error {
  double k_squared;
  EvanescentChannelError(const std::string& msg, double k2)
      : Error(msg), k_squared(k2) {}
};

/// Wavefunction-exponent radicand < 0: lambda is complex at the requested
/// parameters and the closed-form solution structure does not apply.
struct ComplexExponentError : Error {
  double radicand;
  ComplexExponentError(const std::string& msg, double rad)
      : Error(msg), radicand(rad) {}
};

// ---- bound-state solver ----

/// Root-search window empty or entirely parameter-invalid.
struct EmptyWindowError : Error {
  using Error::Error;
};

// ---- Numerov oracle ----

/// Integrated solution magnitude exceeded 1e300; caller must rescale.
struct OverflowError : Error {
  using Error::Error;
};

/// Eigenvalue bracket contains no node-count transition.
struct NoTransitionError : Error {
  using Error::Error;
};

/// Tail sine fit residual exceeded the quality threshold (1% of amplitude).
struct FitQualityError : Error {
  using Error::Error;
};

}  // namespace dhs
