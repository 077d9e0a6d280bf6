#pragma once

#include <complex>

#include "dhs/errors.hpp"

namespace dhs {

using Complex = std::complex<double>;

/// Principal analytic continuation of log Gamma (continuous branch): the
/// imaginary part satisfies log_gamma(z+1) = log_gamma(z) + Log z and is NOT
/// reduced to (-pi, pi]. Relative accuracy better than 1e-12 for |z| <= 1e3.
/// Throws PoleError when z is within 1e-12 of a non-positive integer.
Complex log_gamma(Complex z);

/// Im(log_gamma(z)) — the unbounded, continuous-branch argument of Gamma.
double arg_gamma(Complex z);

/// exp(Re(log_gamma(z))) = |Gamma(z)|, strictly positive.
double abs_gamma(Complex z);

/// Gauss 2F1 by direct power series; requires 0 <= z < 1. Terms are summed
/// until three consecutive terms fall below 1e-15 relative to the running
/// sum; throws ConvergenceError after 1e5 terms, PoleError when c is within
/// 1e-12 of a non-positive integer.
Complex hyp2f1_series(Complex a, Complex b, Complex c, double z);

/// Gauss 2F1 via the z -> 1-z connection formula: two series evaluated at
/// 1-z combined with Gamma-ratio prefactors. Requires 0.5 < z < 1 and
/// non-degenerate parameters; throws DegenerateParameterError when c-a-b is
/// within 1e-10 of an integer (the prefactor Gammas hit poles). A pole of
/// Gamma(a), Gamma(b), Gamma(c-a) or Gamma(c-b) zeroes the corresponding
/// term (the 1/Gamma factor vanishes).
Complex hyp2f1_connection(Complex a, Complex b, Complex c, double z);

/// Connection formula with the complement 1-z supplied exactly by the
/// caller. When z is computed as 1 - e^{-x}, forming 1-z in double loses
/// the trailing digits of e^{-x}; passing e^{-x} directly keeps the
/// (1-z)^(c-a-b) phase and the mapped series argument at full precision.
Complex hyp2f1_connection(Complex a, Complex b, Complex c, double z,
                          double one_minus_z);

/// Gauss 2F1 for complex parameters and real z in [0, 1): direct series for
/// z <= 0.5, connection formula above. When c-a-b is within 1e-10 of an
/// integer the connection formula is inapplicable and the direct series is
/// used for z > 0.5 as well (slower but convergent for z < 1); the typed
/// DegenerateParameterError refusal lives in hyp2f1_connection.
Complex hyp2f1(Complex a, Complex b, Complex c, double z);

/// Dispatching evaluator with the complement 1-z supplied exactly.
Complex hyp2f1(Complex a, Complex b, Complex c, double z, double one_minus_z);

}  // namespace dhs
