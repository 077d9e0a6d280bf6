#pragma once

#include <vector>

#include "dhs/model.hpp"
#include "dhs/special_fns.hpp"

namespace dhs {

/// Parameters (a, b, c) of the 2F1 factor of the scattering solution.
/// Invariants: c = 2 lambda (real); c - a - b = i k / alpha; when the inner
/// square root S is purely imaginary, c - a = conj(a) and c - b = conj(b);
/// when S is real, c - a = conj(b) and c - b = conj(a). Either way
/// |Gamma(c-a)| |Gamma(c-b)| = |Gamma(a)| |Gamma(b)|.
struct HypergeomTriple {
  Complex a;
  Complex b;
  Complex c;
};

struct PhaseShiftResult {
  double delta;  // radians, continuous branch, unbounded
  double k;      // asymptotic wave number
  Channel channel;
};

enum class ComponentKind { LowerG, UpperF };

struct WavefunctionProfile {
  std::vector<double> r_grid;
  std::vector<Complex> values;
  ComponentKind component;
};

/// Builds the 2F1 triple from the per-energy parameters:
///   a = lambda - i k / (2 alpha) - S,  b = lambda - i k / (2 alpha) + S,
///   c = 2 lambda, with S the principal square root (Re >= 0) of
///   -beta D sigma0 / alpha^2 - k^2 / (4 alpha^2)   (pseudospin)
///   +beta D sigma0 / alpha^2 - k^2 / (4 alpha^2)   (spin).
HypergeomTriple hypergeom_params(const EnergyParams& ep,
                                 const PotentialParams& p,
                                 const SymmetryContext& s);

/// Phase shift computed from an explicit triple:
/// delta = pi/2 (l+1) + arg Gamma(i k / alpha)
///         - arg Gamma(c - a) - arg Gamma(c - b),
/// with the continuous-branch arg Gamma.
double phase_from_triple(const HypergeomTriple& t, double k, double alpha,
                         int l);

/// Normalization constant from an explicit triple:
/// N = |Gamma(c-a)| |Gamma(c-b)| / (sqrt(c) |Gamma(i k / alpha)|).
double normalization_from_triple(const HypergeomTriple& t, double k,
                                 double alpha);

/// Scattering phase shift for channel (l, kappa) at energy E.
/// Throws EvanescentChannelError for k^2 <= 0, ComplexExponentError for a
/// complex wavefunction exponent, PoleError if a Gamma argument lands on a
/// non-positive integer.
PhaseShiftResult phase_shift(const PotentialParams& p,
                             const SymmetryContext& s, double E, int l,
                             int kappa, LambdaForm form = LambdaForm::Printed);

/// Normalization constant N for channel kappa at energy E; > 0.
double normalization_constant(const PotentialParams& p,
                              const SymmetryContext& s, double E, int kappa,
                              LambdaForm form = LambdaForm::Printed);

/// Amplitude of the large-r envelope of the radial wavefunction:
/// 2 N Gamma(c) |Gamma(c-a-b)| / (|Gamma(c-a)| |Gamma(c-b)|)
/// = 2 Gamma(2 lambda) / sqrt(2 lambda).
double envelope_amplitude(const PotentialParams& p, const SymmetryContext& s,
                          double E, int kappa,
                          LambdaForm form = LambdaForm::Printed);

/// Radial wavefunction profile
///   N (1 - e^{-2 alpha r})^lambda e^{i k r} 2F1(a, b; c; 1 - e^{-2 alpha r})
/// on a positive ascending grid. Component: LowerG in the pseudospin limit,
/// UpperF in the spin limit.
WavefunctionProfile radial_wavefunction(const PotentialParams& p,
                                        const SymmetryContext& s, double E,
                                        int kappa,
                                        const std::vector<double>& r_grid,
                                        LambdaForm form = LambdaForm::Printed);

}  // namespace dhs
