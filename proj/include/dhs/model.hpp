#pragma once

#include "dhs/errors.hpp"

namespace dhs {

/// Hyperbolic (Schioberg) potential V(r) = D (1 - sigma0 coth(alpha r))^2.
struct PotentialParams {
  double D;       // well depth scale, > 0
  double sigma0;  // shape parameter, > 0
  double alpha;   // inverse screening length, > 0
  double c0 = 0.0823058167837972;  // centrifugal-surrogate shift, >= 0
};

/// Default dimensionless shift in the centrifugal surrogate.
inline constexpr double kDefaultC0 = 0.0823058167837972;

enum class SymmetryLimit { Pseudospin, Spin, NonRelativistic };

/// Which symmetry limit is active, its constant, and the mass scale.
struct SymmetryContext {
  SymmetryLimit limit;
  double C;    // C_ps or C_s; unused in NonRelativistic
  double M;    // mass (reduced mass mu in NonRelativistic), > 0
  double hbar = 1.0;
};

/// One quantum channel. kappa must be nonzero for the relativistic limits;
/// l is an independent input for phase shifts and the label for the
/// non-relativistic limit.
struct Channel {
  int n;
  int kappa;
  int l;
};

/// Energy-dependent channel parameters for the relativistic limits.
struct EnergyParams {
  double gamma;   // (M+E)(M-E+C_ps) or (M-E)(M+E-C_s)
  double beta;    // M-E+C_ps or M+E-C_s
  double k;       // asymptotic wave number, >= 0
  double lambda;  // wavefunction exponent, > 1/2
};

/// Which radicand defines the wavefunction exponent lambda in the spin
/// limit. Printed follows the closed-form expressions as published
/// (1 + 4 kappa(kappa+1) - 4 beta D sigma0^2 / alpha^2); Indicial flips the
/// sign of the sigma0^2 term to the value required by the small-r indicial
/// equation of the actual ODE (and by the reproducible bound-state tables).
/// The two coincide in the pseudospin limit.
enum class LambdaForm { Printed, Indicial };

/// Throws DomainError unless D, sigma0, alpha > 0 and c0 >= 0.
void check_valid(const PotentialParams& p);

/// V(r) = D (1 - sigma0 coth(alpha r))^2. DomainError for r <= 0.
double potential_value(const PotentialParams& p, double r);

/// Centrifugal surrogate 4 alpha^2 [c0 + x/(1-x) + (x/(1-x))^2] with
/// x = exp(-2 alpha r); equals 4 alpha^2 c0 + alpha^2 / sinh^2(alpha r).
/// DomainError for r <= 0.
double centrifugal_approx(const PotentialParams& p, double r);

/// kappa(kappa-1) in the pseudospin limit, kappa(kappa+1) in the spin
/// limit. DomainError for kappa = 0 or the non-relativistic limit.
double spin_orbit_coeff(const SymmetryContext& s, int kappa);

/// beta = M - E + C_ps (pseudospin) or M + E - C_s (spin).
double beta_of(const SymmetryContext& s, double E);

/// gamma = (M + E) beta (pseudospin) or (M - E) beta (spin).
double gamma_of(const SymmetryContext& s, double E);

/// Asymptotic wave-number radicand:
///   pseudospin: k1^2 =  beta D (1-sigma0)^2 - gamma - 4 alpha^2 kappa(kappa-1) c0
///   spin:       k2^2 = -beta D (1-sigma0)^2 - gamma - 4 alpha^2 kappa(kappa+1) c0
double k_squared(const PotentialParams& p, const SymmetryContext& s, double E,
                 int kappa);

/// Radicand under the square root of lambda = 1/2 + 1/2 sqrt(...):
///   pseudospin: 1 + 4 kappa(kappa-1) - 4 beta D sigma0^2 / alpha^2
///   spin (Printed):  1 + 4 kappa(kappa+1) - 4 beta D sigma0^2 / alpha^2
///   spin (Indicial): 1 + 4 kappa(kappa+1) + 4 beta D sigma0^2 / alpha^2
double lambda_radicand(const PotentialParams& p, const SymmetryContext& s,
                       double E, int kappa, LambdaForm form);

/// Full per-energy parameter bundle for a relativistic channel.
/// Throws DomainError (kappa = 0 or non-relativistic limit),
/// EvanescentChannelError (k^2 <= 0, no real propagating wave) or
/// ComplexExponentError (lambda radicand < 0).
EnergyParams energy_params(const PotentialParams& p, const SymmetryContext& s,
                           double E, int kappa,
                           LambdaForm form = LambdaForm::Printed);

/// Physical Dirac pairing between kappa and orbital angular momentum:
/// spin limit l = kappa (kappa > 0) or -kappa-1 (kappa < 0); pseudospin
/// limit pseudo-l = kappa-1 (kappa > 0) or -kappa (kappa < 0).
int pair_l(SymmetryLimit limit, int kappa);

}  // namespace dhs
