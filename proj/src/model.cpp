#include "dhs/model.hpp"

#include <cmath>
#include <string>

namespace dhs {

void check_valid(const PotentialParams& p) {
  if (!(p.D > 0.0) || !(p.sigma0 > 0.0) || !(p.alpha > 0.0) ||
      !(p.c0 >= 0.0)) {
    throw DomainError(
        "PotentialParams: require D > 0, sigma0 > 0, alpha > 0, c0 >= 0");
  }
}

double potential_value(const PotentialParams& p, double r) {
  check_valid(p);
  if (!(r > 0.0)) {
    throw DomainError("potential_value: r must be positive");
  }
  const double t = 1.0 - p.sigma0 / std::tanh(p.alpha * r);
  return p.D * t * t;
}

double centrifugal_approx(const PotentialParams& p, double r) {
  check_valid(p);
  if (!(r > 0.0)) {
    throw DomainError("centrifugal_approx: r must be positive");
  }
  // 4 a^2 [c0 + x/(1-x) + (x/(1-x))^2], x = e^{-2 a r}; the x/(1-x) form
  // loses accuracy only for x -> 1 (r -> 0), where -expm1 keeps 1-x exact.
  const double x = std::exp(-2.0 * p.alpha * r);
  const double q = x / (-std::expm1(-2.0 * p.alpha * r));
  return 4.0 * p.alpha * p.alpha * (p.c0 + q + q * q);
}

double spin_orbit_coeff(const SymmetryContext& s, int kappa) {
  if (kappa == 0) {
    throw DomainError("kappa = 0 is not a valid Dirac spin-orbit number");
  }
  const double kd = static_cast<double>(kappa);
  switch (s.limit) {
    case SymmetryLimit::Pseudospin:
      return kd * (kd - 1.0);
    case SymmetryLimit::Spin:
      return kd * (kd + 1.0);
    default:
      throw DomainError(
          "spin_orbit_coeff: non-relativistic limit has no kappa coefficient");
  }
}

double beta_of(const SymmetryContext& s, double E) {
  switch (s.limit) {
    case SymmetryLimit::Pseudospin:
      return s.M - E + s.C;
    case SymmetryLimit::Spin:
      return s.M + E - s.C;
    default:
      throw DomainError("beta_of: relativistic limits only");
  }
}

double gamma_of(const SymmetryContext& s, double E) {
  switch (s.limit) {
    case SymmetryLimit::Pseudospin:
      return (s.M + E) * beta_of(s, E);
    case SymmetryLimit::Spin:
      return (s.M - E) * beta_of(s, E);
    default:
      throw DomainError("gamma_of: relativistic limits only");
  }
}

double k_squared(const PotentialParams& p, const SymmetryContext& s, double E,
                 int kappa) {
  check_valid(p);
  const double so = spin_orbit_coeff(s, kappa);
  const double beta = beta_of(s, E);
  const double gamma = gamma_of(s, E);
  const double well = p.D * (1.0 - p.sigma0) * (1.0 - p.sigma0);
  const double shift = 4.0 * p.alpha * p.alpha * so * p.c0;
  const double sign = (s.limit == SymmetryLimit::Pseudospin) ? 1.0 : -1.0;
  return sign * beta * well - gamma - shift;
}

double lambda_radicand(const PotentialParams& p, const SymmetryContext& s,
                       double E, int kappa, LambdaForm form) {
  check_valid(p);
  const double so = spin_orbit_coeff(s, kappa);
  const double beta = beta_of(s, E);
  const double ratio =
      4.0 * beta * p.D * p.sigma0 * p.sigma0 / (p.alpha * p.alpha);
  const bool plus_sign =
      s.limit == SymmetryLimit::Spin && form == LambdaForm::Indicial;
  return 1.0 + 4.0 * so + (plus_sign ? ratio : -ratio);
}

EnergyParams energy_params(const PotentialParams& p, const SymmetryContext& s,
                           double E, int kappa, LambdaForm form) {
  if (s.limit == SymmetryLimit::NonRelativistic) {
    throw DomainError(
        "energy_params: non-relativistic limit has no (gamma, beta, k, "
        "lambda) bundle; use nonrel_energy");
  }
  const double k2 = k_squared(p, s, E, kappa);
  if (!(k2 > 0.0)) {
    throw EvanescentChannelError(
        "energy_params: k^2 = " + std::to_string(k2) +
            " <= 0; channel is evanescent at E = " + std::to_string(E),
        k2);
  }
  const double rad = lambda_radicand(p, s, E, kappa, form);
  if (rad < 0.0) {
    throw ComplexExponentError(
        "energy_params: lambda radicand = " + std::to_string(rad) +
            " < 0; wavefunction exponent is complex",
        rad);
  }
  EnergyParams ep;
  ep.beta = beta_of(s, E);
  ep.gamma = gamma_of(s, E);
  ep.k = std::sqrt(k2);
  ep.lambda = 0.5 + 0.5 * std::sqrt(rad);
  return ep;
}

int pair_l(SymmetryLimit limit, int kappa) {
  if (kappa == 0) {
    throw DomainError("pair_l: kappa must be nonzero");
  }
  switch (limit) {
    case SymmetryLimit::Spin:
      return kappa > 0 ? kappa : -kappa - 1;
    case SymmetryLimit::Pseudospin:
      return kappa > 0 ? kappa - 1 : -kappa;
    default:
      throw DomainError("pair_l: relativistic limits only");
  }
}

}  // namespace dhs
