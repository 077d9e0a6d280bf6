#include "dhs/scattering.hpp"

#include <cmath>
#include <string>

namespace dhs {

namespace {

constexpr double kPi = 3.14159265358979323846;

double inner_radicand(const EnergyParams& ep, const PotentialParams& p,
                      const SymmetryContext& s) {
  const double sign = (s.limit == SymmetryLimit::Pseudospin) ? -1.0 : 1.0;
  const double a2 = p.alpha * p.alpha;
  return sign * ep.beta * p.D * p.sigma0 / a2 - ep.k * ep.k / (4.0 * a2);
}

}  // namespace

HypergeomTriple hypergeom_params(const EnergyParams& ep,
                                 const PotentialParams& p,
                                 const SymmetryContext& s) {
  const Complex S = std::sqrt(Complex(inner_radicand(ep, p, s), 0.0));
  const Complex base(ep.lambda, -ep.k / (2.0 * p.alpha));
  HypergeomTriple t;
  t.a = base - S;
  t.b = base + S;
  t.c = Complex(2.0 * ep.lambda, 0.0);
  return t;
}

double phase_from_triple(const HypergeomTriple& t, double k, double alpha,
                         int l) {
  return kPi / 2.0 * (l + 1) + arg_gamma(Complex(0.0, k / alpha)) -
         arg_gamma(t.c - t.a) - arg_gamma(t.c - t.b);
}

double normalization_from_triple(const HypergeomTriple& t, double k,
                                 double alpha) {
  const double log_n = log_gamma(t.c - t.a).real() +
                       log_gamma(t.c - t.b).real() -
                       log_gamma(Complex(0.0, k / alpha)).real();
  return std::exp(log_n) / std::sqrt(t.c.real());
}

PhaseShiftResult phase_shift(const PotentialParams& p,
                             const SymmetryContext& s, double E, int l,
                             int kappa, LambdaForm form) {
  if (l < 0) {
    throw DomainError("phase_shift: l must be >= 0");
  }
  const EnergyParams ep = energy_params(p, s, E, kappa, form);
  const HypergeomTriple t = hypergeom_params(ep, p, s);
  PhaseShiftResult res;
  res.delta = phase_from_triple(t, ep.k, p.alpha, l);
  res.k = ep.k;
  res.channel = Channel{0, kappa, l};
  return res;
}

double normalization_constant(const PotentialParams& p,
                              const SymmetryContext& s, double E, int kappa,
                              LambdaForm form) {
  const EnergyParams ep = energy_params(p, s, E, kappa, form);
  const HypergeomTriple t = hypergeom_params(ep, p, s);
  return normalization_from_triple(t, ep.k, p.alpha);
}

double envelope_amplitude(const PotentialParams& p, const SymmetryContext& s,
                          double E, int kappa, LambdaForm form) {
  const EnergyParams ep = energy_params(p, s, E, kappa, form);
  // 2 N Gamma(c) |Gamma(c-a-b)| / (|Gamma(c-a)| |Gamma(c-b)|) with
  // c - a - b = i k / alpha collapses to 2 Gamma(2 lambda) / sqrt(2 lambda).
  const double c = 2.0 * ep.lambda;
  return 2.0 * std::exp(log_gamma(Complex(c, 0.0)).real()) / std::sqrt(c);
}

WavefunctionProfile radial_wavefunction(const PotentialParams& p,
                                        const SymmetryContext& s, double E,
                                        int kappa,
                                        const std::vector<double>& r_grid,
                                        LambdaForm form) {
  if (r_grid.empty()) {
    throw DomainError("radial_wavefunction: empty grid");
  }
  double prev = 0.0;
  for (double r : r_grid) {
    if (!(r > prev)) {
      throw DomainError(
          "radial_wavefunction: grid must be positive strictly ascending");
    }
    prev = r;
  }
  const EnergyParams ep = energy_params(p, s, E, kappa, form);
  const HypergeomTriple t = hypergeom_params(ep, p, s);
  const double N = normalization_from_triple(t, ep.k, p.alpha);
  WavefunctionProfile profile;
  profile.r_grid = r_grid;
  profile.values.reserve(r_grid.size());
  profile.component = (s.limit == SymmetryLimit::Spin) ? ComponentKind::UpperF
                                                       : ComponentKind::LowerG;
  for (double r : r_grid) {
    const double z = -std::expm1(-2.0 * p.alpha * r);  // 1 - e^{-2 alpha r}
    // Supply the complement exactly: recomputing 1-z in double would drop
    // the trailing digits of e^{-2 alpha r} once z rounds to nearly 1.
    const Complex F = hyp2f1(t.a, t.b, t.c, z, std::exp(-2.0 * p.alpha * r));
    const Complex osc(std::cos(ep.k * r), std::sin(ep.k * r));
    const double envelope = N * std::pow(z, ep.lambda);
    profile.values.push_back(envelope * osc * F);
  }
  return profile;
}

}  // namespace dhs
