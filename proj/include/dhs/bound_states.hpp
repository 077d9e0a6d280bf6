#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dhs/model.hpp"

namespace dhs {

/// Value of the implicit bound-state energy condition at a trial energy.
struct EnergyEquationResidual {
  double E;
  double residual;    // meaningful only when params_valid
  bool params_valid;  // lambda real and n + lambda > 0 at this E
};

/// One root of the energy condition, with the sign-change bracket that
/// isolated it.
struct BoundStateSolution {
  double E;
  int n;
  int kappa;
  SymmetryLimit limit;
  std::pair<double, double> bracket;
};

/// Pseudospin quantization residual at energy E:
///   gamma/(4 a^2) - beta D (1-sigma0)^2/(4 a^2) + kappa(kappa-1) c0
///   - [((n+lambda)^2 + beta D sigma0 / a^2) / (2 (n+lambda))]^2
/// with gamma, beta, lambda all evaluated at E. No exceptions: parameter
/// validity is reported through the flag.
EnergyEquationResidual pspin_residual(const PotentialParams& p,
                                      const SymmetryContext& s, double E,
                                      int n, int kappa);

/// Spin-limit quantization residual at energy E:
///   kappa(kappa+1) c0 + gamma/(4 a^2) + beta D (1-sigma0)^2/(4 a^2)
///   - [((n+lambda)^2 - beta D sigma0 / a^2) / (2 (n+lambda))]^2.
/// lambda uses the indicial radicand (LambdaForm::Indicial), the form that
/// reproduces the reference bound-state energies and the independent ODE
/// oracle; see README.
EnergyEquationResidual spin_residual(const PotentialParams& p,
                                     const SymmetryContext& s, double E,
                                     int n, int kappa);

/// Default search window [-(M + |C|) + 1e-6, M + |C| + 10]: wide enough to
/// cover every reference root, including the deep C_ps = -5 family near
/// E = -4 M.
std::pair<double, double> default_window(const SymmetryContext& s);

/// All roots of the energy condition inside the window: uniform scan
/// (default step 1e-3) skipping parameter-invalid segments, bisection of
/// every sign change to |dE| < 1e-12, deduplication within 1e-9, ascending
/// order. Throws EmptyWindowError when the window is empty or entirely
/// parameter-invalid; DomainError for the non-relativistic limit.
std::vector<BoundStateSolution> solve_bound_energies(
    const PotentialParams& p, const SymmetryContext& s, int n, int kappa,
    std::optional<std::pair<double, double>> window = std::nullopt,
    double scan_step = 1e-3);

/// Closed-form non-relativistic bound-state energy (hbar = 1):
///   E = 2 a^2 l(l+1) c0 / mu + D (1-sigma0)^2
///       - a^2/(8 mu) [((Lambda+2n)^2 - 8 mu D sigma0 / a^2) / (Lambda+2n)]^2,
///   Lambda = 1 + sqrt(1 + 4 l(l+1) + 8 mu D sigma0^2 / a^2).
double nonrel_energy(const PotentialParams& p, double mu, int n, int l);

}  // namespace dhs
