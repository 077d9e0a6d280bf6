#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dhs/model.hpp"

namespace dhs {

/// Uniform radial grid r_i = r_min + i * step, i = 0 .. count-1.
struct RadialGrid {
  double r_min;
  double r_max;
  double step;
  int count;  // floor((r_max - r_min) / step) + 1
};

/// Validates and builds a grid. DomainError unless 0 < r_min < r_max and
/// step > 0 gives at least 8 points.
RadialGrid make_grid(double r_min, double r_max, double step);

/// Coefficient function of the radial equation u''(r) = W(r) u(r).
struct EffectiveOde {
  std::function<double(double)> W;
};

/// Assembles W for the requested symmetry limit at energy E:
///   pseudospin:        W = t A(r) + gamma - beta V(r),  t = kappa(kappa-1)
///   spin:              W = t A(r) + gamma + beta V(r),  t = kappa(kappa+1)
///   non-relativistic:  W = l(l+1) A(r) + 2 mu (V(r) - E)
/// where A is the centrifugal surrogate 4 alpha^2 c0 + alpha^2/sinh^2(alpha r)
/// in Pekeris mode (the approximation under which the closed forms are
/// exact) or 1/r^2 in exact mode. kappa_or_l is kappa for the relativistic
/// limits and l for the non-relativistic one.
EffectiveOde make_effective_ode(const PotentialParams& p,
                                const SymmetryContext& s, double E,
                                int kappa_or_l, bool pekeris = true);

/// Fourth-order Numerov sweep of u'' = W u from (u0, u1) at the first two
/// grid points. Linear in (u0, u1). Throws OverflowError when |u| exceeds
/// 1e300 (deep classically forbidden region — caller must rescale).
std::vector<double> numerov_integrate(const EffectiveOde& ode,
                                      const RadialGrid& grid, double u0,
                                      double u1);

struct EigenResult {
  double energy;
  int nodes;  // interior node count of the eigenfunction
};

/// Shooting eigensolver: isolates the single node-count transition inside
/// the energy bracket, then refines the energy with the sign change of the
/// outward/inward log-derivative (Wronskian) mismatch at the outer turning
/// point, to ~1e-11. The node count of the eigenfunction is reported — it
/// equals n on channels where the coefficient functions depend weakly on E
/// (Sturm oscillation); on strongly E-dependent relativistic channels it
/// can exceed n (see README). Throws NoTransitionError when the bracket
/// ends have equal node counts.
EigenResult numerov_eigensolve_detail(const PotentialParams& p,
                                      const SymmetryContext& s, int n,
                                      int kappa_or_l,
                                      std::pair<double, double> bracket,
                                      double step = 2e-3,
                                      double r_max = 80.0);

/// Energy-only convenience wrapper over numerov_eigensolve_detail.
double numerov_eigensolve(const PotentialParams& p, const SymmetryContext& s,
                          int n, int kappa_or_l,
                          std::pair<double, double> bracket,
                          double step = 2e-3, double r_max = 80.0);

/// Least-squares sine fit u(r) ~ A sin(k r + phi) on the tail window
/// k r in [50, 100] of a precomputed solution on the grid. Returns phi
/// reduced to [0, pi); throws FitQualityError when the fit residual exceeds
/// 1% of the amplitude or the window holds fewer than 16 grid points.
double extract_tail_phase(const std::vector<double>& u,
                          const RadialGrid& grid, double k);

/// Integrates the given ODE outward from the analytic small-r seed
/// u = r^lambda (1 + c1 r) and extracts the tail phase (mod pi).
double numerov_phase_extract(const EffectiveOde& ode, const RadialGrid& grid,
                             double k, double lambda_seed, double series_c1);

/// Builds the Pekeris-mode ODE for the channel, derives k from the large-r
/// limit of W, seeds with the indicial exponent, and extracts the tail
/// phase (mod pi). The grid must cover k r = 100. Throws
/// EvanescentChannelError (no propagating tail), ComplexExponentError
/// (irregular origin: indicial radicand < 0), FitQualityError.
double numerov_phase_extract(const PotentialParams& p,
                             const SymmetryContext& s, double E,
                             int kappa_or_l, const RadialGrid& grid);

struct PekerisRow {
  double r;
  double exact;      // 1 / r^2
  double approx;     // centrifugal surrogate at r
  double rel_error;  // (approx - exact) / exact
};

/// Samples the centrifugal surrogate against the exact 1/r^2 on a uniform
/// grid over r_range.
std::vector<PekerisRow> pekeris_quality_report(const PotentialParams& p,
                                               std::pair<double, double>
                                                   r_range,
                                               int count = 200);

}  // namespace dhs
