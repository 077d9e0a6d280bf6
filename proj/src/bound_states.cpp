#include "dhs/bound_states.hpp"

#include <cmath>
#include <string>

namespace dhs {

namespace {

EnergyEquationResidual residual_impl(const PotentialParams& p,
                                     const SymmetryContext& s, double E,
                                     int n, int kappa) {
  check_valid(p);
  if (n < 0) {
    throw DomainError("bound-state residual: n must be >= 0");
  }
  const double so = spin_orbit_coeff(s, kappa);  // rejects kappa = 0, nonrel
  const LambdaForm form = (s.limit == SymmetryLimit::Spin)
                              ? LambdaForm::Indicial
                              : LambdaForm::Printed;
  EnergyEquationResidual out{E, 0.0, false};
  const double rad = lambda_radicand(p, s, E, kappa, form);
  if (rad < 0.0) {
    return out;
  }
  const double lambda = 0.5 + 0.5 * std::sqrt(rad);
  const double w = static_cast<double>(n) + lambda;
  if (!(w > 0.0)) {
    return out;
  }
  const double a2 = p.alpha * p.alpha;
  const double beta = beta_of(s, E);
  const double gamma = gamma_of(s, E);
  const double well = p.D * (1.0 - p.sigma0) * (1.0 - p.sigma0);
  const double shift = beta * p.D * p.sigma0 / a2;
  out.params_valid = true;
  if (s.limit == SymmetryLimit::Pseudospin) {
    const double bracket = (w * w + shift) / (2.0 * w);
    out.residual = gamma / (4.0 * a2) - beta * well / (4.0 * a2) + so * p.c0 -
                   bracket * bracket;
  } else {
    const double bracket = (w * w - shift) / (2.0 * w);
    out.residual = so * p.c0 + gamma / (4.0 * a2) + beta * well / (4.0 * a2) -
                   bracket * bracket;
  }
  return out;
}

}  // namespace

EnergyEquationResidual pspin_residual(const PotentialParams& p,
                                      const SymmetryContext& s, double E,
                                      int n, int kappa) {
  if (s.limit != SymmetryLimit::Pseudospin) {
    throw DomainError("pspin_residual: context must be the pseudospin limit");
  }
  return residual_impl(p, s, E, n, kappa);
}

EnergyEquationResidual spin_residual(const PotentialParams& p,
                                     const SymmetryContext& s, double E,
                                     int n, int kappa) {
  if (s.limit != SymmetryLimit::Spin) {
    throw DomainError("spin_residual: context must be the spin limit");
  }
  return residual_impl(p, s, E, n, kappa);
}

std::pair<double, double> default_window(const SymmetryContext& s) {
  const double span = s.M + std::abs(s.C);
  return {-span + 1e-6, span + 10.0};
}

std::vector<BoundStateSolution> solve_bound_energies(
    const PotentialParams& p, const SymmetryContext& s, int n, int kappa,
    std::optional<std::pair<double, double>> window, double scan_step) {
  if (s.limit == SymmetryLimit::NonRelativistic) {
    throw DomainError(
        "solve_bound_energies: use nonrel_energy for the non-relativistic "
        "limit");
  }
  if (!(scan_step > 0.0)) {
    throw DomainError("solve_bound_energies: scan step must be positive");
  }
  const auto [lo, hi] = window.value_or(default_window(s));
  if (!(lo < hi)) {
    throw EmptyWindowError("solve_bound_energies: window [" +
                           std::to_string(lo) + ", " + std::to_string(hi) +
                           ") is empty");
  }
  const auto eval = [&](double E) { return residual_impl(p, s, E, n, kappa); };

  std::vector<BoundStateSolution> roots;
  const auto push_root = [&](double E, double blo, double bhi) {
    if (!roots.empty() && std::abs(roots.back().E - E) < 1e-9) {
      return;  // deduplicate
    }
    roots.push_back(BoundStateSolution{E, n, kappa, s.limit, {blo, bhi}});
  };

  const long cells =
      static_cast<long>(std::ceil((hi - lo) / scan_step)) + 1;
  bool any_valid = false;
  EnergyEquationResidual prev = eval(lo);
  any_valid = any_valid || prev.params_valid;
  for (long i = 1; i <= cells; ++i) {
    const double E = std::min(lo + static_cast<double>(i) * scan_step, hi);
    EnergyEquationResidual cur = eval(E);
    any_valid = any_valid || cur.params_valid;
    if (prev.params_valid && cur.params_valid) {
      if (prev.residual == 0.0) {
        push_root(prev.E, prev.E, cur.E);
      } else if (prev.residual * cur.residual < 0.0) {
        double a = prev.E;
        double b = cur.E;
        double fa = prev.residual;
        bool ok = true;
        while (b - a > 1e-12) {
          const double mid = 0.5 * (a + b);
          const EnergyEquationResidual fm = eval(mid);
          if (!fm.params_valid) {  // should not happen between valid ends
            ok = false;
            break;
          }
          if (fm.residual == 0.0) {
            a = b = mid;
            break;
          }
          if (fa * fm.residual < 0.0) {
            b = mid;
          } else {
            a = mid;
            fa = fm.residual;
          }
        }
        if (ok) {
          push_root(0.5 * (a + b), prev.E, cur.E);
        }
      }
    }
    prev = cur;
    if (E >= hi) {
      break;
    }
  }
  if (!any_valid) {
    throw EmptyWindowError(
        "solve_bound_energies: no parameter-valid energy in the window");
  }
  return roots;
}

double nonrel_energy(const PotentialParams& p, double mu, int n, int l) {
  check_valid(p);
  if (!(mu > 0.0)) {
    throw DomainError("nonrel_energy: mu must be positive");
  }
  if (n < 0 || l < 0) {
    throw DomainError("nonrel_energy: n and l must be >= 0");
  }
  const double a2 = p.alpha * p.alpha;
  const double ll = static_cast<double>(l) * (l + 1.0);
  const double big_lambda =
      1.0 + std::sqrt(1.0 + 4.0 * ll + 8.0 * mu * p.D * p.sigma0 * p.sigma0 / a2);
  const double w = big_lambda + 2.0 * n;
  const double shift = 8.0 * mu * p.D * p.sigma0 / a2;
  const double bracket = (w * w - shift) / w;
  return 2.0 * a2 * ll * p.c0 / mu +
         p.D * (1.0 - p.sigma0) * (1.0 - p.sigma0) -
         a2 / (8.0 * mu) * bracket * bracket;
}

}  // namespace dhs
