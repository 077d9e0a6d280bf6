#include "dhs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dhs {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRescaleLimit = 1e250;
constexpr double kRescaleFactor = 1e-250;

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Per-channel, energy-independent setup: grid samples of the centrifugal
// surrogate A(r) and the potential V(r), plus the structure constants of
// W(r; E) = t A(r) + gamma(E) + sV * beta(E) * V(r).
struct ChannelOde {
  RadialGrid grid;
  std::vector<double> A;
  std::vector<double> V;
  double t;    // kappa(kappa-1), kappa(kappa+1) or l(l+1)
  double sV;   // -1 in the pseudospin limit, +1 otherwise
  PotentialParams p;
  SymmetryContext s;

  // Energy-dependent scalars.
  struct AtE {
    double gamma;
    double beta;
    double lambda;  // indicial exponent of the regular solution at r -> 0
    double c1;      // next series coefficient: u ~ r^lambda (1 + c1 r)
    double kb;      // large-r decay constant sqrt(max(W_inf, 0))
    double w_inf;   // large-r limit of W
    double radicand;
    bool regular;   // indicial radicand >= 0
  };

  AtE at(double E) const {
    AtE o;
    if (s.limit == SymmetryLimit::NonRelativistic) {
      o.beta = 2.0 * s.M;
      o.gamma = -2.0 * s.M * E;
    } else {
      o.beta = beta_of(s, E);
      o.gamma = gamma_of(s, E);
    }
    const double a2 = p.alpha * p.alpha;
    const double cin = t + sV * o.beta * p.D * p.sigma0 * p.sigma0 / a2;
    o.radicand = 1.0 + 4.0 * cin;
    o.regular = o.radicand >= 0.0;
    if (o.regular) {
      o.lambda = 0.5 + 0.5 * std::sqrt(o.radicand);
      const double w1 = sV * o.beta * (-2.0 * p.D * p.sigma0 / p.alpha);
      o.c1 = w1 / (2.0 * o.lambda);
    } else {
      o.lambda = 0.0;
      o.c1 = 0.0;
    }
    o.w_inf = 4.0 * a2 * t * p.c0 + o.gamma +
              sV * o.beta * p.D * (1.0 - p.sigma0) * (1.0 - p.sigma0);
    o.kb = std::sqrt(std::max(o.w_inf, 1e-12));
    return o;
  }

  double w_at(int i, const AtE& e) const {
    return t * A[static_cast<size_t>(i)] + e.gamma +
           sV * e.beta * V[static_cast<size_t>(i)];
  }
};

double surrogate_at(const PotentialParams& p, double r, bool pekeris) {
  if (pekeris) {
    const double sh = std::sinh(p.alpha * r);
    return 4.0 * p.alpha * p.alpha * p.c0 + (p.alpha / sh) * (p.alpha / sh);
  }
  return 1.0 / (r * r);
}

ChannelOde make_channel(const PotentialParams& p, const SymmetryContext& s,
                        int kappa_or_l, const RadialGrid& grid,
                        bool pekeris = true) {
  check_valid(p);
  ChannelOde ch;
  ch.grid = grid;
  ch.p = p;
  ch.s = s;
  if (s.limit == SymmetryLimit::NonRelativistic) {
    if (kappa_or_l < 0) {
      throw DomainError("oracle: non-relativistic l must be >= 0");
    }
    ch.t = static_cast<double>(kappa_or_l) * (kappa_or_l + 1.0);
    ch.sV = 1.0;
  } else {
    ch.t = spin_orbit_coeff(s, kappa_or_l);
    ch.sV = (s.limit == SymmetryLimit::Pseudospin) ? -1.0 : 1.0;
  }
  ch.A.resize(static_cast<size_t>(grid.count));
  ch.V.resize(static_cast<size_t>(grid.count));
  for (int i = 0; i < grid.count; ++i) {
    const double r = grid.r_min + grid.step * i;
    ch.A[static_cast<size_t>(i)] = surrogate_at(p, r, pekeris);
    const double co = 1.0 - p.sigma0 / std::tanh(p.alpha * r);
    ch.V[static_cast<size_t>(i)] = p.D * co * co;
  }
  return ch;
}

// Outward Numerov sweep with overflow rescaling (phase/shape preserving).
void sweep_out(const ChannelOde& ch, const ChannelOde::AtE& e,
               std::vector<double>& u) {
  const int n = ch.grid.count;
  const double h = ch.grid.step;
  const double h12 = h * h / 12.0;
  u.resize(static_cast<size_t>(n));
  const double r0 = ch.grid.r_min;
  const double r1 = r0 + h;
  u[0] = std::pow(r0, e.lambda) * (1.0 + e.c1 * r0);
  u[1] = std::pow(r1, e.lambda) * (1.0 + e.c1 * r1);
  double w0 = ch.w_at(0, e);
  double w1 = ch.w_at(1, e);
  for (int i = 2; i < n; ++i) {
    const double w2 = ch.w_at(i, e);
    u[static_cast<size_t>(i)] =
        (2.0 * (1.0 + 5.0 * h12 * w1) * u[static_cast<size_t>(i - 1)] -
         (1.0 - h12 * w0) * u[static_cast<size_t>(i - 2)]) /
        (1.0 - h12 * w2);
    if (std::abs(u[static_cast<size_t>(i)]) > kRescaleLimit) {
      for (int j = 0; j <= i; ++j) {
        u[static_cast<size_t>(j)] *= kRescaleFactor;
      }
    }
    w0 = w1;
    w1 = w2;
  }
}

// Inward Numerov sweep seeded with the decaying exponential.
void sweep_in(const ChannelOde& ch, const ChannelOde::AtE& e,
              std::vector<double>& u) {
  const int n = ch.grid.count;
  const double h = ch.grid.step;
  const double h12 = h * h / 12.0;
  u.resize(static_cast<size_t>(n));
  const double rN = ch.grid.r_min + h * (n - 1);
  u[static_cast<size_t>(n - 1)] = std::exp(-e.kb * rN);
  u[static_cast<size_t>(n - 2)] = std::exp(-e.kb * (rN - h));
  if (u[static_cast<size_t>(n - 1)] < 1e-290) {
    u[static_cast<size_t>(n - 1)] = 1e-10;
    u[static_cast<size_t>(n - 2)] = 1e-10 * std::exp(e.kb * h);
  }
  double w2 = ch.w_at(n - 1, e);
  double w1 = ch.w_at(n - 2, e);
  for (int i = n - 3; i >= 0; --i) {
    const double w0 = ch.w_at(i, e);
    u[static_cast<size_t>(i)] =
        (2.0 * (1.0 + 5.0 * h12 * w1) * u[static_cast<size_t>(i + 1)] -
         (1.0 - h12 * w2) * u[static_cast<size_t>(i + 2)]) /
        (1.0 - h12 * w0);
    if (std::abs(u[static_cast<size_t>(i)]) > kRescaleLimit) {
      for (int j = i; j < n; ++j) {
        u[static_cast<size_t>(j)] *= kRescaleFactor;
      }
    }
    w2 = w1;
    w1 = w0;
  }
}

int count_nodes(const std::vector<double>& u) {
  int nodes = 0;
  int prev = sign_of(u[0]);
  for (size_t i = 1; i < u.size(); ++i) {
    const int cur = sign_of(u[i]);
    if (prev * cur < 0) {
      ++nodes;
    }
    if (cur != 0) {
      prev = cur;
    }
  }
  return nodes;
}

// Five-point first derivative at interior index i.
double deriv5(const std::vector<double>& u, int i, double h) {
  return (u[static_cast<size_t>(i - 2)] - 8.0 * u[static_cast<size_t>(i - 1)] +
          8.0 * u[static_cast<size_t>(i + 1)] - u[static_cast<size_t>(i + 2)]) /
         (12.0 * h);
}

int turning_index(const ChannelOde& ch, const ChannelOde::AtE& e) {
  for (int i = ch.grid.count - 1; i > 0; --i) {
    if (ch.w_at(i, e) < 0.0) {
      return i;
    }
  }
  return ch.grid.count - 1;
}

struct NodeProbe {
  int nodes;
  int i_tp;
};

NodeProbe probe_nodes(const ChannelOde& ch, double E,
                      std::vector<double>& scratch) {
  const ChannelOde::AtE e = ch.at(E);
  if (!e.regular) {
    throw ComplexExponentError(
        "numerov_eigensolve: indicial radicand " +
            std::to_string(e.radicand) +
            " < 0 at E = " + std::to_string(E) +
            "; the origin is irregular and shooting is ill-posed",
        e.radicand);
  }
  sweep_out(ch, e, scratch);
  return NodeProbe{count_nodes(scratch), turning_index(ch, e)};
}

double mismatch_at(const ChannelOde& ch, double E, std::vector<double>& uo,
                   std::vector<double>& ui) {
  const ChannelOde::AtE e = ch.at(E);
  sweep_out(ch, e, uo);
  sweep_in(ch, e, ui);
  const int n = ch.grid.count;
  const int i_m = std::max(4, std::min(n - 5, turning_index(ch, e)));
  const double w = deriv5(uo, i_m, ch.grid.step) * ui[static_cast<size_t>(i_m)] -
                   deriv5(ui, i_m, ch.grid.step) * uo[static_cast<size_t>(i_m)];
  return w / (std::abs(uo[static_cast<size_t>(i_m)] *
                       ui[static_cast<size_t>(i_m)]) +
              1e-300);
}

}  // namespace

RadialGrid make_grid(double r_min, double r_max, double step) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !(step > 0.0)) {
    throw DomainError("make_grid: require 0 < r_min < r_max and step > 0");
  }
  const int count = static_cast<int>((r_max - r_min) / step + 1e-9) + 1;
  if (count < 8) {
    throw DomainError("make_grid: fewer than 8 grid points");
  }
  return RadialGrid{r_min, r_max, step, count};
}

EffectiveOde make_effective_ode(const PotentialParams& p,
                                const SymmetryContext& s, double E,
                                int kappa_or_l, bool pekeris) {
  check_valid(p);
  double t;
  double sV;
  double gamma;
  double beta;
  if (s.limit == SymmetryLimit::NonRelativistic) {
    if (kappa_or_l < 0) {
      throw DomainError("make_effective_ode: non-relativistic l must be >= 0");
    }
    t = static_cast<double>(kappa_or_l) * (kappa_or_l + 1.0);
    sV = 1.0;
    beta = 2.0 * s.M;
    gamma = -2.0 * s.M * E;
  } else {
    t = spin_orbit_coeff(s, kappa_or_l);
    sV = (s.limit == SymmetryLimit::Pseudospin) ? -1.0 : 1.0;
    beta = beta_of(s, E);
    gamma = gamma_of(s, E);
  }
  EffectiveOde ode;
  ode.W = [p, t, sV, gamma, beta, pekeris](double r) {
    const double co = 1.0 - p.sigma0 / std::tanh(p.alpha * r);
    return t * surrogate_at(p, r, pekeris) + gamma + sV * beta * p.D * co * co;
  };
  return ode;
}

std::vector<double> numerov_integrate(const EffectiveOde& ode,
                                      const RadialGrid& grid, double u0,
                                      double u1) {
  const int n = grid.count;
  const double h = grid.step;
  const double h12 = h * h / 12.0;
  std::vector<double> u(static_cast<size_t>(n));
  u[0] = u0;
  u[1] = u1;
  double w0 = ode.W(grid.r_min);
  double w1 = ode.W(grid.r_min + h);
  for (int i = 2; i < n; ++i) {
    const double w2 = ode.W(grid.r_min + h * i);
    u[static_cast<size_t>(i)] =
        (2.0 * (1.0 + 5.0 * h12 * w1) * u[static_cast<size_t>(i - 1)] -
         (1.0 - h12 * w0) * u[static_cast<size_t>(i - 2)]) /
        (1.0 - h12 * w2);
    if (std::abs(u[static_cast<size_t>(i)]) > 1e300) {
      throw OverflowError(
          "numerov_integrate: |u| exceeded 1e300 at r = " +
          std::to_string(grid.r_min + h * i) + "; rescale required");
    }
    w0 = w1;
    w1 = w2;
  }
  return u;
}

EigenResult numerov_eigensolve_detail(const PotentialParams& p,
                                      const SymmetryContext& s, int n,
                                      int kappa_or_l,
                                      std::pair<double, double> bracket,
                                      double step, double r_max) {
  if (n < 0) {
    throw DomainError("numerov_eigensolve: n must be >= 0");
  }
  auto [e_lo, e_hi] = bracket;
  if (!(e_lo < e_hi)) {
    throw DomainError("numerov_eigensolve: bracket must satisfy E_lo < E_hi");
  }
  const RadialGrid grid = make_grid(1e-6 / p.alpha, r_max, step);
  const ChannelOde ch = make_channel(p, s, kappa_or_l, grid);
  std::vector<double> scratch;
  std::vector<double> scratch_in;

  const int na = probe_nodes(ch, e_lo, scratch).nodes;
  const int nb = probe_nodes(ch, e_hi, scratch).nodes;
  if (na >= nb) {
    throw NoTransitionError(
        "numerov_eigensolve: node count does not increase across the "
        "bracket (nodes(" +
        std::to_string(e_lo) + ") = " + std::to_string(na) + ", nodes(" +
        std::to_string(e_hi) + ") = " + std::to_string(nb) + ")");
  }
  // Isolate the first node-count transition above nodes(E_lo).
  double lo = e_lo;
  double hi = e_hi;
  for (int iter = 0; iter < 60 && hi - lo >= 1e-6; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (probe_nodes(ch, mid, scratch).nodes <= na) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Refine on the Wronskian mismatch sign change around the transition.
  double mlo = lo - 5e-4;
  double mhi = hi + 5e-4;
  double flo = mismatch_at(ch, mlo, scratch, scratch_in);
  double fhi = mismatch_at(ch, mhi, scratch, scratch_in);
  if (flo * fhi > 0.0) {
    mlo = lo - 5e-3;
    mhi = hi + 5e-3;
    flo = mismatch_at(ch, mlo, scratch, scratch_in);
    fhi = mismatch_at(ch, mhi, scratch, scratch_in);
  }
  double energy;
  if (flo * fhi > 0.0) {
    energy = 0.5 * (lo + hi);  // node-transition midpoint fallback
  } else {
    for (int iter = 0; iter < 80 && mhi - mlo >= 1e-11; ++iter) {
      const double mid = 0.5 * (mlo + mhi);
      const double fm = mismatch_at(ch, mid, scratch, scratch_in);
      if (flo * fm <= 0.0) {
        mhi = mid;
      } else {
        mlo = mid;
        flo = fm;
      }
    }
    energy = 0.5 * (mlo + mhi);
  }
  return EigenResult{energy, na};
}

double numerov_eigensolve(const PotentialParams& p, const SymmetryContext& s,
                          int n, int kappa_or_l,
                          std::pair<double, double> bracket, double step,
                          double r_max) {
  return numerov_eigensolve_detail(p, s, n, kappa_or_l, bracket, step, r_max)
      .energy;
}

double extract_tail_phase(const std::vector<double>& u, const RadialGrid& grid,
                          double k) {
  if (!(k > 0.0)) {
    throw DomainError("extract_tail_phase: k must be positive");
  }
  double s2 = 0.0;
  double c2 = 0.0;
  double sc = 0.0;
  double su = 0.0;
  double cu = 0.0;
  long m = 0;
  const size_t count = std::min(u.size(), static_cast<size_t>(grid.count));
  for (size_t i = 0; i < count; ++i) {
    const double r = grid.r_min + grid.step * static_cast<double>(i);
    const double kr = k * r;
    if (kr < 50.0 || kr > 100.0) {
      continue;
    }
    const double sn = std::sin(kr);
    const double cn = std::cos(kr);
    const double ui = u[i];
    s2 += sn * sn;
    c2 += cn * cn;
    sc += sn * cn;
    su += sn * ui;
    cu += cn * ui;
    ++m;
  }
  if (m < 16) {
    throw FitQualityError(
        "extract_tail_phase: fewer than 16 grid points in the fit window "
        "k r in [50, 100]");
  }
  const double det = s2 * c2 - sc * sc;
  const double cs = (su * c2 - cu * sc) / det;
  const double cc = (cu * s2 - su * sc) / det;
  const double amp = std::hypot(cs, cc);
  double rss = 0.0;
  for (size_t i = 0; i < count; ++i) {
    const double r = grid.r_min + grid.step * static_cast<double>(i);
    const double kr = k * r;
    if (kr < 50.0 || kr > 100.0) {
      continue;
    }
    const double fit = cs * std::sin(kr) + cc * std::cos(kr);
    rss += (fit - u[i]) * (fit - u[i]);
  }
  const double resid = std::sqrt(rss / static_cast<double>(m)) /
                       (amp + 1e-300);
  if (!(resid < 0.01)) {
    throw FitQualityError(
        "extract_tail_phase: fit residual " + std::to_string(resid) +
        " exceeds 1% of the amplitude (tail not a clean sinusoid)");
  }
  double phi = std::atan2(cc, cs);
  phi = std::fmod(phi, kPi);
  if (phi < 0.0) {
    phi += kPi;
  }
  return phi;
}

double numerov_phase_extract(const EffectiveOde& ode, const RadialGrid& grid,
                             double k, double lambda_seed, double series_c1) {
  const double r0 = grid.r_min;
  const double r1 = grid.r_min + grid.step;
  const double u0 = std::pow(r0, lambda_seed) * (1.0 + series_c1 * r0);
  const double u1 = std::pow(r1, lambda_seed) * (1.0 + series_c1 * r1);
  const std::vector<double> u = numerov_integrate(ode, grid, u0, u1);
  return extract_tail_phase(u, grid, k);
}

double numerov_phase_extract(const PotentialParams& p,
                             const SymmetryContext& s, double E,
                             int kappa_or_l, const RadialGrid& grid) {
  const ChannelOde ch = make_channel(p, s, kappa_or_l, grid);
  const ChannelOde::AtE e = ch.at(E);
  if (!e.regular) {
    throw ComplexExponentError(
        "numerov_phase_extract: indicial radicand " +
            std::to_string(e.radicand) +
            " < 0; the origin is irregular and the regular-solution seed "
            "does not exist",
        e.radicand);
  }
  const double k2 = -e.w_inf;
  if (!(k2 > 0.0)) {
    throw EvanescentChannelError(
        "numerov_phase_extract: large-r W limit gives k^2 = " +
            std::to_string(k2) + " <= 0; no propagating tail",
        k2);
  }
  const double k = std::sqrt(k2);
  std::vector<double> u;
  sweep_out(ch, e, u);
  return extract_tail_phase(u, grid, k);
}

std::vector<PekerisRow> pekeris_quality_report(const PotentialParams& p,
                                               std::pair<double, double>
                                                   r_range,
                                               int count) {
  check_valid(p);
  const auto [lo, hi] = r_range;
  if (!(lo > 0.0) || !(hi > lo) || count < 2) {
    throw DomainError(
        "pekeris_quality_report: require 0 < r_lo < r_hi and count >= 2");
  }
  std::vector<PekerisRow> rows;
  rows.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double r = lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(count - 1);
    const double exact = 1.0 / (r * r);
    const double approx = centrifugal_approx(p, r);
    rows.push_back(PekerisRow{r, exact, approx, (approx - exact) / exact});
  }
  return rows;
}

}  // namespace dhs
