#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dhs/errors.hpp"
#include "dhs/model.hpp"
#include "dhs/reference_data.hpp"
#include "dhs/scattering.hpp"

using dhs::Complex;
using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Pseudospin phase-table parameters: D = 10, sigma0 = alpha = 0.1,
// C_ps = 0.05, E = M = 1.
const dhs::PotentialParams kPpsp{10.0, 0.1, 0.1, dhs::kDefaultC0};
const dhs::SymmetryContext kSpsp{dhs::SymmetryLimit::Pseudospin, 0.05, 1.0};

// Spin anchor parameters: D = 10, sigma0 = alpha = 0.5, C_s = 5, E = M = 1.
const dhs::PotentialParams kPanchor{10.0, 0.5, 0.5, dhs::kDefaultC0};
const dhs::SymmetryContext kSanchor{dhs::SymmetryLimit::Spin, 5.0, 1.0};

}  // namespace

TEST_CASE("hypergeometric triple satisfies its structural invariants") {
  const dhs::EnergyParams ep = dhs::energy_params(kPpsp, kSpsp, 1.0, -2);
  const dhs::HypergeomTriple t = dhs::hypergeom_params(ep, kPpsp, kSpsp);
  CHECK(t.c.real() == Approx(2.0 * ep.lambda).epsilon(1e-14));
  CHECK(t.c.imag() == 0.0);
  const Complex cab = t.c - t.a - t.b;
  CHECK(std::abs(cab.real()) <= 1e-13);
  CHECK(cab.imag() == Approx(ep.k / kPpsp.alpha).epsilon(1e-13));
  // Here the inner root S is purely imaginary, so subtracting a = base - S
  // from c = 2 lambda flips both imaginary contributions at once:
  // c - a = conj(a) and c - b = conj(b).
  const Complex ca = t.c - t.a;
  const Complex cb = t.c - t.b;
  CHECK(ca.real() == Approx(t.a.real()).epsilon(1e-13));
  CHECK(ca.imag() == Approx(-t.a.imag()).epsilon(1e-13));
  CHECK(cb.real() == Approx(t.b.real()).epsilon(1e-13));
  CHECK(cb.imag() == Approx(-t.b.imag()).epsilon(1e-13));
}

TEST_CASE("anchor triple matches the high-precision pins") {
  const dhs::EnergyParams ep =
      dhs::energy_params(kPanchor, kSanchor, 1.0, -1, dhs::LambdaForm::Printed);
  CHECK(ep.k == Approx(dhs::refdata::kAnchorK).epsilon(1e-15));
  const dhs::HypergeomTriple t = dhs::hypergeom_params(ep, kPanchor, kSanchor);
  CHECK(t.c.real() == Approx(12.0).epsilon(1e-14));
  const Complex ca = t.c - t.a;
  const Complex cb = t.c - t.b;
  CHECK(ca.real() == Approx(dhs::refdata::kAnchorCmaRe).epsilon(1e-13));
  CHECK(ca.imag() == Approx(dhs::refdata::kAnchorCmaIm).epsilon(1e-13));
  CHECK(cb.real() == Approx(dhs::refdata::kAnchorCmbRe).epsilon(1e-13));
  CHECK(cb.imag() == Approx(dhs::refdata::kAnchorCmbIm).epsilon(1e-13));
  // The inner square root is purely imaginary with the pinned magnitude.
  CHECK(0.5 * (t.b - t.a).imag() ==
        Approx(dhs::refdata::kAnchorInnerRootIm).epsilon(1e-13));
  CHECK(std::abs((t.b - t.a).real()) <= 1e-13);
}

TEST_CASE("pseudospin phase shifts match the 40-digit evaluator pins") {
  for (const auto& pin : dhs::refdata::kPinPspinCps005) {
    if (!pin.real_lambda) {
      CHECK_THROWS_AS(
          dhs::phase_shift(kPpsp, kSpsp, 1.0, pin.l, pin.kappa),
          dhs::ComplexExponentError);
      continue;
    }
    const dhs::PhaseShiftResult r =
        dhs::phase_shift(kPpsp, kSpsp, 1.0, pin.l, pin.kappa);
    CHECK(r.delta == Approx(pin.delta).epsilon(1e-11));
    CHECK(r.channel.l == pin.l);
    CHECK(r.channel.kappa == pin.kappa);
  }
}

TEST_CASE("spin phase shifts match the 40-digit evaluator pins") {
  for (const auto& pin : dhs::refdata::kPinSpinCs5) {
    REQUIRE(pin.real_lambda);
    const dhs::PhaseShiftResult r =
        dhs::phase_shift(kPanchor, kSanchor, 1.0, pin.l, pin.kappa);
    CHECK(r.delta == Approx(pin.delta).epsilon(1e-11));
  }
  const dhs::SymmetryContext s10{dhs::SymmetryLimit::Spin, 10.0, 1.0};
  for (const auto& pin : dhs::refdata::kPinSpinCs10) {
    REQUIRE(pin.real_lambda);
    const dhs::PhaseShiftResult r =
        dhs::phase_shift(kPanchor, s10, 1.0, pin.l, pin.kappa);
    CHECK(r.delta == Approx(pin.delta).epsilon(1e-11));
  }
}

TEST_CASE("phase shift climbs the exact pi/2 ladder in l") {
  for (const int kappa : {-3, -1, 2}) {
    double prev = dhs::phase_shift(kPpsp, kSpsp, 1.0, 0, kappa).delta;
    for (int l = 1; l <= 4; ++l) {
      const double cur = dhs::phase_shift(kPpsp, kSpsp, 1.0, l, kappa).delta;
      CHECK(std::abs(cur - prev - kPi / 2.0) <= 1e-13);
      prev = cur;
    }
  }
}

TEST_CASE("phase_from_triple is symmetric under a <-> b") {
  const dhs::EnergyParams ep = dhs::energy_params(kPpsp, kSpsp, 1.0, -2);
  dhs::HypergeomTriple t = dhs::hypergeom_params(ep, kPpsp, kSpsp);
  const double d1 = dhs::phase_from_triple(t, ep.k, kPpsp.alpha, 1);
  std::swap(t.a, t.b);
  const double d2 = dhs::phase_from_triple(t, ep.k, kPpsp.alpha, 1);
  CHECK(d1 == Approx(d2).epsilon(1e-14));
}

TEST_CASE("normalization constant matches the anchor pin") {
  const double n =
      dhs::normalization_constant(kPanchor, kSanchor, 1.0, -1);
  CHECK(n == Approx(dhs::refdata::kAnchorNormalization).epsilon(1e-12));
}

TEST_CASE("envelope amplitude matches the anchor pin") {
  const double env = dhs::envelope_amplitude(kPanchor, kSanchor, 1.0, -1);
  CHECK(env == Approx(dhs::refdata::kAnchorEnvelope).epsilon(1e-12));
}

TEST_CASE("radial wavefunction reproduces the anchor chain values") {
  std::vector<double> grid;
  for (const auto& c : dhs::refdata::kAnchorWavefunction) {
    grid.push_back(c.r);
  }
  const dhs::WavefunctionProfile w =
      dhs::radial_wavefunction(kPanchor, kSanchor, 1.0, -1, grid);
  REQUIRE(w.values.size() == grid.size());
  CHECK(w.component == dhs::ComponentKind::UpperF);
  for (size_t i = 0; i < grid.size(); ++i) {
    const auto& c = dhs::refdata::kAnchorWavefunction[i];
    // 5e-9: the z -> 1-z connection formula loses ~6 digits to internal
    // cancellation for these parameter magnitudes when z is just above the
    // series/connection switch (the r = 1 point, z = 0.63).
    CHECK(w.values[i].real() == Approx(c.v_re).epsilon(5e-9));
    // The exact profile is real; allow only evaluation-noise imaginary parts.
    CHECK(std::abs(w.values[i].imag()) <= 1e-8 * (1.0 + std::abs(c.v_re)));
  }
}

TEST_CASE("pseudospin profiles carry the lower-component label") {
  const std::vector<double> grid{1.0, 2.0};
  const dhs::WavefunctionProfile w =
      dhs::radial_wavefunction(kPpsp, kSpsp, 1.0, -2, grid);
  CHECK(w.component == dhs::ComponentKind::LowerG);
}

TEST_CASE("wavefunction oscillation peak matches the envelope amplitude") {
  const double k = dhs::refdata::kAnchorK;
  std::vector<double> grid;
  const int m = 6000;
  for (int i = 0; i <= m; ++i) {
    const double kr = 50.0 + 50.0 * static_cast<double>(i) / m;
    grid.push_back(kr / k);
  }
  const dhs::WavefunctionProfile w =
      dhs::radial_wavefunction(kPanchor, kSanchor, 1.0, -1, grid);
  double peak = 0.0;
  for (const Complex& v : w.values) {
    peak = std::max(peak, std::abs(v.real()));
  }
  const double env = dhs::envelope_amplitude(kPanchor, kSanchor, 1.0, -1);
  CHECK(std::abs(peak - env) / env < 0.01);
}

TEST_CASE("wavefunction vanishes like r^lambda near the origin") {
  const std::vector<double> grid{1e-4};
  const dhs::WavefunctionProfile w =
      dhs::radial_wavefunction(kPanchor, kSanchor, 1.0, -1, grid);
  CHECK(std::abs(w.values[0]) < 1e-6);
}

TEST_CASE("radial_wavefunction validates the grid") {
  CHECK_THROWS_AS(
      dhs::radial_wavefunction(kPanchor, kSanchor, 1.0, -1, {1.0, 0.5}),
      dhs::DomainError);
  CHECK_THROWS_AS(
      dhs::radial_wavefunction(kPanchor, kSanchor, 1.0, -1, {0.0, 0.5}),
      dhs::DomainError);
  CHECK_THROWS_AS(dhs::radial_wavefunction(kPanchor, kSanchor, 1.0, -1, {}),
                  dhs::DomainError);
}

TEST_CASE("phase shift is continuous in energy") {
  const double d0 = dhs::phase_shift(kPpsp, kSpsp, 1.0, 0, -2).delta;
  const double d1 = dhs::phase_shift(kPpsp, kSpsp, 1.0 + 1e-6, 0, -2).delta;
  CHECK(std::abs(d1 - d0) < 1e-3);
}

TEST_CASE("scattering error taxonomy") {
  // No propagating channel: pseudospin with C_ps = 0 at E = M has beta = 0.
  const dhs::SymmetryContext s0{dhs::SymmetryLimit::Pseudospin, 0.0, 1.0};
  CHECK_THROWS_AS(dhs::phase_shift(kPpsp, s0, 1.0, 0, -1),
                  dhs::EvanescentChannelError);
  // Complex exponent: pseudospin kappa = +1 at these parameters.
  CHECK_THROWS_AS(dhs::phase_shift(kPpsp, kSpsp, 1.0, 0, 1),
                  dhs::ComplexExponentError);
  // Negative l is rejected.
  CHECK_THROWS_AS(dhs::phase_shift(kPpsp, kSpsp, 1.0, -1, -1),
                  dhs::DomainError);
}
