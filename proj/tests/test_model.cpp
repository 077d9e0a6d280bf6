#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dhs/errors.hpp"
#include "dhs/model.hpp"
#include "dhs/reference_data.hpp"

using doctest::Approx;

namespace {
const dhs::PotentialParams kP{10.0, 0.1, 0.1, dhs::kDefaultC0};
}

TEST_CASE("potential_value matches the high-precision pin at r = 5") {
  CHECK(dhs::potential_value(kP, 5.0) ==
        Approx(dhs::refdata::kPotentialAtR5).epsilon(1e-14));
}

TEST_CASE("centrifugal_approx matches the high-precision pin at r = 5") {
  CHECK(dhs::centrifugal_approx(kP, 5.0) ==
        Approx(dhs::refdata::kCentrifugalAtR5).epsilon(1e-14));
}

TEST_CASE("centrifugal_approx equals the closed hyperbolic form") {
  for (const double r : {0.05, 0.5, 2.0, 10.0, 40.0}) {
    const double sh = std::sinh(kP.alpha * r);
    const double want =
        4.0 * kP.alpha * kP.alpha * kP.c0 + kP.alpha * kP.alpha / (sh * sh);
    CHECK(dhs::centrifugal_approx(kP, r) == Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("centrifugal_approx with c0 = 0 tracks 1/r^2 at small alpha r") {
  dhs::PotentialParams p = kP;
  p.c0 = 0.0;
  for (const double r : {0.05, 0.2, 0.5}) {  // alpha r <= 0.05
    const double rel = std::abs(dhs::centrifugal_approx(p, r) * r * r - 1.0);
    CHECK(rel < 1e-3);
  }
}

TEST_CASE("potential approaches D (1-sigma0)^2 with log-slope -2 alpha") {
  const double v_inf = kP.D * (1.0 - kP.sigma0) * (1.0 - kP.sigma0);
  const double d10 = std::abs(dhs::potential_value(kP, 10.0) - v_inf);
  const double d20 = std::abs(dhs::potential_value(kP, 20.0) - v_inf);
  const double slope = std::log(d20 / d10) / 10.0;
  CHECK(slope == Approx(-2.0 * kP.alpha).epsilon(0.01));
}

TEST_CASE("check_valid rejects out-of-domain parameters") {
  CHECK_NOTHROW(dhs::check_valid(kP));
  dhs::PotentialParams p = kP;
  p.D = 0.0;
  CHECK_THROWS_AS(dhs::check_valid(p), dhs::DomainError);
  p = kP;
  p.sigma0 = 0.0;
  CHECK_THROWS_AS(dhs::check_valid(p), dhs::DomainError);
  p = kP;
  p.alpha = -1.0;
  CHECK_THROWS_AS(dhs::check_valid(p), dhs::DomainError);
  p = kP;
  p.c0 = -0.1;
  CHECK_THROWS_AS(dhs::check_valid(p), dhs::DomainError);
}

TEST_CASE("potential_value and centrifugal_approx reject r <= 0") {
  CHECK_THROWS_AS(dhs::potential_value(kP, 0.0), dhs::DomainError);
  CHECK_THROWS_AS(dhs::centrifugal_approx(kP, -1.0), dhs::DomainError);
}

TEST_CASE("spin_orbit_coeff by limit and kappa") {
  const dhs::SymmetryContext ps{dhs::SymmetryLimit::Pseudospin, 0.0, 1.0};
  const dhs::SymmetryContext sp{dhs::SymmetryLimit::Spin, 0.0, 1.0};
  CHECK(dhs::spin_orbit_coeff(ps, -1) == 2.0);   // kappa(kappa-1)
  CHECK(dhs::spin_orbit_coeff(ps, 2) == 2.0);
  CHECK(dhs::spin_orbit_coeff(ps, 1) == 0.0);
  CHECK(dhs::spin_orbit_coeff(sp, -1) == 0.0);   // kappa(kappa+1)
  CHECK(dhs::spin_orbit_coeff(sp, 1) == 2.0);
  CHECK(dhs::spin_orbit_coeff(sp, -3) == 6.0);
  CHECK_THROWS_AS(dhs::spin_orbit_coeff(ps, 0), dhs::DomainError);
  const dhs::SymmetryContext nr{dhs::SymmetryLimit::NonRelativistic, 0.0, 1.0};
  CHECK_THROWS_AS(dhs::spin_orbit_coeff(nr, 1), dhs::DomainError);
}

TEST_CASE("pair_l maps kappa to the physical orbital label") {
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Spin, 1) == 1);
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Spin, -1) == 0);
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Spin, 2) == 2);
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Spin, -2) == 1);
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Pseudospin, 1) == 0);
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Pseudospin, -1) == 1);
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Pseudospin, 2) == 1);
  CHECK(dhs::pair_l(dhs::SymmetryLimit::Pseudospin, -2) == 2);
}

TEST_CASE("pseudospin energy parameters match the closed-form pin") {
  // E = M = 1, C_ps = 0.05, D = 10, sigma0 = alpha = 0.1, kappa = -1
  const dhs::SymmetryContext s{dhs::SymmetryLimit::Pseudospin, 0.05, 1.0};
  const dhs::EnergyParams ep = dhs::energy_params(kP, s, 1.0, -1);
  CHECK(ep.beta == Approx(0.05).epsilon(1e-15));
  CHECK(ep.gamma == Approx(0.1).epsilon(1e-15));
  CHECK(ep.k * ep.k == Approx(dhs::refdata::kPspinK1Squared).epsilon(1e-14));
  CHECK(ep.lambda == Approx(dhs::refdata::kPspinLambda).epsilon(1e-14));
}

TEST_CASE("spin anchor: printed exponent is 6, indicial radicand is negative") {
  // E = M = 1, C_s = 5, D = 10, sigma0 = alpha = 0.5, kappa = -1
  const dhs::PotentialParams p{10.0, 0.5, 0.5, dhs::kDefaultC0};
  const dhs::SymmetryContext s{dhs::SymmetryLimit::Spin, 5.0, 1.0};
  const dhs::EnergyParams ep =
      dhs::energy_params(p, s, 1.0, -1, dhs::LambdaForm::Printed);
  CHECK(ep.beta == Approx(-3.0).epsilon(1e-15));  // M + E - C_s
  CHECK(ep.k * ep.k == Approx(dhs::refdata::kAnchorKSquared).epsilon(1e-14));
  CHECK(ep.k == Approx(dhs::refdata::kAnchorK).epsilon(1e-15));
  CHECK(ep.lambda == Approx(6.0).epsilon(1e-14));
  CHECK_THROWS_AS(
      dhs::energy_params(p, s, 1.0, -1, dhs::LambdaForm::Indicial),
      dhs::ComplexExponentError);
}

TEST_CASE("spin printed lambda equals pseudospin lambda under the mapping") {
  // beta_spin(E, C) = beta_pspin(-E, -C) and kappa -> -kappa exchanges
  // kappa(kappa+1) with kappa(kappa-1), so the printed spin radicand must
  // equal the pseudospin one at mapped arguments.
  const dhs::PotentialParams p{4.0, 0.3, 0.4, dhs::kDefaultC0};
  for (const int kappa : {-3, -1, 1, 2}) {
    const dhs::SymmetryContext sp{dhs::SymmetryLimit::Spin, 1.25, 1.0};
    const dhs::SymmetryContext ps{dhs::SymmetryLimit::Pseudospin, -1.25, 1.0};
    const double E = 0.7;
    const double rs =
        dhs::lambda_radicand(p, sp, E, kappa, dhs::LambdaForm::Printed);
    const double rp =
        dhs::lambda_radicand(p, ps, -E, -kappa, dhs::LambdaForm::Printed);
    CHECK(rs == Approx(rp).epsilon(1e-14));
  }
}

TEST_CASE("pseudospin lambda printed and indicial forms coincide") {
  const dhs::SymmetryContext s{dhs::SymmetryLimit::Pseudospin, 0.05, 1.0};
  const double a =
      dhs::lambda_radicand(kP, s, 0.4, -2, dhs::LambdaForm::Printed);
  const double b =
      dhs::lambda_radicand(kP, s, 0.4, -2, dhs::LambdaForm::Indicial);
  CHECK(a == b);
}

TEST_CASE("evanescent channels throw with the k^2 payload") {
  // Pseudospin with C_ps = 0 at E = M: beta = 0, so
  // k^2 = -4 alpha^2 kappa(kappa-1) c0 <= 0 for every kappa.
  const dhs::SymmetryContext s{dhs::SymmetryLimit::Pseudospin, 0.0, 1.0};
  CHECK_THROWS_AS(dhs::energy_params(kP, s, 1.0, -1),
                  dhs::EvanescentChannelError);
  try {
    dhs::energy_params(kP, s, 1.0, 1);  // kappa(kappa-1) = 0 -> k^2 = 0
    CHECK(false);
  } catch (const dhs::EvanescentChannelError& e) {
    CHECK(e.k_squared == Approx(0.0).epsilon(1e-30));
  }
}

TEST_CASE("energy_params rejects kappa = 0 and the non-relativistic limit") {
  const dhs::SymmetryContext ps{dhs::SymmetryLimit::Pseudospin, 0.05, 1.0};
  CHECK_THROWS_AS(dhs::energy_params(kP, ps, 1.0, 0), dhs::DomainError);
  const dhs::SymmetryContext nr{dhs::SymmetryLimit::NonRelativistic, 0.0, 1.0};
  CHECK_THROWS_AS(dhs::energy_params(kP, nr, 1.0, -1), dhs::DomainError);
}
