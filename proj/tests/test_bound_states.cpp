#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <utility>
#include <vector>

#include "dhs/bound_states.hpp"
#include "dhs/errors.hpp"
#include "dhs/model.hpp"
#include "dhs/reference_data.hpp"

using doctest::Approx;

namespace {

// The four reference bound-state families, indexed as in RefinedRoot::table.
// All use alpha = 0.1, M = 1; sigma0 comes from the row.
struct Family {
  dhs::SymmetryLimit limit;
  double D;
  double C;
};
constexpr Family kFamilies[] = {
    {dhs::SymmetryLimit::Pseudospin, 5.0, 0.0},
    {dhs::SymmetryLimit::Pseudospin, 10.0, -5.0},
    {dhs::SymmetryLimit::Spin, 10.0, 0.0},
    {dhs::SymmetryLimit::Spin, 10.0, 5.0},
};

std::pair<dhs::PotentialParams, dhs::SymmetryContext> family_params(
    int table, double sigma0) {
  const Family& f = kFamilies[table];
  return {dhs::PotentialParams{f.D, sigma0, 0.1, dhs::kDefaultC0},
          dhs::SymmetryContext{f.limit, f.C, 1.0}};
}

bool has_root_within(const std::vector<dhs::BoundStateSolution>& roots,
                     double want, double tol) {
  for (const auto& r : roots) {
    if (std::abs(r.E - want) <= tol) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("solver reproduces the 40-digit refined roots to 1e-9") {
  for (const auto& pin : dhs::refdata::kRefinedRoots) {
    const auto [p, s] = family_params(pin.table, pin.sigma0);
    const auto roots = dhs::solve_bound_energies(p, s, pin.n, pin.kappa);
    CAPTURE(pin.table);
    CAPTURE(pin.n);
    CAPTURE(pin.kappa);
    CAPTURE(pin.sigma0);
    CHECK(has_root_within(roots, pin.energy, 1e-9));
  }
}

TEST_CASE("solver reproduces every tabulated bound energy to 1e-6") {
  const auto check_table = [](int table, const auto& rows) {
    for (const auto& row : rows) {
      const auto [p, s] = family_params(table, row.sigma0);
      const auto roots = dhs::solve_bound_energies(p, s, row.n, row.kappa);
      CAPTURE(table);
      CAPTURE(row.n);
      CAPTURE(row.kappa);
      CAPTURE(row.sigma0);
      CHECK(has_root_within(roots, row.root1, 1e-6));
      CHECK(has_root_within(roots, row.root2, 1e-6));
    }
  };
  check_table(0, dhs::refdata::kPspinBoundA);
  check_table(1, dhs::refdata::kPspinBoundB);
  check_table(2, dhs::refdata::kSpinBoundCs0);
  check_table(3, dhs::refdata::kSpinBoundCs5);
}

TEST_CASE("solutions come back ascending with enclosing brackets") {
  const auto [p, s] = family_params(3, 0.10);
  const auto roots = dhs::solve_bound_energies(p, s, 0, -2);
  REQUIRE(!roots.empty());
  for (size_t i = 0; i < roots.size(); ++i) {
    CHECK(roots[i].bracket.first <= roots[i].E);
    CHECK(roots[i].E <= roots[i].bracket.second);
    CHECK(roots[i].n == 0);
    CHECK(roots[i].kappa == -2);
    CHECK(roots[i].limit == dhs::SymmetryLimit::Spin);
    if (i > 0) {
      CHECK(roots[i - 1].E < roots[i].E);
    }
  }
}

TEST_CASE("residual changes sign across a refined root") {
  const auto& pin = dhs::refdata::kRefinedRoots[0];  // pspin table A
  const auto [p, s] = family_params(pin.table, pin.sigma0);
  const auto lo = dhs::pspin_residual(p, s, pin.energy - 1e-7, pin.n, pin.kappa);
  const auto hi = dhs::pspin_residual(p, s, pin.energy + 1e-7, pin.n, pin.kappa);
  REQUIRE(lo.params_valid);
  REQUIRE(hi.params_valid);
  CHECK(lo.residual * hi.residual < 0.0);
}

TEST_CASE("residual reports invalid parameters instead of throwing") {
  // Pseudospin D = 5, C_ps = 0, sigma0 = 0.1: at E = 0 the exponent
  // radicand 9 - 20 (1 - E) is negative.
  const auto [p, s] = family_params(0, 0.10);
  const auto r = dhs::pspin_residual(p, s, 0.0, 1, -1);
  CHECK(!r.params_valid);
  CHECK(r.E == 0.0);
  const auto ok = dhs::pspin_residual(p, s, 2.0, 1, -1);
  CHECK(ok.params_valid);
}

TEST_CASE("empty or fully invalid windows throw EmptyWindowError") {
  const auto [p, s] = family_params(0, 0.10);
  CHECK_THROWS_AS(dhs::solve_bound_energies(p, s, 1, -1,
                                            std::make_pair(0.2, 0.2)),
                  dhs::EmptyWindowError);
  // Exponent radicand is negative throughout [-0.5, 0].
  CHECK_THROWS_AS(dhs::solve_bound_energies(p, s, 1, -1,
                                            std::make_pair(-0.5, 0.0)),
                  dhs::EmptyWindowError);
}

TEST_CASE("scan-step halving does not change the roots") {
  const auto [p, s] = family_params(0, 0.10);
  const auto a = dhs::solve_bound_energies(p, s, 1, -1, std::nullopt, 1e-3);
  const auto b = dhs::solve_bound_energies(p, s, 1, -1, std::nullopt, 5e-4);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].E == Approx(b[i].E).epsilon(1e-10));
  }
}

TEST_CASE("solver rejects bad inputs") {
  const auto [p, s] = family_params(0, 0.10);
  CHECK_THROWS_AS(dhs::solve_bound_energies(p, s, -1, -1), dhs::DomainError);
  const dhs::SymmetryContext nr{dhs::SymmetryLimit::NonRelativistic, 0.0, 1.0};
  CHECK_THROWS_AS(dhs::solve_bound_energies(p, nr, 1, -1), dhs::DomainError);
}

TEST_CASE("nonrel_energy matches the full-precision pins") {
  for (const auto& pin : dhs::refdata::kNonrelPins) {
    const dhs::PotentialParams p{10.0, pin.sigma0, pin.alpha,
                                 dhs::kDefaultC0};
    CHECK(dhs::nonrel_energy(p, 1.0, pin.n, pin.l) ==
          Approx(pin.energy).epsilon(1e-13));
  }
}

TEST_CASE("nonrel_energy reproduces all 72 tabulated energies to 5e-6") {
  for (const auto& row : dhs::refdata::kNonrelEnergies) {
    const dhs::PotentialParams p{10.0, row.sigma0, row.alpha,
                                 dhs::kDefaultC0};
    const double e = dhs::nonrel_energy(p, 1.0, row.n, row.l);
    CAPTURE(row.n);
    CAPTURE(row.l);
    CAPTURE(row.sigma0);
    CAPTURE(row.alpha);
    CHECK(std::abs(e - row.energy) <= 5e-6);
  }
}

TEST_CASE("nonrel_energy validates its inputs") {
  const dhs::PotentialParams p{10.0, 0.1, 0.1, dhs::kDefaultC0};
  CHECK_THROWS_AS(dhs::nonrel_energy(p, 0.0, 0, 1), dhs::DomainError);
  CHECK_THROWS_AS(dhs::nonrel_energy(p, 1.0, -1, 1), dhs::DomainError);
  CHECK_THROWS_AS(dhs::nonrel_energy(p, 1.0, 0, -1), dhs::DomainError);
}

TEST_CASE("spin solver approaches the non-relativistic limit at large M") {
  // Spin limit with C_s = 0 and M large: E - M converges to the
  // non-relativistic energy at reduced mass mu = M (kappa = -2 <-> l = 1).
  const double M = 1000.0;
  const dhs::PotentialParams p{10.0, 0.1, 0.1, dhs::kDefaultC0};
  const dhs::SymmetryContext s{dhs::SymmetryLimit::Spin, 0.0, M};
  const double eps = dhs::nonrel_energy(p, M, 0, 1);
  const auto roots = dhs::solve_bound_energies(
      p, s, 0, -2, std::make_pair(M + eps - 0.3, M + eps + 0.3));
  REQUIRE(!roots.empty());
  CHECK(has_root_within(roots, M + eps, 1e-3));
}
