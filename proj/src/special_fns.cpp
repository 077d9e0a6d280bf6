#include "dhs/special_fns.hpp"

#include <cmath>
#include <string>

namespace dhs {

namespace {

// Stirling series coefficients B_{2j} / (2j (2j-1)) for j = 1..15.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
    -236364091.0 / 1507320.0,
    8553103.0 / 3900.0,
    -23749461029.0 / 657720.0,
    8615841276005.0 / 12460020.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi) / 2

// Real part above which the Stirling series is accurate to ~1e-24 absolute.
constexpr double kStirlingEdge = 10.0;

bool near_gamma_pole(Complex z, double tol) {
  const double nearest = std::round(z.real());
  return nearest <= 0.0 &&
         std::hypot(z.real() - nearest, z.imag()) < tol;
}

std::string complex_str(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
         ")";
}

}  // namespace

Complex log_gamma(Complex z) {
  if (near_gamma_pole(z, 1e-12)) {
    throw PoleError("log_gamma: argument " + complex_str(z) +
                    " is within 1e-12 of a non-positive-integer pole");
  }
  // Shift into the Stirling region with the recurrence
  // log_gamma(z) = log_gamma(z + m) - sum_{j=0}^{m-1} Log(z + j),
  // which propagates the principal analytic continuation: each principal
  // Log is analytic off the negative real axis, and the identity holds on
  // the positive reals.
  Complex shift(0.0, 0.0);
  while (z.real() < kStirlingEdge) {
    shift += std::log(z);
    z += 1.0;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series(0.0, 0.0);
  Complex power = inv;  // 1 / z^(2j-1)
  Complex terms[15];
  for (int j = 0; j < 15; ++j) {
    terms[j] = kStirling[j] * power;
    power *= inv2;
  }
  for (int j = 14; j >= 0; --j) {  // smallest first
    series += terms[j];
  }
  const Complex stirling =
      (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series;
  return stirling - shift;
}

double arg_gamma(Complex z) { return log_gamma(z).imag(); }

double abs_gamma(Complex z) { return std::exp(log_gamma(z).real()); }

Complex hyp2f1_series(Complex a, Complex b, Complex c, double z) {
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("hyp2f1_series: argument z = " + std::to_string(z) +
                      " outside [0, 1)");
  }
  if (near_gamma_pole(c, 1e-12)) {
    throw PoleError("hyp2f1_series: c = " + complex_str(c) +
                    " is within 1e-12 of a non-positive integer");
  }
  Complex sum(1.0, 0.0);
  Complex term(1.0, 0.0);
  int small_streak = 0;
  constexpr int kCap = 100000;
  for (int n = 0; n < kCap; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-15 * std::abs(sum)) {
      if (++small_streak >= 3) {
        return sum;
      }
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError(
      "hyp2f1_series: term cap of 1e5 reached before convergence at z = " +
      std::to_string(z));
}

Complex hyp2f1_connection(Complex a, Complex b, Complex c, double z,
                          double one_minus_z) {
  // The rounded z is only consulted for the branch threshold; sub-unity is
  // certified by the exact complement (z = 1 - 1e-18 rounds to 1.0 in
  // double, yet the formula below runs entirely off one_minus_z).
  if (!(z > 0.5) || !(one_minus_z > 0.0 && one_minus_z < 0.5)) {
    throw DomainError("hyp2f1_connection: argument z = " + std::to_string(z) +
                      " outside (0.5, 1)");
  }
  const Complex cab = c - a - b;
  const double nearest = std::round(cab.real());
  if (std::hypot(cab.real() - nearest, cab.imag()) < 1e-10) {
    throw DegenerateParameterError(
        "hyp2f1_connection: c - a - b = " + complex_str(cab) +
        " is within 1e-10 of an integer; the connection formula degenerates");
  }
  const double w = one_minus_z;
  const double logw = std::log(w);
  const Complex lg_c = log_gamma(c);  // PoleError propagates for c at a pole
  Complex result(0.0, 0.0);
  // First term: Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))
  //             * 2F1(a, b; a+b-c+1; 1-z)
  if (!near_gamma_pole(c - a, 1e-12) && !near_gamma_pole(c - b, 1e-12)) {
    const Complex pref =
        std::exp(lg_c + log_gamma(cab) - log_gamma(c - a) - log_gamma(c - b));
    result += pref * hyp2f1_series(a, b, 1.0 - cab, w);
  }
  // Second term: (1-z)^(c-a-b) Gamma(c) Gamma(a+b-c) / (Gamma(a) Gamma(b))
  //              * 2F1(c-a, c-b; c-a-b+1; 1-z)
  if (!near_gamma_pole(a, 1e-12) && !near_gamma_pole(b, 1e-12)) {
    const Complex pref =
        std::exp(lg_c + log_gamma(-cab) - log_gamma(a) - log_gamma(b) +
                 cab * logw);
    result += pref * hyp2f1_series(c - a, c - b, 1.0 + cab, w);
  }
  return result;
}

Complex hyp2f1_connection(Complex a, Complex b, Complex c, double z) {
  return hyp2f1_connection(a, b, c, z, 1.0 - z);
}

Complex hyp2f1(Complex a, Complex b, Complex c, double z, double one_minus_z) {
  // one_minus_z > 0 certifies z < 1 even when z itself rounds to 1.0.
  if (!(z >= 0.0) || !(one_minus_z > 0.0)) {
    throw DomainError("hyp2f1: argument z = " + std::to_string(z) +
                      " outside [0, 1)");
  }
  if (z <= 0.5) {
    return hyp2f1_series(a, b, c, z);
  }
  const Complex cab = c - a - b;
  const double nearest = std::round(cab.real());
  if (std::hypot(cab.real() - nearest, cab.imag()) < 1e-10) {
    // Degenerate c-a-b: the connection formula is inapplicable, but the
    // direct series still converges (slowly) for z < 1.
    return hyp2f1_series(a, b, c, z);
  }
  const Complex value = hyp2f1_connection(a, b, c, z, one_minus_z);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw ConvergenceError("hyp2f1: non-finite result at z = " +
                           std::to_string(z));
  }
  return value;
}

Complex hyp2f1(Complex a, Complex b, Complex c, double z) {
  return hyp2f1(a, b, c, z, 1.0 - z);
}

}  // namespace dhs
