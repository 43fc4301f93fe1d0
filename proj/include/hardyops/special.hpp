#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>

#include "hardyops/common.hpp"

// Special functions needed by the closed-form layer: Gamma on (0, inf),
// sin/cos of pi*x with exact integer reduction, and the modified Bessel
// function I_nu for nu >= -1/2. All of them are checked in the test suite
// against tables frozen from a 50-digit arbitrary-precision run.

namespace hardyops {

namespace detail {

// Lanczos approximation, g = 7, 9 terms. Relative error on (0, 170] is a few
// 1e-15 in practice; the test gate is 1e-13.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline double lanczos_sum(double x) {
  double s = kLanczosCoeff[0];
  for (int i = 1; i < 9; ++i) s += kLanczosCoeff[i] / (x + i);
  return s;
}

}  // namespace detail

// Gamma(x) for x > 0. Arguments in (0, 1/2) go through one recurrence step so
// the Lanczos core only ever sees x >= 1/2. Overflows to +inf past x ~ 171.6.
inline double gamma_fn(double x) {
  require(std::isfinite(x) && x > 0.0, "gamma_fn: argument must be positive");
  if (x < 0.5) return gamma_fn(x + 1.0) / x;
  const double z = x - 1.0;
  const double base = z + detail::kLanczosG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(base, z + 0.5) * std::exp(-base) *
         detail::lanczos_sum(z);
}

// log Gamma(x) for x > 0, same core as gamma_fn but assembled in log space so
// it stays finite where Gamma itself overflows.
inline double log_gamma_fn(double x) {
  require(std::isfinite(x) && x > 0.0, "log_gamma_fn: argument must be positive");
  if (x < 0.5) return log_gamma_fn(x + 1.0) - std::log(x);
  const double z = x - 1.0;
  const double base = z + detail::kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(base) - base +
         std::log(detail::lanczos_sum(z));
}

// sin(pi x) with the integer part removed exactly, so arguments near integers
// keep full relative accuracy. Critical for the coupling function, where the
// Gamma pole and the sine zero cancel against each other.
inline double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double n = std::round(x);
  double r = x - n;  // |r| <= 1/2, exact (Sterbenz)
  double s = std::sin(M_PI * r);
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

inline double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double n = std::round(x);
  double r = x - n;
  double c = std::cos(M_PI * r);
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -c : c;
}

namespace detail {

// Ascending series I_nu(z) = (z/2)^nu sum_k (z^2/4)^k / (k! Gamma(nu+k+1)).
// All terms are positive: no cancellation at any z, cost O(z) terms.
inline double bessel_i_series(double nu, double z) {
  const double q = 0.25 * z * z;
  double term = std::pow(0.5 * z, nu) / gamma_fn(nu + 1.0);
  double sum = term;
  for (int k = 1; k <= 600; ++k) {
    term *= q / (static_cast<double>(k) * (nu + k));
    sum += term;
    if (term < sum * 1e-18) return sum;
  }
  throw numeric_error("bessel_i_series: no convergence within 600 terms");
}

// Large-argument expansion including the subdominant exponential:
//   I_nu(z) ~ [e^z S1 + cos((nu+1/2) pi) e^-z S2] / sqrt(2 pi z),
//   S1 = sum (-1)^k a_k / z^k, S2 = sum a_k / z^k,
//   a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
// Both series are truncated at their smallest term. Returns e^-z I_nu(z).
inline double bessel_i_asymptotic_scaled(double nu, double z) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  double s1 = 1.0, s2 = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 60; ++k) {
    const double f = 2.0 * k - 1.0;
    a *= (mu - f * f) / (8.0 * k);
    const double mag = std::abs(a) / std::pow(z, k);
    if (mag >= prev || mag < 1e-19) break;  // divergence onset or converged
    prev = mag;
    const double t = a / std::pow(z, k);
    s1 += (k % 2 == 0) ? t : -t;
    s2 += t;
  }
  const double sub = cos_pi(nu + 0.5) * std::exp(-2.0 * z) * s2;
  return (s1 + sub) / std::sqrt(2.0 * M_PI * z);
}

// Branch switch. Below the cutoff the ascending series is cheap and exact in
// the positive-term sense; above it the truncated expansion has error
// O(e^-2z), which is below 1e-12 relative for z >= 14.
inline double bessel_crossover(double nu) {
  return std::max(14.0, 2.0 * nu * nu);
}

}  // namespace detail

// Largest z for which e^z I_nu(z)-scale quantities stay inside double range.
inline constexpr double kBesselIOverflowCap = 705.0;

// e^{-z} I_nu(z) for nu >= -1/2, z >= 0. Finite for all z up to at least 1e6.
inline double bessel_i_scaled(double nu, double z) {
  require(nu >= -0.5, "bessel_i_scaled: order must be >= -1/2");
  require(std::isfinite(z) && z >= 0.0, "bessel_i_scaled: argument must be >= 0");
  if (z == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  if (z < detail::bessel_crossover(nu))
    return detail::bessel_i_series(nu, z) * std::exp(-z);
  return detail::bessel_i_asymptotic_scaled(nu, z);
}

// I_nu(z) for nu >= -1/2, 0 <= z <= 705. Signals overflow past the cap; use
// bessel_i_scaled there instead.
inline double bessel_i(double nu, double z) {
  require(nu >= -0.5, "bessel_i: order must be >= -1/2");
  require(std::isfinite(z) && z >= 0.0, "bessel_i: argument must be >= 0");
  if (z > kBesselIOverflowCap)
    throw std::overflow_error("bessel_i: argument beyond overflow cap 705; use bessel_i_scaled");
  if (z == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  if (z < detail::bessel_crossover(nu)) return detail::bessel_i_series(nu, z);
  return detail::bessel_i_asymptotic_scaled(nu, z) * std::exp(z);
}

}  // namespace hardyops
