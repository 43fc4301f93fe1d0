#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "hardyops/special.hpp"
#include "reference_tables.hpp"

using namespace hardyops;

TEST_CASE("gamma_fn matches the frozen table", "[special]") {
  for (const auto& row : reftab::kGamma) {
    CAPTURE(row.x);
    CHECK(close_rel(gamma_fn(row.x), row.value, 1e-13));
  }
}

TEST_CASE("gamma_fn recurrence and reflection identities", "[special]") {
  for (double x : {0.1, 0.37, 1.0, 2.5, 9.75, 41.0}) {
    CAPTURE(x);
    CHECK(close_rel(gamma_fn(x + 1.0), x * gamma_fn(x), 1e-13));
  }
  // Gamma(x) Gamma(1-x) = pi / sin(pi x), with both factors in (0, 1).
  for (double x : {0.1, 0.25, 0.5, 0.9}) {
    CAPTURE(x);
    CHECK(close_rel(gamma_fn(x) * gamma_fn(1.0 - x), M_PI / sin_pi(x), 1e-13));
  }
}

TEST_CASE("log_gamma_fn stays finite past the gamma overflow", "[special]") {
  for (const auto& row : reftab::kGamma) {
    CAPTURE(row.x);
    CHECK(close_rel(log_gamma_fn(row.x), std::log(row.value), 1e-12));
  }
  const double lg = log_gamma_fn(500.0);
  CHECK(std::isfinite(lg));
  // Stirling sanity: log Gamma(500) ~ 499.5 log 500 - 500 + log sqrt(2 pi / 500).
  CHECK(close_rel(lg, 2605.115850361734, 1e-12));
  CHECK(gamma_fn(500.0) == std::numeric_limits<double>::infinity());
}

TEST_CASE("gamma_fn rejects non-positive arguments", "[special]") {
  CHECK_THROWS(gamma_fn(0.0));
  CHECK_THROWS(gamma_fn(-1.5));
  CHECK_THROWS(gamma_fn(std::numeric_limits<double>::quiet_NaN()));
}

TEST_CASE("sin_pi and cos_pi reduce integers exactly", "[special]") {
  CHECK(sin_pi(1.0) == 0.0);
  CHECK(sin_pi(1234567.0) == 0.0);
  CHECK(cos_pi(1.0) == -1.0);
  CHECK(cos_pi(2.0) == 1.0);
  CHECK(close_rel(sin_pi(0.5), 1.0, 1e-15));
  CHECK(close_rel(cos_pi(1.0 / 3.0), 0.5, 1e-15));
  // Near-integer arguments keep relative accuracy: sin(pi(n+e)) = +-sin(pi e).
  const double eps = 1e-9;
  CHECK(close_rel(sin_pi(7.0 + eps), -M_PI * eps, 1e-9));
  CHECK(close_rel(sin_pi(8.0 + eps), M_PI * eps, 1e-9));
}

TEST_CASE("bessel_i matches the frozen table on both branches", "[special]") {
  for (const auto& row : reftab::kBesselI) {
    CAPTURE(row.nu, row.z);
    CHECK(close_rel(bessel_i(row.nu, row.z), row.value, 1e-12));
    CHECK(close_rel(bessel_i_scaled(row.nu, row.z), row.scaled, 1e-12));
  }
}

TEST_CASE("bessel_i_scaled handles large arguments", "[special]") {
  for (const auto& row : reftab::kBesselIScaledLarge) {
    CAPTURE(row.nu, row.z);
    CHECK(close_rel(bessel_i_scaled(row.nu, row.z), row.scaled, 1e-12));
  }
}

TEST_CASE("bessel branch crossover is seamless", "[special]") {
  // Evaluate just below and just above the series/asymptotic switch; the two
  // branches must agree to the advertised accuracy, not merely be close.
  for (double nu : {-0.5, 0.0, 1.0, 2.5}) {
    const double zc = detail::bessel_crossover(nu);
    const double below = bessel_i_scaled(nu, zc * (1.0 - 1e-9));
    const double above = bessel_i_scaled(nu, zc * (1.0 + 1e-9));
    CAPTURE(nu, zc);
    CHECK(close_rel(below, above, 1e-11));
  }
}

TEST_CASE("bessel_i overflow cap and argument contracts", "[special]") {
  CHECK_THROWS_AS(bessel_i(0.0, 710.0), std::overflow_error);
  CHECK(std::isfinite(bessel_i_scaled(0.0, 710.0)));
  CHECK(std::isfinite(bessel_i_scaled(0.0, 1e6)));
  CHECK_THROWS(bessel_i(-0.75, 1.0));         // order below -1/2
  CHECK_THROWS(bessel_i_scaled(0.0, -1.0));   // negative argument
  // z = 0 limits: I_0(0) = 1, I_nu(0) = 0 for nu > 0.
  CHECK(bessel_i(0.0, 0.0) == 1.0);
  CHECK(bessel_i(1.5, 0.0) == 0.0);
  CHECK(bessel_i_scaled(-0.5, 0.0) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("half-integer orders reduce to elementary functions", "[special]") {
  // I_{1/2}(z) = sqrt(2/(pi z)) sinh z, I_{-1/2}(z) = sqrt(2/(pi z)) cosh z.
  for (double z : {0.3, 1.0, 4.0, 12.0, 30.0}) {
    CAPTURE(z);
    const double pref = std::sqrt(2.0 / (M_PI * z));
    CHECK(close_rel(bessel_i(0.5, z), pref * std::sinh(z), 1e-12));
    CHECK(close_rel(bessel_i(-0.5, z), pref * std::cosh(z), 1e-12));
  }
}
