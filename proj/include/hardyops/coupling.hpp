#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "hardyops/numerics.hpp"
#include "hardyops/special.hpp"

// The coupling dictionary between the Hardy coupling lambda and the boundary
// exponent sigma. The scalar function
//
//   C(sigma) = (1/pi) [ Gamma(alpha) sin(pi alpha/2)
//                       + Gamma(1+sigma) Gamma(alpha-sigma) sin(pi (2 sigma - alpha)/2) ]
//
// is symmetric about sigma = (alpha-1)/2, strictly increasing to the right of
// that axis, and C((alpha-1)/2) is the critical coupling lambda_star. For
// alpha = 2 the Gamma/sine product collapses to sigma(sigma-1) identically
// (the apparent poles at sigma = 2, 3, ... are removable), which is the form
// used here so that large couplings stay evaluable.

namespace hardyops {

inline double c_of_sigma(double sigma, double alpha) {
  require(alpha > 0.0 && alpha <= 2.0, "c_of_sigma: alpha must lie in (0,2]");
  require(sigma > -1.0, "c_of_sigma: sigma must be > -1");
  if (alpha == 2.0) return sigma * (sigma - 1.0);
  require(sigma < alpha, "c_of_sigma: sigma must be < alpha when alpha < 2");
  const double even = gamma_fn(alpha) * sin_pi(0.5 * alpha);
  const double odd = gamma_fn(1.0 + sigma) * gamma_fn(alpha - sigma) *
                     sin_pi(sigma - 0.5 * alpha);
  return (even + odd) / M_PI;
}

// Critical coupling: the minimum of C, attained on the symmetry axis.
inline double lambda_star(double alpha) {
  require(alpha > 0.0 && alpha <= 2.0, "lambda_star: alpha must lie in (0,2]");
  return c_of_sigma(0.5 * (alpha - 1.0), alpha);
}

// Upper end of the increasing branch: alpha when alpha < 2, +inf at alpha = 2.
inline double sigma_branch_sup(double alpha) {
  return alpha < 2.0 ? alpha : std::numeric_limits<double>::infinity();
}

// Inverse of C on the increasing branch [(alpha-1)/2, sigma_branch_sup).
// alpha = 2 has the closed form (1 + sqrt(1+4 lambda))/2; otherwise the
// bracket grows toward the branch endpoint (where C -> +inf) and Brent
// finishes. Residual |C(sigma) - lambda| <= 1e-11 is enforced.
inline double sigma_from_lambda(double lambda, double alpha) {
  require(alpha > 0.0 && alpha <= 2.0, "sigma_from_lambda: alpha must lie in (0,2]");
  const double lstar = lambda_star(alpha);
  if (lambda < lstar - 1e-12)
    throw admissibility_error(
        "sigma_from_lambda: lambda below critical coupling lambda_star(alpha) = " +
        format_double(lstar));
  if (lambda <= lstar) return 0.5 * (alpha - 1.0);

  if (alpha == 2.0) {
    const double sigma = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * lambda));
    // The closed form solves sigma^2 - sigma = lambda exactly on this branch.
    return sigma;
  }

  const double lo = 0.5 * (alpha - 1.0);
  double gap = alpha - lo;
  double hi = alpha - 0.5 * gap;
  double chi = c_of_sigma(hi, alpha);
  int expand = 0;
  while (chi < lambda) {
    gap *= 0.5;
    hi = alpha - 0.5 * gap;
    chi = c_of_sigma(hi, alpha);
    if (++expand > 180)
      throw numeric_error("sigma_from_lambda: bracket expansion failed");
  }
  auto f = [&](double s) { return c_of_sigma(s, alpha) - lambda; };
  const double sigma = brent_root(f, lo, hi, 1e-15, 200, lstar - lambda, chi - lambda);
  const double resid = std::abs(c_of_sigma(sigma, alpha) - lambda);
  if (resid > 1e-11 * std::max(1.0, std::abs(lambda)))
    throw numeric_error("sigma_from_lambda: residual above tolerance: " +
                        format_double(resid));
  return sigma;
}

// Bundle of model parameters every operator-level routine consumes.
// q and r are the envelope exponents derived from sigma:
//   q = min(sigma, (alpha-1)_+),  r = -min(0, q) >= 0.
struct ModelParams {
  double alpha = 2.0;
  double lambda = 0.0;
  double sigma = 1.0;
  double lstar = -0.25;
  int d = 1;                 // dimension; only envelope formulas read it
  double branch_sup = std::numeric_limits<double>::infinity();

  double q() const { return std::min(sigma, positive_part(alpha - 1.0)); }
  double r() const { return -std::min(0.0, q()); }
};

inline ModelParams make_params(double alpha, double lambda, int d = 1) {
  require(d >= 1, "make_params: dimension must be a positive integer");
  ModelParams p;
  p.alpha = alpha;
  p.lambda = lambda;
  p.lstar = lambda_star(alpha);
  p.sigma = sigma_from_lambda(lambda, alpha);
  p.d = d;
  p.branch_sup = sigma_branch_sup(alpha);
  return p;
}

}  // namespace hardyops
