#pragma once
// Closed-form heat kernels of the alpha = 2 models on the half line. These
// are the independent references the discrete spectral calculus is judged
// against: they come from classical formulas, not from the eigensolver, so
// agreement is evidence rather than tautology.

#include <cmath>

#include "hardyops/coupling.hpp"
#include "hardyops/special.hpp"

namespace hardyops {

// Dirichlet heat kernel on the half line by the reflection principle:
// p_t(x,y) = (4 pi t)^{-1/2} (e^{-(x-y)^2/4t} - e^{-(x+y)^2/4t}).
inline double dirichlet_heat_oracle(double t, double x, double y) {
  require(t > 0.0 && x > 0.0 && y > 0.0,
          "dirichlet_heat_oracle: need t, x, y > 0");
  const double c = 1.0 / std::sqrt(4.0 * M_PI * t);
  const double dm = x - y, dp = x + y;
  return c * (std::exp(-dm * dm / (4.0 * t)) - std::exp(-dp * dp / (4.0 * t)));
}

// Order of the Bessel kernel attached to -d^2/dx^2 + lambda x^{-2}: the
// coupling lambda = nu^2 - 1/4 inverts to nu = sigma - 1/2 on the branch
// the calculus uses. nu >= -1/2 exactly when lambda >= the critical value.
inline double bessel_heat_order(const ModelParams& params) {
  require(params.alpha == 2.0, "bessel_heat_order: closed form is alpha = 2");
  return params.sigma - 0.5;
}

// Heat kernel of the coupled alpha = 2 model,
//   p_t(x,y) = (sqrt(xy) / 2t) e^{-(x^2+y^2)/4t} I_nu(xy / 2t),
// written against the scaled Bessel function so the exponentially large
// I_nu cancels before anything overflows:
//   p_t(x,y) = (sqrt(xy) / 2t) e^{-(x-y)^2/4t} [e^{-z} I_nu](xy / 2t).
// At nu = 1/2 this reproduces the reflection formula above.
inline double bessel_heat_oracle(double t, double x, double y, double nu) {
  require(t > 0.0 && x > 0.0 && y > 0.0,
          "bessel_heat_oracle: need t, x, y > 0");
  const double z = x * y / (2.0 * t);
  const double dm = x - y;
  return (std::sqrt(x * y) / (2.0 * t)) * std::exp(-dm * dm / (4.0 * t)) *
         bessel_i_scaled(nu, z);
}

}  // namespace hardyops
