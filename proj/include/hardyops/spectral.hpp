#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hardyops/assembly.hpp"
#include "hardyops/common.hpp"
#include "hardyops/coupling.hpp"
#include "hardyops/grid.hpp"
#include "hardyops/numerics.hpp"

// Weighted spectral calculus for the assembled operators. The generalized
// problem A v = mu W v is reduced to the ordinary symmetric problem for
// B = W^(-1/2) A W^(-1/2); columns of V = W^(-1/2) V~ then satisfy
// V^T W V = I, and any spectral function f(L) has kernel values
// K(x_i, x_j) = sum_k f(mu_k) V_ik V_jk directly in pointwise convention.

namespace hardyops {

struct SpectralDecomposition {
  Grid grid;
  ModelParams params;
  Eigen::VectorXd mu;      // generalized eigenvalues, ascending
  Eigen::MatrixXd modes;   // columns v_k with modes^T W modes = I
  double residual = 0.0;     // max |A v_k - mu_k W v_k| over max |A|
  double ortho_defect = 0.0; // max |modes^T W modes - I|
  bool exploratory = false;
  bool critical = false;

  int n() const { return static_cast<int>(mu.size()); }
  double mu_min() const { return mu[0]; }
  double mu_max() const { return mu[n() - 1]; }

  // Floor used when raising the spectrum to a negative power; keeps the
  // near-null modes of critical couplings from blowing up the calculus.
  double spectral_floor() const { return 1e-12 * mu_max(); }

  // Expansion coefficients of nodal values u against the W-orthonormal
  // modes: c = V^T W u.
  Eigen::VectorXd coefficients(const Eigen::VectorXd& u) const {
    Eigen::VectorXd wu(u.size());
    for (int i = 0; i < n(); ++i) wu[i] = grid.w[i] * u[i];
    return modes.transpose() * wu;
  }

  Eigen::VectorXd synthesize(const Eigen::VectorXd& c) const {
    return modes * c;
  }
};

inline SpectralDecomposition decompose(const OperatorAssembly& assembly,
                                       const ModelParams& params) {
  const int n = assembly.grid.n();
  Eigen::VectorXd dinv(n);
  for (int i = 0; i < n; ++i) dinv[i] = 1.0 / std::sqrt(assembly.grid.w[i]);
  Eigen::MatrixXd b = dinv.asDiagonal() * assembly.form * dinv.asDiagonal();
  b = 0.5 * (b + b.transpose().eval());  // scrub roundoff asymmetry

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
  if (solver.info() != Eigen::Success)
    throw numeric_error("decompose: eigensolver did not converge");

  SpectralDecomposition out;
  out.grid = assembly.grid;
  out.params = params;
  out.mu = solver.eigenvalues();
  out.modes = dinv.asDiagonal() * solver.eigenvectors();
  out.exploratory = assembly.exploratory;
  out.critical = assembly.critical;

  Eigen::MatrixXd wv = out.modes;
  for (int i = 0; i < n; ++i) wv.row(i) *= assembly.grid.w[i];
  out.ortho_defect =
      (out.modes.transpose() * wv - Eigen::MatrixXd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  const Eigen::MatrixXd res =
      assembly.form * out.modes - wv * out.mu.asDiagonal();
  out.residual =
      res.cwiseAbs().maxCoeff() / assembly.form.cwiseAbs().maxCoeff();
  return out;
}

// Kernel values of f(L) on the full node grid: V f(Lambda) V^T.
inline Eigen::MatrixXd kernel_matrix(const SpectralDecomposition& d,
                                     const std::function<double(double)>& f) {
  Eigen::VectorXd fmu(d.n());
  for (int k = 0; k < d.n(); ++k) fmu[k] = f(d.mu[k]);
  return d.modes * fmu.asDiagonal() * d.modes.transpose();
}

inline double kernel_entry(const SpectralDecomposition& d, int i, int j,
                           const std::function<double(double)>& f) {
  double acc = 0.0;
  for (int k = 0; k < d.n(); ++k) acc += f(d.mu[k]) * d.modes(i, k) * d.modes(j, k);
  return acc;
}

// Nodal action of f(L) on a function.
inline Eigen::VectorXd apply_spectral(const SpectralDecomposition& d,
                                      const std::function<double(double)>& f,
                                      const Eigen::VectorXd& u) {
  Eigen::VectorXd c = d.coefficients(u);
  for (int k = 0; k < d.n(); ++k) c[k] *= f(d.mu[k]);
  return d.synthesize(c);
}

inline Eigen::MatrixXd heat_kernel(const SpectralDecomposition& d, double t) {
  require(t > 0.0, "heat_kernel: t must be positive");
  return kernel_matrix(d, [t](double mu) { return std::exp(-t * mu); });
}

// Kernel of (tL)^k e^{-tL}.
inline Eigen::MatrixXd ptk_kernel(const SpectralDecomposition& d, double t,
                                  int k) {
  require(t > 0.0, "ptk_kernel: t must be positive");
  require(k >= 1, "ptk_kernel: k must be a positive integer");
  return kernel_matrix(d, [t, k](double mu) {
    return std::pow(t * mu, static_cast<double>(k)) * std::exp(-t * mu);
  });
}

// Kernel of e^{-zL} for complex time in the sector |arg z| <= pi/4 with a
// hair of slack; outside the sector the envelope theory gives no control
// and the request is rejected.
inline Eigen::MatrixXcd complex_heat_kernel(const SpectralDecomposition& d,
                                            std::complex<double> z) {
  require(z.real() > 0.0 &&
              std::atan2(std::abs(z.imag()), z.real()) <= M_PI / 4.0 - 1e-6,
          "complex_heat_kernel: z must satisfy |arg z| <= pi/4 - 1e-6");
  Eigen::VectorXcd fmu(d.n());
  for (int k = 0; k < d.n(); ++k) fmu[k] = std::exp(-z * d.mu[k]);
  return d.modes.cast<std::complex<double>>() * fmu.asDiagonal() *
         d.modes.transpose().cast<std::complex<double>>();
}

// Kernel of L^exponent. Positive exponents clamp tiny negative eigenvalues
// (critical-coupling roundoff) to zero; negative exponents additionally
// floor the spectrum at spectral_floor().
inline Eigen::MatrixXd power_kernel(const SpectralDecomposition& d,
                                    double exponent) {
  const double flr = d.spectral_floor();
  return kernel_matrix(d, [exponent, flr](double mu) {
    if (exponent >= 0.0) return std::pow(std::max(mu, 0.0), exponent);
    return std::pow(std::max(mu, flr), exponent);
  });
}

// Row masses int K_t(x_i, y) dy of the heat kernel; sub-Markov discretes
// should keep these within roundoff of [0, 1].
inline Eigen::VectorXd heat_row_mass(const SpectralDecomposition& d, double t) {
  const Eigen::MatrixXd kt = heat_kernel(d, t);
  Eigen::VectorXd mass(d.n());
  for (int i = 0; i < d.n(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < d.n(); ++j) acc += kt(i, j) * d.grid.w[j];
    mass[i] = acc;
  }
  return mass;
}

// Max relative defect of the reproducing identity K_{t+s} = K_t W K_s.
inline double reproducing_defect(const SpectralDecomposition& d, double t,
                                 double s) {
  const Eigen::MatrixXd kt = heat_kernel(d, t);
  const Eigen::MatrixXd ks = heat_kernel(d, s);
  const Eigen::MatrixXd kts = heat_kernel(d, t + s);
  Eigen::MatrixXd wks = ks;
  for (int i = 0; i < d.n(); ++i) wks.row(i) *= d.grid.w[i];
  const Eigen::MatrixXd prod = kt * wks;
  return (prod - kts).cwiseAbs().maxCoeff() / kts.cwiseAbs().maxCoeff();
}

// Weighted L^p norm on the grid (p = inf accepted as infinity()).
inline double lp_norm(const Grid& grid, const Eigen::VectorXd& f, double p) {
  require(p >= 1.0, "lp_norm: p must lie in [1, inf]");
  if (std::isinf(p)) return f.cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (int i = 0; i < grid.n(); ++i)
    acc += grid.w[i] * std::pow(std::abs(f[i]), p);
  return std::pow(acc, 1.0 / p);
}

// Fixed panel of nodal test functions: Gaussian bumps at several centers
// and widths, a tent, plus two decaying profiles with the boundary
// exponent of the model. Intended for domains reaching past x = 15.
inline std::vector<Eigen::VectorXd> standard_test_functions(
    const Grid& grid, const ModelParams& params) {
  std::vector<Eigen::VectorXd> fns;
  const int n = grid.n();
  for (double center : {2.0, 5.0, 10.0}) {
    for (double width : {0.5, 1.0, 2.0}) {
      Eigen::VectorXd f(n);
      for (int i = 0; i < n; ++i) {
        const double u = (grid.x[i] - center) / width;
        f[i] = std::exp(-0.5 * u * u);
      }
      fns.push_back(f);
    }
  }
  Eigen::VectorXd tent(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x[i];
    tent[i] = x <= 3.0 || x >= 7.0 ? 0.0
              : x <= 5.0           ? (x - 3.0) / 2.0
                                   : (7.0 - x) / 2.0;
  }
  fns.push_back(tent);
  Eigen::VectorXd xexp(n), sig(n);
  for (int i = 0; i < n; ++i) {
    xexp[i] = grid.x[i] * std::exp(-grid.x[i]);
    sig[i] = std::pow(grid.x[i], params.sigma) * std::exp(-grid.x[i]);
  }
  fns.push_back(xexp);
  fns.push_back(sig);
  return fns;
}

// Random panel in spectral coordinates: Gaussian coefficients damped by
// 1/mu_k so the draws live in the form domain. Deterministic in the seed.
inline std::vector<Eigen::VectorXd> random_test_functions(
    const SpectralDecomposition& d, int count, unsigned long long seed) {
  NormalSampler sampler(seed);
  std::vector<Eigen::VectorXd> fns;
  fns.reserve(count);
  for (int r = 0; r < count; ++r) {
    Eigen::VectorXd c(d.n());
    for (int k = 0; k < d.n(); ++k)
      c[k] = sampler() / std::max(d.mu[k], d.spectral_floor());
    fns.push_back(d.synthesize(c));
  }
  return fns;
}

// Smoothing-decay audit: sup over t of t^gamma ||L^gamma e^{-tL} f||_p
// relative to ||f||_p, compared with the scalar envelope
// sup_s s^gamma e^{-s} = (gamma/e)^gamma that caps the p = 2 case exactly.
struct SemigroupDecayReport {
  double gamma = 0.0;
  double p = 2.0;
  double sup_ratio = 0.0;       // worst observed over the panel and t-grid
  double scalar_bound = 0.0;    // (gamma/e)^gamma
  double fitted_constant = 0.0; // sup_ratio / scalar_bound
  double argmax_t = 0.0;
  int argmax_function = -1;
};

inline SemigroupDecayReport semigroup_decay_report(
    const SpectralDecomposition& d, const std::vector<Eigen::VectorXd>& panel,
    double gamma, double p) {
  require(gamma > 0.0, "semigroup_decay_report: gamma must be positive");
  SemigroupDecayReport rep;
  rep.gamma = gamma;
  rep.p = p;
  rep.scalar_bound = std::pow(gamma / std::exp(1.0), gamma);
  const std::vector<double> ts =
      log_grid(1e-6 / d.mu_max(), 100.0 / d.mu_min(), 10);
  for (std::size_t fi = 0; fi < panel.size(); ++fi) {
    const double fnorm = lp_norm(d.grid, panel[fi], p);
    if (fnorm < 1e-280) continue;  // function invisible on this domain
    const Eigen::VectorXd c = d.coefficients(panel[fi]);
    for (double t : ts) {
      Eigen::VectorXd ct(d.n());
      for (int k = 0; k < d.n(); ++k) {
        const double tmu = std::max(t * d.mu[k], 0.0);
        ct[k] = std::pow(tmu, gamma) * std::exp(-tmu) * c[k];
      }
      const double ratio = lp_norm(d.grid, d.synthesize(ct), p) / fnorm;
      if (ratio > rep.sup_ratio) {
        rep.sup_ratio = ratio;
        rep.argmax_t = t;
        rep.argmax_function = static_cast<int>(fi);
      }
    }
  }
  rep.fitted_constant = rep.sup_ratio / rep.scalar_bound;
  return rep;
}

}  // namespace hardyops
