#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "hardyops/common.hpp"
#include "hardyops/coupling.hpp"
#include "hardyops/grid.hpp"
#include "hardyops/numerics.hpp"
#include "hardyops/special.hpp"

// Assembly of the discrete operators on the half-line: the Dirichlet
// Laplacian (alpha = 2), the regional fractional Laplacian (alpha < 2), the
// Hardy potential lambda x^(-alpha), and their sum. Everything is stored in
// form convention: A is symmetric, the diagonal weight matrix W carries the
// quadrature weights, and the generalized problem A v = mu W v defines the
// spectrum. A matrix M in this convention acts on functions through
// (M f)_i = sum_j (M_ij / w_j) w_j f_j, i.e. kernel values are M_ij / w_j.

namespace hardyops {

struct OperatorAssembly {
  Grid grid;
  Eigen::MatrixXd form;          // symmetric form matrix
  double symmetry_defect = 0.0;  // pre-symmetrization, max-norm relative
  bool exploratory = false;      // alpha < 2 with lambda in [lambda_star, 0)
  bool critical = false;         // lambda at the critical coupling
};

// Spacing-weighted Dirichlet Laplacian: the stiffness matrix of piecewise
// linear elements on the knots {0, x_1, ..., x_n, x_max} with zero boundary
// values. Symmetric by construction; dividing by the weights recovers the
// classical 3-point second difference.
inline OperatorAssembly assemble_laplacian_dirichlet(const Grid& grid) {
  const int n = grid.n();
  OperatorAssembly out;
  out.grid = grid;
  out.form = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double left = grid.x[i] - (i == 0 ? 0.0 : grid.x[i - 1]);
    const double right = (i == n - 1 ? grid.x_max : grid.x[i + 1]) - grid.x[i];
    out.form(i, i) = 1.0 / left + 1.0 / right;
    if (i + 1 < n) {
      out.form(i, i + 1) = -1.0 / right;
      out.form(i + 1, i) = -1.0 / right;
    }
  }
  return out;
}

// Normalization constant of the regional fractional Laplacian at d = 1.
inline double fractional_constant(double alpha) {
  require(alpha > 0.0 && alpha < 2.0,
          "fractional_constant: alpha must lie in (0,2)");
  return alpha * gamma_fn(0.5 * (1.0 + alpha)) /
         (std::pow(2.0, 2.0 - alpha) * std::sqrt(M_PI) *
          gamma_fn(1.0 - 0.5 * alpha));
}

namespace detail {

inline int thread_budget() {
  if (const char* env = std::getenv("HARDYOPS_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// integral of r^-alpha over [r1, r2], 0 < r1 < r2 (alpha = 1 logs).
inline double power_primitive(double r1, double r2, double alpha) {
  if (alpha == 1.0) return std::log(r2 / r1);
  return (std::pow(r2, 1.0 - alpha) - std::pow(r1, 1.0 - alpha)) /
         (1.0 - alpha);
}

// Fills one collocation row: coef[j] becomes the coefficient of the nodal
// value u_j in the approximation of the principal-value integral
//   PV int_0^inf (u(x_i) - u(y)) |x_i - y|^(-1-alpha) dy
// with u replaced by its piecewise linear interpolant on the knots
// {0, x_1, ..., x_n, x_max}, pinned to zero at both end knots and on
// (x_max, inf). Interval m spans (knot(m-1), knot(m)); node j carries the
// interpolant value with knot index j+1.
inline void fractional_row(const Grid& grid, double alpha, int i,
                           std::vector<double>& coef) {
  const int n = grid.n();
  coef.assign(n, 0.0);
  const double xi = grid.x[i];

  auto knot = [&](int m) {
    if (m == 0) return 0.0;
    if (m == n + 1) return grid.x_max;
    return grid.x[m - 1];
  };
  // Accumulate onto the interpolant value at knot index m; the pinned zero
  // values at knots 0 and n+1 drop out here.
  auto add = [&](int m, double c) {
    if (m >= 1 && m <= n) coef[m - 1] += c;
  };

  for (int m = 1; m <= n + 1; ++m) {
    if (m == i + 1 || m == i + 2) continue;  // cells adjacent to x_i
    const double a = knot(m - 1), b = knot(m);
    const double dlt = b - a;
    const double tau = (xi - a) / dlt;
    // The interpolant on the cell is v_{m-1} + slope * (y - a); its
    // extrapolation to x_i is (1 - tau) v_{m-1} + tau v_m. P0 and P1 are
    // the cell integrals of r^(-1-alpha) and r^(-alpha) in the distance
    // variable r = |y - x_i|.
    if (a >= xi) {
      const double u1 = a - xi, u2 = b - xi;
      const double p0 = (std::pow(u1, -alpha) - std::pow(u2, -alpha)) / alpha;
      const double p1 = power_primitive(u1, u2, alpha);
      add(i + 1, p0);
      add(m - 1, -(1.0 - tau) * p0 + p1 / dlt);
      add(m, -tau * p0 - p1 / dlt);
    } else {
      const double v1 = xi - b, v2 = xi - a;
      const double p0 = (std::pow(v1, -alpha) - std::pow(v2, -alpha)) / alpha;
      const double p1 = power_primitive(v1, v2, alpha);
      add(i + 1, p0);
      add(m - 1, -(1.0 - tau) * p0 - p1 / dlt);
      add(m, -tau * p0 + p1 / dlt);
    }
  }

  // Adjacent cells. Over the symmetric window r in (0, min(h-, h+)) the
  // linear parts of the two one-sided differences cancel up to the kink
  // (slope_left - slope_right) * r, whose principal value diverges for
  // alpha >= 1. The kink is replaced by the quadratic matching it at the
  // window edge, exactly what a smooth function with the same second
  // difference would contribute; the replacement vanishes on locally
  // linear data and keeps the scheme consistent.
  const double hm = xi - knot(i);
  const double hp = knot(i + 2) - xi;
  const double wmin = std::min(hm, hp), wmax = std::max(hm, hp);
  const double kink = std::pow(wmin, 1.0 - alpha) / (2.0 - alpha);
  add(i + 1, kink * (1.0 / hm + 1.0 / hp));
  add(i, -kink / hm);
  add(i + 2, -kink / hp);
  // Leftover strip (wmin, wmax) of the wider cell, integrated exactly.
  if (wmax > wmin) {
    const double q = power_primitive(wmin, wmax, alpha);
    if (hp > hm) {
      add(i + 1, q / hp);
      add(i + 2, -q / hp);
    } else {
      add(i + 1, q / hm);
      add(i, -q / hm);
    }
  }

  // Everything beyond x_max is zero: closed-form far tail.
  coef[i] += std::pow(grid.x_max - xi, -alpha) / alpha;
}

}  // namespace detail

// Collocation assembly of the regional fractional Laplacian, symmetrized as
// (A + A^T)/2 in form convention. The collocation matrix is asymmetric only
// through boundary-cell and grading effects; the recorded defect is a
// stability diagnostic, and assembly refuses to proceed when it exceeds a
// coarse instability guard (well beyond the few-percent level the scheme
// produces on supported grids).
inline constexpr double kFractionalDefectGuard = 0.25;

inline OperatorAssembly assemble_regional_fractional(const Grid& grid,
                                                     double alpha) {
  require(alpha > 0.0 && alpha < 2.0,
          "assemble_regional_fractional: alpha must lie in (0,2)");
  const int n = grid.n();
  const double c = fractional_constant(alpha);

  Eigen::MatrixXd collocation(n, n);
  const int threads = std::min(detail::thread_budget(), n);
  auto worker = [&](int t) {
    std::vector<double> coef;
    for (int i = t; i < n; i += threads) {
      detail::fractional_row(grid, alpha, i, coef);
      for (int j = 0; j < n; ++j) collocation(i, j) = grid.w[i] * c * coef[j];
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  OperatorAssembly out;
  out.grid = grid;
  const double scale = collocation.cwiseAbs().maxCoeff();
  out.symmetry_defect =
      (collocation - collocation.transpose()).cwiseAbs().maxCoeff() / scale;
  if (out.symmetry_defect > kFractionalDefectGuard)
    throw numeric_error("assemble_regional_fractional: symmetry defect " +
                        format_double(out.symmetry_defect) +
                        " exceeds instability guard");
  out.form = 0.5 * (collocation + collocation.transpose());
  return out;
}

// Dispatch on alpha: Dirichlet Laplacian at alpha = 2, regional fractional
// Laplacian otherwise.
inline OperatorAssembly assemble_kinetic(const Grid& grid, double alpha) {
  require(alpha > 0.0 && alpha <= 2.0,
          "assemble_kinetic: alpha must lie in (0,2]");
  if (alpha == 2.0) return assemble_laplacian_dirichlet(grid);
  return assemble_regional_fractional(grid, alpha);
}

// Diagonal Hardy potential lambda x^(-alpha) sampled at the nodes.
inline std::vector<double> assemble_hardy_potential(const Grid& grid,
                                                    const ModelParams& params) {
  std::vector<double> pot(grid.n());
  for (int i = 0; i < grid.n(); ++i)
    pot[i] = params.lambda * std::pow(grid.x[i], -params.alpha);
  return pot;
}

// Full operator form matrix: kinetic part plus W * diag(potential).
// Couplings below the critical value are rejected; alpha < 2 with negative
// lambda at or above critical is allowed but flagged exploratory, and the
// exact critical coupling is flagged so positivity audits can relax their
// tolerance.
inline OperatorAssembly assemble_L(const Grid& grid, const ModelParams& params) {
  if (params.lambda < params.lstar - 1e-12)
    throw admissibility_error("assemble_L: lambda below critical coupling " +
                              format_double(params.lstar));
  OperatorAssembly out = assemble_kinetic(grid, params.alpha);
  const auto pot = assemble_hardy_potential(grid, params);
  for (int i = 0; i < grid.n(); ++i) out.form(i, i) += grid.w[i] * pot[i];
  out.critical = std::abs(params.lambda - params.lstar) <=
                 1e-12 * std::max(1.0, std::abs(params.lstar));
  out.exploratory = params.alpha < 2.0 && params.lambda < 0.0 && !out.critical;
  return out;
}

// Nodal action u -> W^{-1} A u (pointwise operator values at the nodes).
inline Eigen::VectorXd apply_operator(const OperatorAssembly& assembly,
                                      const Eigen::VectorXd& u) {
  Eigen::VectorXd out = assembly.form * u;
  for (int i = 0; i < assembly.grid.n(); ++i) out[i] /= assembly.grid.w[i];
  return out;
}

}  // namespace hardyops
