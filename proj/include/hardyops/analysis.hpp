#pragma once
// L^p inequality reports built on the spectral calculus: vertical square
// functions with their scalar L^2 identities, the reversed Hardy bound for
// the difference of two couplings, the generalized Hardy weight, Sobolev
// norm equivalence between L_0 and L_lambda, Riesz transform ratios, and
// the Schur bookkeeping (weights, case regions, scalar integrals) that the
// boundedness proofs reduce to.
//
// Everything here is a pure map-reduce over (suite x quadrature); reports
// carry per-member values so callers can compare refinements and assemble
// drift or trend tables without recomputing.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hardyops/common.hpp"
#include "hardyops/coupling.hpp"
#include "hardyops/numerics.hpp"
#include "hardyops/spectral.hpp"

namespace hardyops {

// ---------------------------------------------------------------------------
// Admissible L^p windows.
//
// The norm-equivalence directions and the Hardy weight all restrict p by
// open inequalities on 1/p built from (alpha, sigma, s). The windows are
// stored with exclusive endpoints; 1/0 is taken as +infinity.

enum class RangeDirection { forward, backward, equivalence, hardy };

struct AdmissibleRange {
  RangeDirection direction = RangeDirection::forward;
  double s = 1.0;
  double p_lo = 1.0;  // exclusive lower endpoint
  double p_hi = std::numeric_limits<double>::infinity();  // exclusive upper

  bool contains(double p) const { return p > p_lo && p < p_hi; }
};

namespace detail {

inline double inv_or_inf(double denom) {
  return denom > 0.0 ? 1.0 / denom
                     : std::numeric_limits<double>::infinity();
}

}  // namespace detail

inline AdmissibleRange admissible_range(const ModelParams& mp, double s,
                                        RangeDirection dir) {
  require(s > 0.0, "admissible_range: s must be positive");
  AdmissibleRange r;
  r.direction = dir;
  r.s = s;
  const double as2 = mp.alpha * s / 2.0;
  const double fwd_lo = 1.0 / (1.0 + std::min(mp.sigma, 0.0));
  const double fwd_hi = detail::inv_or_inf(positive_part(as2 - mp.sigma));
  const double bwd_hi = detail::inv_or_inf(
      std::max(as2 - positive_part(mp.alpha - 1.0), -mp.sigma));
  switch (dir) {
    case RangeDirection::forward:
    case RangeDirection::hardy:
      r.p_lo = fwd_lo;
      r.p_hi = fwd_hi;
      break;
    case RangeDirection::backward:
      r.p_lo = 1.0;
      r.p_hi = bwd_hi;
      break;
    case RangeDirection::equivalence:
      r.p_lo = fwd_lo;
      r.p_hi = std::min(fwd_hi, bwd_hi);
      break;
  }
  return r;
}

// True precisely when (alpha*s/2 - sigma)_+ < 1/p < 1 + min(sigma, 0).
// Pure predicate: callable for any positive s and p, including pairs the
// numerical reports refuse to run on.
inline bool hardy_weight_admissible(const ModelParams& mp, double s,
                                    double p) {
  const double inv = 1.0 / p;
  return positive_part(mp.alpha * s / 2.0 - mp.sigma) < inv &&
         inv < 1.0 + std::min(mp.sigma, 0.0);
}

// Throws with the violated inequality spelled out. The backward cap only
// binds when its right-hand side is positive.
inline void check_p_admissible(const ModelParams& mp, double s, double p,
                               RangeDirection dir) {
  if (!(p > 1.0))
    throw admissibility_error("L^p window: p must exceed 1");
  const double inv = 1.0 / p;
  const double as2 = mp.alpha * s / 2.0;
  const bool fwd = dir != RangeDirection::backward;
  const bool bwd =
      dir == RangeDirection::backward || dir == RangeDirection::equivalence;
  if (fwd) {
    if (!(inv < 1.0 + std::min(mp.sigma, 0.0)))
      throw admissibility_error(
          "L^p window: violated 1/p < 1 + min(sigma, 0) (p too small for "
          "the free-to-coupled direction)");
    if (!(inv > positive_part(as2 - mp.sigma)))
      throw admissibility_error(
          "L^p window: violated (alpha*s/2 - sigma)_+ < 1/p (p too large "
          "for the free-to-coupled direction)");
  }
  if (bwd) {
    const double cap = std::max(as2 - positive_part(mp.alpha - 1.0),
                                -mp.sigma);
    if (cap > 0.0 && !(inv > cap))
      throw admissibility_error(
          "L^p window: violated 1/p > max{alpha*s/2 - (alpha-1)_+, -sigma} "
          "(p too large for the coupled-to-free direction)");
  }
}

// ---------------------------------------------------------------------------
// Time quadrature for the t-integrals.
//
// Log-uniform nodes with trapezoid weights in log t, so sum(weight * g(t))
// approximates the integral of g against dt/t. The coverage check ties the
// endpoints to the spectral extremes: the integrand of every square
// function dies like e^{-2 t mu}, so [0.01/mu_max, 100/mu_min] captures
// all but an e^{-200} tail of every mode.

struct TimeQuadrature {
  std::vector<double> t;
  std::vector<double> weight;

  int size() const { return static_cast<int>(t.size()); }
};

inline TimeQuadrature make_time_quadrature(double t_lo, double t_hi,
                                           int points_per_decade = 40) {
  require(t_lo > 0.0 && t_hi > t_lo,
          "time quadrature: need 0 < t_lo < t_hi");
  require(points_per_decade >= 1,
          "time quadrature: need at least one point per decade");
  TimeQuadrature q;
  q.t = log_grid(t_lo, t_hi, points_per_decade);
  const int m = static_cast<int>(q.t.size());
  q.weight.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    const double left = i > 0 ? std::log(q.t[i] / q.t[i - 1]) : 0.0;
    const double right = i + 1 < m ? std::log(q.t[i + 1] / q.t[i]) : 0.0;
    q.weight[i] = 0.5 * (left + right);
  }
  return q;
}

// Positive lower spectral edge; critical couplings can park an eigenvalue
// within roundoff of zero, and the quadrature window must stay finite.
inline double positive_mu_min(const SpectralDecomposition& d) {
  return std::max(d.mu_min(), d.spectral_floor());
}

inline TimeQuadrature default_time_quadrature(const SpectralDecomposition& d,
                                              int points_per_decade = 40) {
  return make_time_quadrature(1e-6 / d.mu_max(), 100.0 / positive_mu_min(d),
                              points_per_decade);
}

// Window wide enough for both operators of a difference computation.
inline TimeQuadrature joint_time_quadrature(const SpectralDecomposition& a,
                                            const SpectralDecomposition& b,
                                            int points_per_decade = 40) {
  const double lo = 1e-6 / std::max(a.mu_max(), b.mu_max());
  const double hi =
      100.0 / std::min(positive_mu_min(a), positive_mu_min(b));
  return make_time_quadrature(lo, hi, points_per_decade);
}

inline void check_spectral_coverage(const SpectralDecomposition& d,
                                    const TimeQuadrature& quad) {
  require(quad.size() >= 2, "time quadrature: need at least two nodes");
  const double need_lo = 0.01 / d.mu_max();
  const double need_hi = 100.0 / positive_mu_min(d);
  require(quad.t.front() <= need_lo * (1.0 + 1e-9),
          "time quadrature starts too late for the top of the spectrum");
  require(quad.t.back() >= need_hi * (1.0 - 1e-9),
          "time quadrature ends too early for the bottom of the spectrum");
}

namespace detail {

// Sum over quadrature nodes of scale(t) * frame(t).^2, threaded over node
// chunks with per-thread accumulators. frame(t) must be pure.
inline Eigen::MatrixXd accumulate_square(
    const TimeQuadrature& quad, int rows, int cols,
    const std::function<Eigen::MatrixXd(double)>& frame,
    const std::function<double(double)>& scale) {
  const int m = quad.size();
  const int threads = std::max(1, std::min(thread_budget(), m / 8));
  std::vector<Eigen::MatrixXd> partial(
      threads, Eigen::MatrixXd::Zero(rows, cols));
  auto worker = [&](int id) {
    for (int i = id; i < m; i += threads) {
      const double t = quad.t[i];
      const Eigen::MatrixXd g = frame(t);
      partial[id].noalias() += (quad.weight[i] * scale(t)) * g.cwiseAbs2();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& th : pool) th.join();
  }
  for (int id = 1; id < threads; ++id) partial[0] += partial[id];
  return partial[0];
}

inline Eigen::MatrixXd coefficient_matrix(
    const SpectralDecomposition& d, const std::vector<Eigen::VectorXd>& fs) {
  Eigen::MatrixXd coef(d.n(), static_cast<int>(fs.size()));
  for (std::size_t j = 0; j < fs.size(); ++j) {
    require(fs[j].size() == d.n(),
            "suite function does not live on the decomposition grid");
    coef.col(static_cast<int>(j)) = d.coefficients(fs[j]);
  }
  return coef;
}

inline Eigen::VectorXd ptk_profile(const Eigen::VectorXd& mu, double t,
                                   double gamma) {
  Eigen::VectorXd phi(mu.size());
  for (int k = 0; k < mu.size(); ++k) {
    const double tmu = std::max(t * mu[k], 0.0);
    phi[k] = std::pow(tmu, gamma) * std::exp(-tmu);
  }
  return phi;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Square functions.
//
// S_gamma f = (int_0^inf |(tL)^gamma e^{-tL} f|^2 dt/t)^{1/2} and its
// weighted cousin with an extra t^{-s} under the integral (gamma fixed
// at 1 there). Columns of the result line up with the suite.

inline Eigen::MatrixXd square_function_matrix(
    const SpectralDecomposition& d, const std::vector<Eigen::VectorXd>& fs,
    double gamma, const TimeQuadrature& quad,
    double time_weight_power = 0.0) {
  require(gamma > 0.0, "square function: gamma must be positive");
  check_spectral_coverage(d, quad);
  const Eigen::MatrixXd coef = detail::coefficient_matrix(d, fs);
  const auto frame = [&](double t) -> Eigen::MatrixXd {
    return d.modes *
           (detail::ptk_profile(d.mu, t, gamma).asDiagonal() * coef);
  };
  const auto scale = [time_weight_power](double t) {
    return std::pow(t, time_weight_power);
  };
  return detail::accumulate_square(quad, d.n(),
                                   static_cast<int>(fs.size()), frame, scale)
      .cwiseSqrt();
}

inline Eigen::VectorXd square_function(const SpectralDecomposition& d,
                                       const Eigen::VectorXd& f, double gamma,
                                       const TimeQuadrature& quad) {
  return square_function_matrix(d, {f}, gamma, quad).col(0);
}

inline Eigen::VectorXd weighted_square_function(const SpectralDecomposition& d,
                                                const Eigen::VectorXd& f,
                                                double s,
                                                const TimeQuadrature& quad) {
  require(s > 0.0 && s < 2.0,
          "weighted square function: s must lie in (0, 2)");
  return square_function_matrix(d, {f}, 1.0, quad, -s).col(0);
}

// Scalar constants behind the L^2 identities:
//   int_0^inf (t mu)^{2 gamma} e^{-2 t mu} dt/t        = Gamma(2 gamma)/4^gamma
//   int_0^inf t^{-s} (t mu)^2 e^{-2 t mu} dt/t = mu^s * Gamma(2-s) 2^{s-2}
inline double square_function_constant(double gamma) {
  require(gamma > 0.0, "square_function_constant: gamma must be positive");
  return gamma_fn(2.0 * gamma) / std::pow(4.0, gamma);
}

inline double weighted_square_function_constant(double s) {
  require(s > 0.0 && s < 2.0,
          "weighted_square_function_constant: s must lie in (0, 2)");
  return gamma_fn(2.0 - s) * std::pow(2.0, s - 2.0);
}

// ---------------------------------------------------------------------------
// Suite ratio reports.

struct SuiteRatioReport {
  std::vector<double> values;  // per suite member; NaN where skipped
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = -std::numeric_limits<double>::infinity();
  int argmin = -1;
  int argmax = -1;
  int samples = 0;

  void resize(int count) {
    values.assign(count, std::numeric_limits<double>::quiet_NaN());
  }

  void add(int index, double value) {
    values[index] = value;
    ++samples;
    if (value < min_ratio) {
      min_ratio = value;
      argmin = index;
    }
    if (value > max_ratio) {
      max_ratio = value;
      argmax = index;
    }
  }

  bool finite() const {
    return samples > 0 && std::isfinite(max_ratio) && max_ratio >= 0.0;
  }
};

// Relative movement of the suite sup across one refinement.
inline double report_drift(double coarse_sup, double fine_sup) {
  const double scale = std::max(std::abs(coarse_sup), std::abs(fine_sup));
  if (scale == 0.0) return 0.0;
  return std::abs(fine_sup - coarse_sup) / scale;
}

// Verdict for a probe at an inadmissible exponent pair: a discrete sup can
// only ever hint at unboundedness, so slow growth stays INCONCLUSIVE and
// nothing here returns FAIL.
inline std::string divergence_verdict(double coarse_sup, double fine_sup,
                                      double growth_mark = 1.25) {
  if (!(coarse_sup > 0.0) || !std::isfinite(coarse_sup) ||
      !std::isfinite(fine_sup))
    return "INCONCLUSIVE";
  return fine_sup >= growth_mark * coarse_sup ? "EXPECTED-DIVERGENCE"
                                              : "INCONCLUSIVE";
}

namespace detail {

constexpr double kNormFloor = 1e-280;  // below this a ratio means nothing

}  // namespace detail

// ---------------------------------------------------------------------------
// Square-function equivalence: ||S_gamma f||_p / ||f||_p across a suite,
// with the duality constant c(gamma) = Gamma(2 gamma)/4^gamma reported
// alongside. At p = 2 the ratios collapse onto sqrt(c(gamma)).

struct SfEquivalenceReport {
  SuiteRatioReport ratios;
  double duality_constant = 0.0;
};

inline SfEquivalenceReport sf_equivalence_report(
    const SpectralDecomposition& d, double p, double gamma,
    const std::vector<Eigen::VectorXd>& suite, const TimeQuadrature& quad) {
  require(p > 1.0, "sf_equivalence_report: p must lie in (1, inf)");
  SfEquivalenceReport rep;
  rep.duality_constant = square_function_constant(gamma);
  rep.ratios.resize(static_cast<int>(suite.size()));
  const Eigen::MatrixXd s = square_function_matrix(d, suite, gamma, quad);
  for (std::size_t j = 0; j < suite.size(); ++j) {
    const double fn = lp_norm(d.grid, suite[j], p);
    if (fn < detail::kNormFloor) continue;
    rep.ratios.add(static_cast<int>(j),
                   lp_norm(d.grid, s.col(static_cast<int>(j)), p) / fn);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Reversed Hardy: the weighted square function of the semigroup difference
// controls the Hardy-weighted norm from below,
//   || (int t^{-s} |(tL_l e^{-tL_l} - tL_0 e^{-tL_0}) f|^2 dt/t)^{1/2} ||_p
//     <~ || x^{-alpha s/2} f ||_p.

inline void require_shared_grid(const SpectralDecomposition& a,
                                const SpectralDecomposition& b,
                                const char* what) {
  require(a.n() == b.n(), std::string(what) +
                              ": decompositions live on different grids");
  for (int i = 0; i < a.n(); ++i)
    require(a.grid.x[i] == b.grid.x[i],
            std::string(what) + ": decompositions live on different grids");
  require(a.params.alpha == b.params.alpha,
          std::string(what) + ": decompositions mix orders alpha");
}

inline Eigen::MatrixXd difference_square_function_matrix(
    const SpectralDecomposition& d0, const SpectralDecomposition& dl,
    const std::vector<Eigen::VectorXd>& fs, double s,
    const TimeQuadrature& quad) {
  require(s > 0.0 && s < 2.0,
          "difference square function: s must lie in (0, 2)");
  require_shared_grid(d0, dl, "difference square function");
  check_spectral_coverage(d0, quad);
  check_spectral_coverage(dl, quad);
  const Eigen::MatrixXd coef0 = detail::coefficient_matrix(d0, fs);
  const Eigen::MatrixXd coefl = detail::coefficient_matrix(dl, fs);
  const auto frame = [&](double t) -> Eigen::MatrixXd {
    Eigen::MatrixXd g =
        dl.modes * (detail::ptk_profile(dl.mu, t, 1.0).asDiagonal() * coefl);
    g.noalias() -=
        d0.modes * (detail::ptk_profile(d0.mu, t, 1.0).asDiagonal() * coef0);
    return g;
  };
  const auto scale = [s](double t) { return std::pow(t, -s); };
  return detail::accumulate_square(quad, d0.n(),
                                   static_cast<int>(fs.size()), frame, scale)
      .cwiseSqrt();
}

struct ReversedHardyReport {
  SuiteRatioReport ratios;   // lhs / rhs per member
  std::vector<double> lhs;   // ||difference square function||_p
  std::vector<double> rhs;   // ||x^{-alpha s/2} f||_p
};

inline ReversedHardyReport reversed_hardy_report(
    const SpectralDecomposition& d0, const SpectralDecomposition& dl,
    double p, double s, const std::vector<Eigen::VectorXd>& suite,
    const TimeQuadrature& quad) {
  require_shared_grid(d0, dl, "reversed Hardy");
  require(d0.params.lambda == 0.0,
          "reversed Hardy: first decomposition must carry lambda = 0");
  const double r = dl.params.r();
  const double p_lo = 1.0 / (1.0 - r);
  const double p_hi = detail::inv_or_inf(r);
  if (!(p > p_lo && p < p_hi))
    throw admissibility_error(
        "reversed Hardy: p outside (1/(1-r), 1/r) for r = -min{0, q}");
  const double as2 = dl.params.alpha * s / 2.0;
  if (d0.grid.spec.kind == GridSpec::Kind::uniform && as2 >= 1.0 / p)
    throw std::domain_error(
        "reversed Hardy: weight x^{-alpha s/2} with alpha*s/2 >= 1/p needs "
        "a boundary-refined grid");

  ReversedHardyReport rep;
  const int count = static_cast<int>(suite.size());
  rep.ratios.resize(count);
  rep.lhs.assign(count, std::numeric_limits<double>::quiet_NaN());
  rep.rhs.assign(count, std::numeric_limits<double>::quiet_NaN());
  const Eigen::MatrixXd diff =
      difference_square_function_matrix(d0, dl, suite, s, quad);
  for (int j = 0; j < count; ++j) {
    Eigen::VectorXd weighted(d0.n());
    for (int i = 0; i < d0.n(); ++i)
      weighted[i] = suite[j][i] * std::pow(d0.grid.x[i], -as2);
    rep.lhs[j] = lp_norm(d0.grid, diff.col(j), p);
    rep.rhs[j] = lp_norm(d0.grid, weighted, p);
    if (rep.rhs[j] < detail::kNormFloor) continue;
    rep.ratios.add(j, rep.lhs[j] / rep.rhs[j]);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Generalized Hardy: sup over a suite of ||x^{-alpha s/2} L^{-s/2} f||_p
// relative to ||f||_p, together with the sharp admissibility verdict.

struct GeneralizedHardyReport {
  SuiteRatioReport ratios;
  bool admissible = false;
};

namespace detail {

inline std::function<double(double)> power_profile(
    const SpectralDecomposition& d, double exponent) {
  const double flr = d.spectral_floor();
  return [exponent, flr](double mu) {
    if (exponent >= 0.0) return std::pow(std::max(mu, 0.0), exponent);
    return std::pow(std::max(mu, flr), exponent);
  };
}

}  // namespace detail

inline GeneralizedHardyReport generalized_hardy_report(
    const SpectralDecomposition& d, double p, double s,
    const std::vector<Eigen::VectorXd>& suite) {
  const ModelParams& mp = d.params;
  require(s > 0.0 && s <= std::min(2.0, 2.0 * mp.d / mp.alpha),
          "generalized Hardy: s outside (0, min{2, 2d/alpha}]");
  require(mp.alpha * s / 2.0 < 1.0 + 2.0 * mp.sigma,
          "generalized Hardy: needs alpha*s/2 < 1 + 2*sigma");
  require(p > 1.0, "generalized Hardy: p must lie in (1, inf)");

  GeneralizedHardyReport rep;
  rep.admissible = hardy_weight_admissible(mp, s, p);
  rep.ratios.resize(static_cast<int>(suite.size()));
  const auto inv_power = detail::power_profile(d, -s / 2.0);
  const double as2 = mp.alpha * s / 2.0;
  for (std::size_t j = 0; j < suite.size(); ++j) {
    const double fn = lp_norm(d.grid, suite[j], p);
    if (fn < detail::kNormFloor) continue;
    Eigen::VectorXd g = apply_spectral(d, inv_power, suite[j]);
    for (int i = 0; i < d.n(); ++i) g[i] *= std::pow(d.grid.x[i], -as2);
    rep.ratios.add(static_cast<int>(j), lp_norm(d.grid, g, p) / fn);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Sobolev norm equivalence between the free and coupled operators:
// forward compares ||L_0^{s/2} u||_p against ||L_l^{s/2} u||_p, backward
// the reciprocal. Both directions are computed in one pass; callers chase
// p toward the window endpoints for the stress tables.

struct NormEquivalenceReport {
  SuiteRatioReport forward;
  SuiteRatioReport backward;
  AdmissibleRange range;  // equivalence window at the requested s
};

inline NormEquivalenceReport norm_equivalence_report(
    const SpectralDecomposition& d0, const SpectralDecomposition& dl,
    double p, double s, const std::vector<Eigen::VectorXd>& suite,
    RangeDirection dir = RangeDirection::equivalence) {
  require_shared_grid(d0, dl, "norm equivalence");
  require(d0.params.lambda == 0.0,
          "norm equivalence: first decomposition must carry lambda = 0");
  require(s > 0.0 && s <= 2.0, "norm equivalence: s must lie in (0, 2]");
  check_p_admissible(dl.params, s, p, dir);

  NormEquivalenceReport rep;
  rep.range = admissible_range(dl.params, s, dir);
  const int count = static_cast<int>(suite.size());
  rep.forward.resize(count);
  rep.backward.resize(count);
  const auto pow0 = detail::power_profile(d0, s / 2.0);
  const auto powl = detail::power_profile(dl, s / 2.0);
  for (int j = 0; j < count; ++j) {
    const double a = lp_norm(d0.grid, apply_spectral(d0, pow0, suite[j]), p);
    const double b = lp_norm(dl.grid, apply_spectral(dl, powl, suite[j]), p);
    if (a < detail::kNormFloor || b < detail::kNormFloor) continue;
    rep.forward.add(j, a / b);
    rep.backward.add(j, b / a);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Riesz transform ratios ||L_0^{s/2} L_l^{-s/2} f||_p / ||f||_p. The window
// is the forward window sharpened by s < 2(1/p + sigma)/alpha; the upper
// endpoint of the s range is kept (closed) so the workhorse pair s = 1,
// alpha = 2 stays in scope on the half line.

inline SuiteRatioReport riesz_transform_report(
    const SpectralDecomposition& d0, const SpectralDecomposition& dl,
    double p, double s, const std::vector<Eigen::VectorXd>& suite) {
  require_shared_grid(d0, dl, "Riesz transform");
  require(d0.params.lambda == 0.0,
          "Riesz transform: first decomposition must carry lambda = 0");
  const ModelParams& mp = dl.params;
  require(s > 0.0 && s <= std::min(2.0, 2.0 * mp.d / mp.alpha),
          "Riesz transform: s outside (0, min{2, 2d/alpha}]");
  check_p_admissible(mp, s, p, RangeDirection::forward);
  if (!(s < 2.0 * (1.0 / p + mp.sigma) / mp.alpha))
    throw admissibility_error(
        "Riesz transform: violated s < 2(1/p + sigma)/alpha");

  SuiteRatioReport rep;
  rep.resize(static_cast<int>(suite.size()));
  const auto inv_powl = detail::power_profile(dl, -s / 2.0);
  const auto pow0 = detail::power_profile(d0, s / 2.0);
  for (std::size_t j = 0; j < suite.size(); ++j) {
    const double fn = lp_norm(d0.grid, suite[j], p);
    if (fn < detail::kNormFloor) continue;
    const Eigen::VectorXd g = apply_spectral(dl, inv_powl, suite[j]);
    const Eigen::VectorXd h = apply_spectral(d0, pow0, g);
    rep.add(static_cast<int>(j), lp_norm(d0.grid, h, p) / fn);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Schur machinery.
//
// The marginal kernel is the one-variable reduction of the difference
// bound's operator after integrating out the flat directions; its weighted
// row integral collapses to a scalar integral in t = y/x that the proofs
// bound by hand. Both live here so the suites can replay the reduction.

inline double schur_marginal_kernel(double x, double y, double r,
                                    double alpha) {
  require(x > 0.0 && y > 0.0, "schur_marginal_kernel: x, y must be positive");
  require(r >= 0.0 && r < 0.5,
          "schur_marginal_kernel: r must lie in [0, 1/2)");
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  return std::pow(hi / std::sqrt(x * y), 2.0 * r) * std::pow(hi, alpha) /
         std::pow(std::max(std::abs(x - y), lo), 1.0 + alpha);
}

inline double schur_scalar_integrand(double t, double beta, double p,
                                     double r, double alpha) {
  return std::pow(t, -beta / p - r) *
         std::pow(std::max(1.0, t), alpha + 2.0 * r) /
         std::pow(std::max(std::abs(1.0 - t), std::min(1.0, t)), 1.0 + alpha);
}

// int_0^inf t^{-beta/p - r} (1 v t)^{alpha + 2r} / (|1-t| v (1 ^ t))^{1+alpha} dt.
// Convergence needs p r < beta < p (1 - r); the dual Schur factor is the
// same integral at p', so callers pick beta inside both windows.
inline double schur_scalar_integral(double beta, double p, double r,
                                    double alpha, double tol = 2.5e-9) {
  require(p > 1.0, "schur_scalar_integral: p must exceed 1");
  require(r >= 0.0 && r < 1.0,
          "schur_scalar_integral: r must lie in [0, 1)");
  require(alpha > 0.0 && alpha <= 2.0,
          "schur_scalar_integral: alpha must lie in (0, 2]");
  const double rate0 = 1.0 - beta / p - r;  // log-scale decay toward t = 0
  const double rate_inf = beta / p - r;     // and toward t = infinity
  if (!(rate0 > 0.0))
    throw std::domain_error(
        "schur_scalar_integral diverges: requires beta < p(1 - r)");
  if (!(rate_inf > 0.0))
    throw std::domain_error(
        "schur_scalar_integral diverges: requires beta > p r");
  // Integrate in v = ln t, where both tails decay exponentially; the
  // Jacobian t folds into the integrand. 42/rate puts the cut at e^{-42}.
  const auto g = [=](double v) {
    const double t = std::exp(v);
    return t * schur_scalar_integrand(t, beta, p, r, alpha);
  };
  const double v_lo = -42.0 / rate0 - 3.0;
  const double v_hi = 42.0 / rate_inf + 3.0;
  const double knots[] = {v_lo, std::log(0.5), 0.0, std::log(2.0), v_hi};
  double total = 0.0;
  for (int k = 0; k + 1 < 5; ++k)
    total += integrate_adaptive(g, knots[k], knots[k + 1], tol, 48);
  return total;
}

// Weight exponents for the case-region Schur tests: midpoints of
//   p(alpha s/2 - sigma) < beta < min{p'(1 + sigma - alpha s/2), p(1 + sigma)}
//   sigma p'             < gamma < p(1 + sigma)
inline std::pair<double, double> weight_exponent_select(double p, double s,
                                                        double sigma,
                                                        double alpha) {
  require(p > 1.0, "weight_exponent_select: p must exceed 1");
  const double pc = p / (p - 1.0);
  const double as2 = alpha * s / 2.0;
  const double beta_lo = p * (as2 - sigma);
  const double beta_hi =
      std::min(pc * (1.0 + sigma - as2), p * (1.0 + sigma));
  if (!(beta_lo < beta_hi))
    throw admissibility_error(
        "weight_exponent_select: empty beta window, violated "
        "p(alpha*s/2 - sigma) < min{p'(1 + sigma - alpha*s/2), "
        "p(1 + sigma)}");
  const double gamma_lo = sigma * pc;
  const double gamma_hi = p * (1.0 + sigma);
  if (!(gamma_lo < gamma_hi))
    throw admissibility_error(
        "weight_exponent_select: empty gamma window, violated "
        "sigma*p' < p(1 + sigma)");
  return {0.5 * (beta_lo + beta_hi), 0.5 * (gamma_lo + gamma_hi)};
}

// Case regions of the generalized Hardy proof, in terms of dist = |x - y|:
//   1: dist <= 4 (x ^ y)        (near diagonal, no weight)
//   2: 4x <= dist <= 4y         (x near the boundary, weight (x/dist)^beta)
//   3: 4y <= dist <= 4x         (y near the boundary, weight (dist/y)^gamma)
//   4: 4 (x v y) <= dist        (far field, weight (x/y)^beta)
inline bool schur_case_contains(int case_id, double x, double y,
                                double dist) {
  switch (case_id) {
    case 1:
      return dist <= 4.0 * std::min(x, y);
    case 2:
      return 4.0 * x <= dist && dist <= 4.0 * y;
    case 3:
      return 4.0 * y <= dist && dist <= 4.0 * x;
    case 4:
      return dist >= 4.0 * std::max(x, y);
    default:
      throw std::domain_error("schur case id must lie in 1..4");
  }
}

struct MaskedSchurSums {
  double row_sup = 0.0;  // sup_x sum_y w(x,y)^{1/p}  K(x,y) cell_y
  double col_sup = 0.0;  // sup_y sum_x w(x,y)^{-1/p'} K(x,y) cell_x
  int argmax_row = -1;
  int argmax_col = -1;
  long samples = 0;
  bool empty_region() const { return samples == 0; }
};

inline MaskedSchurSums masked_schur_sums(
    const Grid& grid, const Eigen::MatrixXd& kernel, int case_id, double p,
    const std::function<double(double, double, double)>& weight) {
  require(p > 1.0, "masked_schur_sums: p must exceed 1");
  const int n = grid.n();
  require(kernel.rows() == n && kernel.cols() == n,
          "masked_schur_sums: kernel does not match the grid");
  const double pc = p / (p - 1.0);
  MaskedSchurSums out;
  std::vector<double> col_acc(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x = grid.x[i];
    double row_acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double y = grid.x[j];
      const double dist = std::abs(x - y);
      if (!schur_case_contains(case_id, x, y, dist)) continue;
      ++out.samples;
      const double w = weight(x, y, dist);
      const double k = std::abs(kernel(i, j));
      row_acc += std::pow(w, 1.0 / p) * k * grid.w[j];
      col_acc[j] += std::pow(w, -1.0 / pc) * k * grid.w[i];
    }
    if (row_acc > out.row_sup) {
      out.row_sup = row_acc;
      out.argmax_row = i;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (col_acc[j] > out.col_sup) {
      out.col_sup = col_acc[j];
      out.argmax_col = j;
    }
  }
  return out;
}

struct SchurCaseReport {
  int case_id = 0;
  double beta = 0.0;
  double gamma = 0.0;
  MaskedSchurSums sums;
};

// Discrete replay of one case of the generalized Hardy Schur test, with
// K(x,y) = x^{-alpha s/2} | L^{-s/2}(x,y) | from the spectral Riesz kernel
// and the case's own weight. Half-line evaluation only.
inline SchurCaseReport schur_case_report(const SpectralDecomposition& d,
                                         double p, double s, int case_id) {
  const ModelParams& mp = d.params;
  require(mp.d == 1, "schur_case_report: case sums are half-line only");
  require(s > 0.0 && s <= 2.0, "schur_case_report: s must lie in (0, 2]");
  SchurCaseReport rep;
  rep.case_id = case_id;
  std::tie(rep.beta, rep.gamma) =
      weight_exponent_select(p, s, mp.sigma, mp.alpha);
  const double as2 = mp.alpha * s / 2.0;
  Eigen::MatrixXd kernel = power_kernel(d, -s / 2.0);
  for (int i = 0; i < d.n(); ++i)
    kernel.row(i) *= std::pow(d.grid.x[i], -as2);
  const double beta = rep.beta;
  const double gamma = rep.gamma;
  std::function<double(double, double, double)> weight;
  switch (case_id) {
    case 1:
      weight = [](double, double, double) { return 1.0; };
      break;
    case 2:
      weight = [beta](double x, double, double dist) {
        return std::pow(x / dist, beta);
      };
      break;
    case 3:
      weight = [gamma](double, double y, double dist) {
        return std::pow(dist / y, gamma);
      };
      break;
    case 4:
      weight = [beta](double x, double y, double) {
        return std::pow(x / y, beta);
      };
      break;
    default:
      throw std::domain_error("schur case id must lie in 1..4");
  }
  rep.sums = masked_schur_sums(d.grid, kernel, case_id, p, weight);
  return rep;
}

}  // namespace hardyops
