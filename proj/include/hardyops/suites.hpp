#pragma once
// Named verification suites over the whole stack: each runner assembles the
// operators it needs, replays one family of claims at desk scale, and emits
// a CheckResult per claim instance. Model parameters, grid sizes, and
// tolerances for the batteries are pinned here, not taken from the run
// configuration, so two runs with the same config byte-match and a passing
// report means the same thing on every machine. The config chooses which
// suite runs, seeds the random panels, and names the model for the
// config-driven spot checks; everything else is deliberately hard-coded.

#include <cstdio>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hardyops/analysis.hpp"
#include "hardyops/envelopes.hpp"
#include "hardyops/oracles.hpp"
#include "hardyops/report.hpp"

namespace hardyops {

// ---------------------------------------------------------------------------
// Run configuration

struct RunConfig {
  double alpha = 2.0;
  double lambda = 2.0;
  int n = 500;
  double x_max = 40.0;
  std::string grading = "geometric";  // "uniform" or "geometric"
  double grading_ratio = 1.05;
  double boundary_fraction = 0.025;
  unsigned long long seed = 20250816ull;
  bool conjecture_mode = false;
  std::string suite = "all";
};

inline GridSpec grid_spec_of(const RunConfig& cfg) {
  if (cfg.grading == "uniform") return GridSpec::uniform();
  if (cfg.grading == "geometric")
    return GridSpec::geometric(cfg.grading_ratio, cfg.boundary_fraction);
  throw std::invalid_argument("grading must be 'uniform' or 'geometric', got '" +
                              cfg.grading + "'");
}

// Canonical wire form of the configuration. The digest hashes this dump, so
// field order is fixed and nothing locale-dependent may leak in.
inline nlohmann::ordered_json canonical_config(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["alpha"] = cfg.alpha;
  j["lambda"] = cfg.lambda;
  j["n"] = cfg.n;
  j["x_max"] = cfg.x_max;
  j["grading"] = cfg.grading;
  j["grading_ratio"] = cfg.grading_ratio;
  j["boundary_fraction"] = cfg.boundary_fraction;
  j["seed"] = cfg.seed;
  j["conjecture_mode"] = cfg.conjecture_mode;
  j["suite"] = cfg.suite;
  return j;
}

inline std::string config_digest(const RunConfig& cfg) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a64(canonical_config(cfg).dump())));
  return std::string(buf);
}

// ---------------------------------------------------------------------------
// Decomposition cache

// Eigendecompositions are the expensive step (dense solve plus, below
// alpha = 2, the quadrature-heavy assembly), and the suites revisit the
// same handful of models at two resolutions. Keyed by everything that
// determines the operator; values never move once built.
class DecompCache {
 public:
  const SpectralDecomposition& get(double alpha, double lambda, int n,
                                   double x_max, const GridSpec& spec) {
    const std::string key = format_double(alpha) + "|" + format_double(lambda) +
                            "|" + std::to_string(n) + "|" +
                            format_double(x_max) + "|" + spec.describe();
    auto it = store_.find(key);
    if (it == store_.end()) {
      const Grid grid = make_grid(n, x_max, spec);
      const ModelParams params = make_params(alpha, lambda);
      auto dec = std::make_unique<SpectralDecomposition>(
          decompose(assemble_L(grid, params), params));
      it = store_.emplace(key, std::move(dec)).first;
    }
    return *it->second;
  }

 private:
  std::map<std::string, std::unique_ptr<SpectralDecomposition>> store_;
};

// ---------------------------------------------------------------------------
// Battery constants shared by the pinned suites

namespace battery {

// Base resolution for every refinement-drift comparison; the fine pass
// always doubles it. 500 cells over [0, 40] with a geometric boundary
// layer resolves the weights x^{-alpha s/2} the analysis suites probe.
inline constexpr int kCoarseN = 500;
inline constexpr int kFineN = 1000;
inline constexpr double kXMax = 40.0;

inline GridSpec grading() { return GridSpec::geometric(1.05, 0.025); }

struct Model {
  double alpha;
  double lambda;
};

// The three standing models: the workhorse positive coupling, a negative
// coupling above critical, and a genuinely nonlocal one.
inline std::vector<Model> ratio_models() {
  return {{2.0, 2.0}, {2.0, -3.0 / 16.0}, {1.5, 1.0}};
}

// (p, s) tuples every ratio family is exercised on.
inline std::vector<std::pair<double, double>> ps_tuples() {
  return {{2.0, 1.0}, {1.5, 0.5}, {3.0, 1.0}};
}

}  // namespace battery

namespace detail {

inline std::string num_tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  std::string s(buf);
  for (char& c : s)
    if (c == '-') c = 'm';
  return s;
}

inline std::string model_tag(double alpha, double lambda) {
  return "a" + num_tag(alpha) + "-l" + num_tag(lambda);
}

inline std::string ps_tag(double p, double s) {
  return "p" + num_tag(p) + "-s" + num_tag(s);
}

// Panel for refinement-drift comparisons: only the fixed analytic profiles,
// which mean the same function at every resolution. The random spectral
// draws are excluded on purpose; they change with the grid, which would
// pollute a coarse-vs-fine sup with panel noise.
inline std::vector<Eigen::VectorXd> drift_panel(
    const SpectralDecomposition& d) {
  return standard_test_functions(d.grid, d.params);
}

// Panel for fixed-resolution identity checks, where wider coverage beats
// resolution stability: analytic profiles plus seeded spectral draws.
inline std::vector<Eigen::VectorXd> full_panel(const SpectralDecomposition& d,
                                               unsigned long long seed) {
  auto fns = standard_test_functions(d.grid, d.params);
  auto extra = random_test_functions(d, 8, seed);
  fns.insert(fns.end(), extra.begin(), extra.end());
  return fns;
}

inline void push_ratio_metrics(std::vector<std::pair<std::string, double>>& m,
                               const SuiteRatioReport& rep) {
  m.emplace_back("min_ratio", rep.min_ratio);
  m.emplace_back("max_ratio", rep.max_ratio);
  m.emplace_back("samples", static_cast<double>(rep.samples));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coupling suite: the scalar dictionary between lambda and sigma

inline SuiteResult run_coupling_suite(const RunConfig& cfg, DecompCache&) {
  (void)cfg;
  SuiteResult out;
  out.suite = "coupling";

  for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
    const double lstar = lambda_star(alpha);
    double max_residual = 0.0;
    double max_closed_form = 0.0;
    for (int k = 0; k <= 200; ++k) {
      const double lambda = lstar + 50.0 * k / 200.0;
      const double sigma = sigma_from_lambda(lambda, alpha);
      const double residual = std::abs(c_of_sigma(sigma, alpha) - lambda) /
                              std::max(1.0, std::abs(lambda));
      max_residual = std::max(max_residual, residual);
      if (alpha == 2.0) {
        const double closed = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * lambda));
        max_closed_form = std::max(max_closed_form, std::abs(sigma - closed));
      }
    }
    out.checks.push_back(make_check(
        "invert-" + detail::num_tag(alpha), max_residual <= 1e-10,
        "coupling-branch",
        {{"max_residual", max_residual}, {"lambda_star", lstar}}));
    if (alpha == 2.0)
      out.checks.push_back(make_check(
          "closed-form-quadratic", max_closed_form <= 1e-12,
          "coupling-closed-form", {{"max_abs_dev", max_closed_form}}));
  }

  {
    // Pinned branch values, each checked against an independent evaluation.
    struct Pin {
      double alpha, lambda, sigma;
    };
    const Pin pins[] = {
        {1.5, 1.0, 1.1427723950989323}, {2.0, 2.0, 2.0},
        {2.0, -3.0 / 16.0, 0.75},       {1.5, 0.0, 0.5},
        {0.5, 0.0, 0.0},
    };
    double worst = 0.0;
    for (const Pin& pin : pins)
      worst = std::max(
          worst, std::abs(sigma_from_lambda(pin.lambda, pin.alpha) - pin.sigma));
    worst = std::max(worst, std::abs(lambda_star(2.0) - (-0.25)));
    worst = std::max(worst, std::abs(lambda_star(1.0) - 0.0));
    out.checks.push_back(make_check("pinned-values", worst <= 1e-10,
                                    "coupling-branch",
                                    {{"max_abs_dev", worst}}));
  }

  {
    // C is symmetric about (alpha-1)/2; sample both sides of the axis.
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
      const double axis = 0.5 * (alpha - 1.0);
      const double sup = sigma_branch_sup(alpha);
      for (int k = 1; k <= 40; ++k) {
        const double step = k * 0.03;
        const double hi = axis + step;
        if (hi >= sup || axis - step <= -1.0) break;
        const double c_hi = c_of_sigma(hi, alpha);
        const double c_lo = c_of_sigma(axis - step, alpha);
        worst = std::max(worst, std::abs(c_hi - c_lo) /
                                    std::max(1.0, std::abs(c_hi)));
      }
    }
    out.checks.push_back(make_check("branch-symmetry", worst <= 1e-12,
                                    "coupling-branch",
                                    {{"max_rel_dev", worst}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Spectrum suite: eigensolver sanity against the one exactly solvable case

inline SuiteResult run_spectrum_suite(const RunConfig& cfg,
                                      DecompCache& cache) {
  SuiteResult out;
  out.suite = "spectrum";

  {
    // Dirichlet Laplacian on [0, pi]: eigenvalues k^2 exactly.
    const SpectralDecomposition& d =
        cache.get(2.0, 0.0, 2000, M_PI, GridSpec::uniform());
    double max_rel = 0.0;
    for (int k = 1; k <= 5; ++k) {
      const double exact = static_cast<double>(k) * k;
      max_rel = std::max(max_rel, std::abs(d.mu[k - 1] - exact) / exact);
    }
    out.checks.push_back(make_check(
        "dirichlet-eigenvalues", max_rel <= 5e-3, "dirichlet-spectrum",
        {{"max_rel_err_k_le_5", max_rel}, {"mu_1", d.mu[0]}, {"mu_5", d.mu[4]}}));
    out.checks.push_back(make_check(
        "residual-ortho", d.residual <= 1e-8 && d.ortho_defect <= 1e-10,
        "spectral-calculus",
        {{"residual", d.residual}, {"ortho_defect", d.ortho_defect}}));
  }

  {
    // Heat kernel positivity and sub-Markov row mass on the workhorse model.
    const SpectralDecomposition& d = cache.get(
        2.0, 2.0, battery::kFineN, battery::kXMax, battery::grading());
    const auto ts = trusted_t_values(d.grid, d.params.alpha, 3);
    double min_kernel = std::numeric_limits<double>::infinity();
    double scale = 0.0;
    for (double t : ts) {
      const Eigen::MatrixXd kt = heat_kernel(d, t);
      min_kernel = std::min(min_kernel, kt.minCoeff());
      scale = std::max(scale, kt.cwiseAbs().maxCoeff());
    }
    out.checks.push_back(make_check(
        "heat-positivity", min_kernel >= -1e-8 * scale, "heat-positivity",
        {{"min_kernel", min_kernel}, {"max_abs_kernel", scale}}));

    const Eigen::VectorXd mass = heat_row_mass(d, ts[1]);
    out.checks.push_back(make_check(
        "heat-row-mass",
        mass.minCoeff() >= -1e-8 && mass.maxCoeff() <= 1.0 + 1e-8,
        "heat-submarkov",
        {{"min_mass", mass.minCoeff()}, {"max_mass", mass.maxCoeff()}}));
  }

  {
    // Semigroup property replayed through the kernel calculus.
    const SpectralDecomposition& d = cache.get(
        2.0, 2.0, battery::kCoarseN, battery::kXMax, battery::grading());
    const double defect = reproducing_defect(d, 0.3, 0.7);
    out.checks.push_back(make_check("reproducing", defect <= 1e-10,
                                    "spectral-calculus",
                                    {{"max_rel_defect", defect}}));
  }

  {
    // The configured model, whatever it is: decomposition health only.
    const SpectralDecomposition& d = cache.get(cfg.alpha, cfg.lambda, cfg.n,
                                               cfg.x_max, grid_spec_of(cfg));
    out.checks.push_back(make_check(
        "config-model-" + detail::model_tag(cfg.alpha, cfg.lambda),
        d.residual <= 1e-8 && d.ortho_defect <= 1e-10, "spectral-calculus",
        {{"residual", d.residual},
         {"ortho_defect", d.ortho_defect},
         {"mu_min", d.mu_min()},
         {"mu_max", d.mu_max()},
         {"exploratory", d.exploratory ? 1.0 : 0.0}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Heat-oracle suite: discrete kernels against the alpha = 2 closed forms

inline SuiteResult run_heat_oracle_suite(const RunConfig& cfg,
                                         DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "heat-oracle";

  const double pairs[][2] = {
      {1.0, 1.0}, {1.5, 2.0}, {3.0, 3.0}, {2.5, 3.5}, {5.0, 5.0}};
  const double times[] = {0.1, 0.5, 1.0, 2.0};

  struct Entry {
    double lambda;
    double tol;
  };
  // The reflection formula is elementary; the Bessel evaluations carry the
  // series/asymptotic crossover, so they get a slightly wider tolerance.
  const Entry entries[] = {{0.0, 2e-2}, {2.0, 3e-2}, {-3.0 / 16.0, 3e-2}};

  for (const Entry& entry : entries) {
    const SpectralDecomposition& d = cache.get(
        2.0, entry.lambda, battery::kFineN, battery::kXMax, battery::grading());
    const double nu = bessel_heat_order(d.params);
    double max_rel = 0.0, arg_x = 0.0, arg_y = 0.0, arg_t = 0.0;
    for (double t : times) {
      const Eigen::MatrixXd kt = heat_kernel(d, t);
      for (const auto& pair : pairs) {
        // Nearest grid nodes; the oracle is evaluated at the node
        // coordinates so grid snap does not count against the solver.
        int i = 0, j = 0;
        for (int k = 1; k < d.n(); ++k) {
          if (std::abs(d.grid.x[k] - pair[0]) <
              std::abs(d.grid.x[i] - pair[0]))
            i = k;
          if (std::abs(d.grid.x[k] - pair[1]) <
              std::abs(d.grid.x[j] - pair[1]))
            j = k;
        }
        const double x = d.grid.x[i], y = d.grid.x[j];
        const double exact = entry.lambda == 0.0
                                 ? dirichlet_heat_oracle(t, x, y)
                                 : bessel_heat_oracle(t, x, y, nu);
        const double rel = std::abs(kt(i, j) - exact) / std::abs(exact);
        if (rel > max_rel) {
          max_rel = rel;
          arg_x = x;
          arg_y = y;
          arg_t = t;
        }
      }
    }
    out.checks.push_back(make_check(
        "oracle-" + detail::model_tag(2.0, entry.lambda), max_rel <= entry.tol,
        "heat-closed-form",
        {{"max_rel_err", max_rel},
         {"argmax_x", arg_x},
         {"argmax_y", arg_y},
         {"argmax_t", arg_t},
         {"nu", nu}}));
  }

  {
    // The two closed forms must agree with each other at nu = 1/2; this
    // guards the oracle itself, independent of any discretization.
    double worst = 0.0;
    for (double t : times)
      for (const auto& pair : pairs) {
        const double a = dirichlet_heat_oracle(t, pair[0], pair[1]);
        const double b = bessel_heat_oracle(t, pair[0], pair[1], 0.5);
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
      }
    out.checks.push_back(make_check("oracle-consistency", worst <= 1e-12,
                                    "heat-closed-form",
                                    {{"max_rel_dev", worst}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Envelope suite: heat and Riesz kernels against their closed-form shapes

namespace detail {

struct SweepPair {
  RatioReport coarse;
  RatioReport fine;
  double drift_max = 0.0;
  double drift_min = 0.0;
};

// Run the same comparability sweep at the battery's two resolutions with a
// shared t-set (chosen from the coarse grid, whose trusted window is the
// narrower one) and record how much the ratio bracket moves.
template <typename MakeKernel>
inline SweepPair refine_sweep(DecompCache& cache, double alpha, double lambda,
                              const EnvelopeSpec& spec, SweepOptions opt,
                              MakeKernel&& make_kernel, int t_points) {
  const SpectralDecomposition& coarse = cache.get(
      alpha, lambda, battery::kCoarseN, battery::kXMax, battery::grading());
  const SpectralDecomposition& fine = cache.get(
      alpha, lambda, battery::kFineN, battery::kXMax, battery::grading());
  if (opt.t_is_time)
    opt.ts = trusted_t_values(coarse.grid, alpha, t_points);

  SweepPair pair;
  pair.coarse =
      comparability_report(make_kernel(coarse), spec, coarse.grid, opt);
  pair.fine = comparability_report(make_kernel(fine), spec, fine.grid, opt);
  pair.drift_max = relative_drift(pair.coarse.max_ratio, pair.fine.max_ratio);
  pair.drift_min = relative_drift(pair.coarse.min_ratio, pair.fine.min_ratio);
  return pair;
}

inline std::function<Eigen::MatrixXd(double)> heat_kernel_fn(
    const SpectralDecomposition& d) {
  const SpectralDecomposition* dp = &d;
  return [dp](double t) { return heat_kernel(*dp, t); };
}

}  // namespace detail

inline SuiteResult run_envelopes_suite(const RunConfig& cfg,
                                       DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "envelopes";

  // Two-sided near-diagonal comparability at alpha = 2, where the Gaussian
  // envelope has the exact heat rate. Both signs of the coupling.
  for (double lambda : {2.0, -3.0 / 16.0}) {
    EnvelopeSpec spec = envelope_spec(EnvelopeKind::heat, make_params(2.0, lambda));
    SweepOptions opt;
    opt.near_diagonal_only = true;
    opt.require_nonnegative = true;
    const auto pair = detail::refine_sweep(
        cache, 2.0, lambda, spec, opt,
        [](const SpectralDecomposition& d) { return detail::heat_kernel_fn(d); },
        4);
    const double spread = pair.fine.max_ratio / pair.fine.min_ratio;
    const double drift = std::max(pair.drift_max, pair.drift_min);
    out.checks.push_back(make_check(
        "heat-two-sided-" + detail::model_tag(2.0, lambda),
        pair.coarse.pass && pair.fine.pass && spread <= 50.0 && drift <= 0.10,
        "heat-two-sided-envelope",
        {{"min_ratio", pair.fine.min_ratio},
         {"max_ratio", pair.fine.max_ratio},
         {"spread", spread},
         {"drift", drift},
         {"samples", static_cast<double>(pair.fine.samples)}}));
  }

  {
    // Fractional model: upper comparability over the full trusted sweep
    // (the polynomial tail is global, so no near-diagonal restriction).
    EnvelopeSpec spec =
        envelope_spec(EnvelopeKind::heat, make_params(1.5, 1.0));
    SweepOptions opt;
    opt.use_abs_kernel = true;
    const auto pair = detail::refine_sweep(
        cache, 1.5, 1.0, spec, opt,
        [](const SpectralDecomposition& d) { return detail::heat_kernel_fn(d); },
        4);
    out.checks.push_back(make_check(
        "heat-upper-" + detail::model_tag(1.5, 1.0),
        pair.coarse.pass && pair.fine.pass && pair.drift_max <= 0.15,
        "heat-two-sided-envelope",
        {{"c_fit", pair.fine.max_ratio},
         {"drift", pair.drift_max},
         {"min_ratio", pair.fine.min_ratio},
         {"samples", static_cast<double>(pair.fine.samples)}}));
  }

  // Riesz kernel against its near-region envelope, two-sided. The absolute
  // distance cap keeps the sweep away from pairs whose continuum kernel
  // draws on scales the truncated domain cannot carry.
  for (const auto& model : {battery::Model{2.0, 2.0}, battery::Model{1.5, 1.0}}) {
    const double s = 0.5;
    EnvelopeSpec spec =
        envelope_spec(EnvelopeKind::riesz_near, make_params(model.alpha, model.lambda));
    spec.s = s;
    SweepOptions opt;
    opt.t_is_time = false;
    opt.ts = {1.0};
    opt.inner_fraction = 0.5;
    opt.min_dist_factor = 3.0;
    opt.max_dist = battery::kXMax / 5.0;
    opt.require_dist_le_max = true;
    const auto pair = detail::refine_sweep(
        cache, model.alpha, model.lambda, spec, opt,
        [s](const SpectralDecomposition& d) {
          const SpectralDecomposition* dp = &d;
          return std::function<Eigen::MatrixXd(double)>(
              [dp, s](double) { return power_kernel(*dp, -0.5 * s); });
        },
        1);
    const double drift = std::max(pair.drift_max, pair.drift_min);
    out.checks.push_back(make_check(
        "riesz-near-" + detail::model_tag(model.alpha, model.lambda),
        pair.coarse.pass && pair.fine.pass && drift <= 0.15,
        "riesz-kernel-envelope",
        {{"min_ratio", pair.fine.min_ratio},
         {"max_ratio", pair.fine.max_ratio},
         {"drift", drift},
         {"samples", static_cast<double>(pair.fine.samples)}}));
  }

  {
    // Dyadic scale sum against its closed-form majorant, plus truncation
    // stability under forced extra terms on both ends.
    struct Probe {
      double alpha, lambda, s, beta;
    };
    const Probe probes[] = {{2.0, 2.0, 1.0, -1.0}, {1.5, 1.0, 1.0, 1.0}};
    const double points[][3] = {{1.0, 1.0, 0.5},
                                {2.0, 0.5, 1.5},
                                {5.0, 4.0, 1.0},
                                {0.3, 0.2, 0.1},
                                {3.0, 3.0, 6.0}};
    double max_ratio = 0.0, max_tail = 0.0, max_shift = 0.0;
    for (const Probe& probe : probes) {
      const ModelParams mp = make_params(probe.alpha, probe.lambda);
      for (const auto& pt : points) {
        const auto res = dyadic_sum_envelope(mp, probe.s, pt[0], pt[1], pt[2],
                                             probe.beta);
        const auto res2 = dyadic_sum_envelope(mp, probe.s, pt[0], pt[1], pt[2],
                                              probe.beta, 2);
        max_ratio = std::max(max_ratio, res.ratio);
        max_tail = std::max(max_tail, res.tail_bound / res.lhs);
        max_shift =
            std::max(max_shift, std::abs(res2.lhs - res.lhs) / res.lhs);
      }
    }
    out.checks.push_back(make_check(
        "dyadic-majorant",
        max_ratio <= 4.0 && max_tail <= 1e-7 && max_shift <= 1e-6,
        "dyadic-majorant",
        {{"max_ratio", max_ratio},
         {"max_tail_rel", max_tail},
         {"max_truncation_shift", max_shift}}));
  }

  {
    // Two-kernel composition against the combined-profile bound; the
    // factor pairing that reads as intended stays bounded, the literal
    // one is reported alongside for the record.
    double max_paired = 0.0, max_literal = 0.0;
    for (double beta : {0.75, 1.0})
      for (const auto& st : {std::pair{0.5, 0.5}, std::pair{0.5, 2.0},
                             std::pair{1.0, 1.0}, std::pair{2.0, 0.5}})
        for (const auto& xy : {std::pair{0.0, 1.0}, std::pair{0.0, 5.0},
                               std::pair{1.0, 3.0}}) {
          const auto chk =
              composition_check(beta, st.first, st.second, xy.first, xy.second);
          max_paired = std::max(max_paired, chk.ratio_paired);
          max_literal = std::max(max_literal, chk.ratio_literal);
        }
    out.checks.push_back(make_check(
        "kernel-composition", std::isfinite(max_paired) && max_paired <= 8.0,
        "kernel-composition",
        {{"max_ratio_paired", max_paired}, {"max_ratio_literal", max_literal}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Smoothing suite: powers of L against the semigroup

inline SuiteResult run_smoothing_suite(const RunConfig& cfg,
                                       DecompCache& cache) {
  SuiteResult out;
  out.suite = "smoothing";

  // (tL)^k e^{-tL} kernels against the k-th smoothing envelope. At
  // alpha = 2 the polynomial factor the k-th derivative picks up has to be
  // absorbed into a relaxed Gaussian rate; below alpha = 2 the epsilon
  // relaxation of the tail order plays the same role.
  for (const auto& model : {battery::Model{2.0, 2.0}, battery::Model{1.5, 1.0}})
    for (int k : {1, 2}) {
      EnvelopeSpec spec = envelope_spec(
          EnvelopeKind::ptk, make_params(model.alpha, model.lambda));
      spec.k = k;
      spec.epsilon = 0.1;
      if (model.alpha == 2.0) spec.gaussian_rate = 5.0;
      SweepOptions opt;
      opt.use_abs_kernel = true;
      if (model.alpha == 2.0)
        opt.max_dist_over_t =
            0.5 / cache.get(model.alpha, model.lambda, battery::kCoarseN,
                            battery::kXMax, battery::grading())
                      .grid.h_min;
      const auto pair = detail::refine_sweep(
          cache, model.alpha, model.lambda, spec, opt,
          [k](const SpectralDecomposition& d) {
            const SpectralDecomposition* dp = &d;
            return std::function<Eigen::MatrixXd(double)>([dp, k](double t) {
              // The envelope prefactor t^{-(k + d/alpha)} is stated for
              // L^k e^{-tL}; the spectral kernel carries (tL)^k.
              return Eigen::MatrixXd(ptk_kernel(*dp, t, k) / std::pow(t, k));
            });
          },
          4);
      out.checks.push_back(make_check(
          "ptk-k" + std::to_string(k) + "-" +
              detail::model_tag(model.alpha, model.lambda),
          pair.coarse.pass && pair.fine.pass && pair.drift_max <= 0.15,
          "smoothing-envelope",
          {{"c_fit", pair.fine.max_ratio},
           {"drift", pair.drift_max},
           {"samples", static_cast<double>(pair.fine.samples)}}));
    }

  {
    const SpectralDecomposition& d = cache.get(
        2.0, 2.0, battery::kCoarseN, battery::kXMax, battery::grading());
    const auto panel = detail::full_panel(d, cfg.seed);
    // p = 2 is capped exactly by the scalar profile sup; off p = 2 the
    // desk bound just has to stay tame.
    for (double gamma : {0.5, 1.0}) {
      const auto rep = semigroup_decay_report(d, panel, gamma, 2.0);
      out.checks.push_back(make_check(
          "decay-g" + detail::num_tag(gamma) + "-p2",
          rep.fitted_constant <= 1.0 + 1e-9, "smoothing-decay",
          {{"sup_ratio", rep.sup_ratio},
           {"scalar_bound", rep.scalar_bound},
           {"fitted_constant", rep.fitted_constant}}));
    }
    for (double p : {1.5, 3.0}) {
      const auto rep = semigroup_decay_report(d, panel, 1.0, p);
      out.checks.push_back(make_check(
          "decay-g1-p" + detail::num_tag(p), rep.fitted_constant <= 10.0,
          "smoothing-decay",
          {{"fitted_constant", rep.fitted_constant},
           {"sup_ratio", rep.sup_ratio}}));
    }
  }

  return out;
}

// ---------------------------------------------------------------------------
// Sector suite: complex-time semigroup inside its analyticity sector

inline SuiteResult run_sector_suite(const RunConfig& cfg, DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "sector";

  struct Case {
    const char* label;
    double alpha, lambda, theta, epsilon;
  };
  // At alpha = 2 the modulus of the rotated Gaussian relaxes the decay
  // rate by 1/cos(theta); below alpha = 2 the envelope's own epsilon
  // bookkeeping bounds the usable angle by epsilon * pi / 4 instead.
  const Case cases[] = {
      {"arg0", 2.0, 2.0, 0.0, 0.1},
      {"arg-pi8", 2.0, 2.0, M_PI / 8.0, 0.1},
      {"arg-pi64", 1.5, 1.0, M_PI / 64.0, 0.1},
      {"arg-pi8", 1.5, 1.0, M_PI / 8.0, 0.9},
  };

  for (const Case& c : cases) {
    if (c.alpha < 2.0)
      require(c.theta <= c.epsilon * M_PI / 4.0 + 1e-12,
              "sector suite: angle outside the envelope's sector");
    EnvelopeSpec spec = envelope_spec(EnvelopeKind::complex_time,
                                      make_params(c.alpha, c.lambda));
    spec.epsilon = c.epsilon;
    if (c.alpha == 2.0 && c.theta > 0.0)
      spec.gaussian_rate = 4.0 / std::cos(c.theta);
    SweepOptions opt;
    opt.use_abs_kernel = true;
    if (c.alpha == 2.0)
      opt.max_dist_over_t =
          0.5 / cache.get(c.alpha, c.lambda, battery::kCoarseN, battery::kXMax,
                          battery::grading())
                    .grid.h_min;
    const double theta = c.theta;
    const auto pair = detail::refine_sweep(
        cache, c.alpha, c.lambda, spec, opt,
        [theta](const SpectralDecomposition& d) {
          const SpectralDecomposition* dp = &d;
          return std::function<Eigen::MatrixXd(double)>([dp, theta](double t) {
            const std::complex<double> z = t * std::polar(1.0, theta);
            return Eigen::MatrixXd(complex_heat_kernel(*dp, z).cwiseAbs());
          });
        },
        4);
    const std::string name = std::string(c.label) + "-eps" +
                             detail::num_tag(c.epsilon) + "-" +
                             detail::model_tag(c.alpha, c.lambda);
    out.checks.push_back(make_check(
        name, pair.coarse.pass && pair.fine.pass && pair.drift_max <= 0.15,
        "sector-envelope",
        {{"c_fit", pair.fine.max_ratio},
         {"drift", pair.drift_max},
         {"theta", c.theta},
         {"samples", static_cast<double>(pair.fine.samples)}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Difference suite: the coupled-minus-free kernel under its split envelope

inline SuiteResult run_difference_suite(const RunConfig& cfg,
                                        DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "difference";

  for (const auto& model :
       {battery::Model{2.0, 2.0}, battery::Model{1.5, 1.0}}) {
    const ModelParams mp = make_params(model.alpha, model.lambda);
    EnvelopeSpec spec_l = envelope_spec(EnvelopeKind::diff_l, mp);
    EnvelopeSpec spec_m = envelope_spec(EnvelopeKind::diff_m, mp);
    if (model.alpha == 2.0) {
      spec_l.gaussian_rate = 5.0;
      spec_m.gaussian_rate = 5.0;
    }

    const SpectralDecomposition& coarse = cache.get(
        model.alpha, 0.0, battery::kCoarseN, battery::kXMax, battery::grading());
    // At alpha = 2 the free form is tridiagonal, so the dispersion-cone cap
    // applies (same constant for both levels, from the coarse spacing).
    const double dist_cap_over_t =
        model.alpha == 2.0 ? 0.5 / coarse.grid.h_min
                           : std::numeric_limits<double>::infinity();

    // Custom sweep: the claim bounds |Q_t| by the SUM of the boundary/far
    // part and the bulk part, so the two envelope kinds are evaluated
    // together rather than through two separate reports. Their supports
    // overlap on a boundary set and jointly cover every pair.
    const auto c_fit_at = [&](int n, const std::vector<double>& ts,
                              long& samples) {
      const SpectralDecomposition& d0 =
          cache.get(model.alpha, 0.0, n, battery::kXMax, battery::grading());
      const SpectralDecomposition& dl = cache.get(
          model.alpha, model.lambda, n, battery::kXMax, battery::grading());
      double sup = 0.0;
      samples = 0;
      const double x_cap = 0.8 * battery::kXMax;
      for (double t : ts) {
        const Eigen::MatrixXd q = difference_kernel(d0, dl, t);
        // Entries below this floor are eigensolver roundoff, not kernel
        // mass; scoring them against a far-tail envelope value would
        // compare noise with a denormal.
        const double floor = 1e-13 * q.cwiseAbs().maxCoeff();
        for (int i = 0; i < d0.n(); ++i) {
          const double x = d0.grid.x[i];
          if (x > x_cap) continue;
          for (int j = 0; j <= i; ++j) {
            const double y = d0.grid.x[j];
            if (y > x_cap) continue;
            const double dist = std::abs(x - y);
            if (dist > dist_cap_over_t * t) continue;
            const double qa = std::abs(q(i, j));
            if (qa < floor) continue;
            const double env = eval_envelope(spec_l, x, y, t, dist) +
                               eval_envelope(spec_m, x, y, t, dist);
            if (env <= 0.0) {
              // Joint support covers everything; resolvable kernel mass
              // where the summed envelope vanishes is a genuine violation.
              sup = std::numeric_limits<double>::infinity();
              continue;
            }
            sup = std::max(sup, qa / env);
            ++samples;
          }
        }
      }
      return sup;
    };

    // Below alpha = 2 the free model's bottom eigenpair is a domain-scale
    // object the truncation cannot resolve (the singular potential protects
    // the coupled model but nothing protects the free one); its weight in
    // the kernel grows with t and pollutes every pair, so the sweep stops
    // at x_max / 22 where three-level refinement stays within half a
    // percent. The exact tridiagonal form at alpha = 2 has no such limit.
    const auto ts = trusted_t_values(coarse.grid, model.alpha, 4, 3.0,
                                     model.alpha < 2.0 ? 22.0 : 8.0);
    long samples_coarse = 0, samples_fine = 0;
    const double sup_coarse = c_fit_at(battery::kCoarseN, ts, samples_coarse);
    const double sup_fine = c_fit_at(battery::kFineN, ts, samples_fine);
    const double drift = relative_drift(sup_coarse, sup_fine);
    out.checks.push_back(make_check(
        "qt-dom-" + detail::model_tag(model.alpha, model.lambda),
        std::isfinite(sup_fine) && sup_fine > 0.0 && drift <= 0.15,
        "difference-domination",
        {{"c_fit", sup_fine},
         {"c_fit_coarse", sup_coarse},
         {"drift", drift},
         {"samples", static_cast<double>(samples_fine)}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Square-function suite: exact L^2 identities and the L^p brackets

inline SuiteResult run_squarefn_suite(const RunConfig& cfg,
                                      DecompCache& cache) {
  SuiteResult out;
  out.suite = "squarefn";

  const SpectralDecomposition& d = cache.get(
      2.0, 2.0, battery::kCoarseN, battery::kXMax, battery::grading());
  const TimeQuadrature quad = default_time_quadrature(d);
  const auto panel = detail::full_panel(d, cfg.seed);

  for (double gamma : {0.5, 1.0}) {
    // ||S_gamma f||_2 = sqrt(Gamma(2 gamma)/4^gamma) ||f||_2, exactly, by
    // mode orthonormality; the quadrature is the only error source.
    const double target = std::sqrt(square_function_constant(gamma));
    double worst = 0.0;
    for (const auto& f : panel) {
      const Eigen::VectorXd sf = square_function(d, f, gamma, quad);
      const double ratio =
          lp_norm(d.grid, sf, 2.0) / (target * lp_norm(d.grid, f, 2.0));
      worst = std::max(worst, std::abs(ratio - 1.0));
    }
    out.checks.push_back(make_check(
        "l2-identity-g" + detail::num_tag(gamma), worst <= 0.01,
        "square-function-identity",
        {{"max_rel_dev", worst}, {"target", target}}));
  }

  for (double s : {0.5, 1.0, 1.5}) {
    // Weighted variant: ||t^{-s/2}-weighted S f||_2 against
    // sqrt(Gamma(2-s) 2^{s-2}) ||L^{s/2} f||_2.
    const double target = std::sqrt(weighted_square_function_constant(s));
    const auto half_power = detail::power_profile(d, 0.5 * s);
    double worst = 0.0;
    for (const auto& f : panel) {
      const Eigen::VectorXd sf = weighted_square_function(d, f, s, quad);
      const double rhs = target * lp_norm(d.grid, apply_spectral(d, half_power, f), 2.0);
      worst = std::max(worst, std::abs(lp_norm(d.grid, sf, 2.0) / rhs - 1.0));
    }
    out.checks.push_back(make_check(
        "weighted-identity-s" + detail::num_tag(s), worst <= 0.02,
        "square-function-identity", {{"max_rel_dev", worst}}));
  }

  for (double p : {1.5, 3.0}) {
    // Away from p = 2 the identity relaxes to a two-sided bracket; the
    // bracket endpoints are regression-pinned and drift-checked.
    const SpectralDecomposition& fine = cache.get(
        2.0, 2.0, battery::kFineN, battery::kXMax, battery::grading());
    const auto rep =
        sf_equivalence_report(d, p, 1.0, detail::drift_panel(d), quad);
    const auto rep_fine =
        sf_equivalence_report(fine, p, 1.0, detail::drift_panel(fine),
                              default_time_quadrature(fine));
    const double drift =
        std::max(report_drift(rep.ratios.max_ratio, rep_fine.ratios.max_ratio),
                 report_drift(rep.ratios.min_ratio, rep_fine.ratios.min_ratio));
    std::vector<std::pair<std::string, double>> metrics;
    detail::push_ratio_metrics(metrics, rep_fine.ratios);
    metrics.emplace_back("duality_constant", rep_fine.duality_constant);
    metrics.emplace_back("drift", drift);
    out.checks.push_back(make_check(
        "lp-bracket-p" + detail::num_tag(p),
        rep_fine.ratios.finite() && rep_fine.ratios.min_ratio > 0.0 &&
            drift <= 0.10,
        "square-function-lp", std::move(metrics)));
  }

  {
    // Pointwise triangle inequality of the square function, which is an
    // l2 norm over the shared time quadrature: S(f+g) <= S f + S g up to
    // roundoff, with no discretization tolerance at all.
    const std::pair<int, int> pairs[] = {{0, 1}, {2, 11}, {5, 7}};
    double worst = 0.0;
    for (const auto& pr : pairs) {
      const Eigen::VectorXd& f = panel[pr.first];
      const Eigen::VectorXd& g = panel[pr.second];
      const Eigen::VectorXd sf = square_function(d, f, 1.0, quad);
      const Eigen::VectorXd sg = square_function(d, g, 1.0, quad);
      const Eigen::VectorXd sfg = square_function(d, f + g, 1.0, quad);
      const double scale = (sf + sg).maxCoeff();
      worst = std::max(worst, (sfg - sf - sg).maxCoeff() / scale);
    }
    out.checks.push_back(make_check("triangle", worst <= 1e-10,
                                    "triangle-consistency",
                                    {{"max_violation_rel", worst}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Reversed-Hardy suite: the difference square function from below

inline SuiteResult run_reversed_hardy_suite(const RunConfig& cfg,
                                            DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "reversed-hardy";

  for (const auto& model : battery::ratio_models())
    for (const auto& ps : battery::ps_tuples()) {
      const double p = ps.first, s = ps.second;
      const auto run_at = [&](int n) {
        const SpectralDecomposition& d0 =
            cache.get(model.alpha, 0.0, n, battery::kXMax, battery::grading());
        const SpectralDecomposition& dl = cache.get(
            model.alpha, model.lambda, n, battery::kXMax, battery::grading());
        const TimeQuadrature quad = joint_time_quadrature(d0, dl);
        return reversed_hardy_report(d0, dl, p, s, detail::drift_panel(dl),
                                     quad);
      };
      const auto coarse = run_at(battery::kCoarseN);
      const auto fine = run_at(battery::kFineN);
      const double drift =
          std::max(report_drift(coarse.ratios.max_ratio, fine.ratios.max_ratio),
                   report_drift(coarse.ratios.min_ratio, fine.ratios.min_ratio));
      // The lower constant is only claimed for couplings on the positive
      // side; the negative model is tracked for finiteness and stability.
      const bool want_floor = model.lambda > 0.0;
      const bool pass = fine.ratios.finite() && drift <= 0.10 &&
                        (!want_floor || fine.ratios.min_ratio > 1e-3);
      std::vector<std::pair<std::string, double>> metrics;
      detail::push_ratio_metrics(metrics, fine.ratios);
      metrics.emplace_back("drift", drift);
      metrics.emplace_back("floor_required", want_floor ? 1.0 : 0.0);
      out.checks.push_back(make_check(
          "rh-" + detail::model_tag(model.alpha, model.lambda) + "-" +
              detail::ps_tag(p, s),
          pass, "reversed-hardy", std::move(metrics)));
    }

  return out;
}

// ---------------------------------------------------------------------------
// Generalized-Hardy suite: weighted smoothing ratios and divergence probes

inline SuiteResult run_gen_hardy_suite(const RunConfig& cfg,
                                       DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "gen-hardy";

  for (const auto& model : battery::ratio_models())
    for (const auto& ps : battery::ps_tuples()) {
      const double p = ps.first, s = ps.second;
      const auto run_at = [&](int n) {
        const SpectralDecomposition& d = cache.get(
            model.alpha, model.lambda, n, battery::kXMax, battery::grading());
        return generalized_hardy_report(d, p, s, detail::drift_panel(d));
      };
      const auto coarse = run_at(battery::kCoarseN);
      const auto fine = run_at(battery::kFineN);
      const double drift =
          report_drift(coarse.ratios.max_ratio, fine.ratios.max_ratio);
      std::vector<std::pair<std::string, double>> metrics;
      detail::push_ratio_metrics(metrics, fine.ratios);
      metrics.emplace_back("drift", drift);
      metrics.emplace_back("admissible", fine.admissible ? 1.0 : 0.0);
      out.checks.push_back(make_check(
          "gh-" + detail::model_tag(model.alpha, model.lambda) + "-" +
              detail::ps_tag(p, s),
          fine.admissible && fine.ratios.finite() && drift <= 0.10,
          "hardy-weight", std::move(metrics)));
    }

  // Divergence probes: p is pushed outside the weight window, so the sup
  // must grow as refinement resolves more of the boundary. The verdict is
  // EXPECTED-DIVERGENCE when the growth is visible and INCONCLUSIVE when
  // it is not yet; neither is a silent pass, and neither fails the run.
  struct Probe {
    double alpha, lambda, p, s;
  };
  const Probe probes[] = {{2.0, -3.0 / 16.0, 8.0, 1.0},
                          {1.5, 0.0, 8.0, 1.0}};
  for (const Probe& probe : probes) {
    const auto run_at = [&](int n) {
      const SpectralDecomposition& d = cache.get(
          probe.alpha, probe.lambda, n, battery::kXMax, battery::grading());
      return generalized_hardy_report(d, probe.p, probe.s,
                                      detail::drift_panel(d));
    };
    const auto coarse = run_at(battery::kCoarseN);
    const auto fine = run_at(battery::kFineN);
    CheckResult check;
    check.name = "probe-" + detail::model_tag(probe.alpha, probe.lambda) +
                 "-" + detail::ps_tag(probe.p, probe.s);
    check.status =
        divergence_verdict(coarse.ratios.max_ratio, fine.ratios.max_ratio);
    check.claim = "hardy-divergence-probe";
    check.metrics = {{"sup_coarse", coarse.ratios.max_ratio},
                     {"sup_fine", fine.ratios.max_ratio},
                     {"growth", fine.ratios.max_ratio / coarse.ratios.max_ratio},
                     {"admissible", fine.admissible ? 1.0 : 0.0}};
    out.checks.push_back(std::move(check));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Equivalence suite: Sobolev norms of the free and coupled operators

inline SuiteResult run_equivalence_suite(const RunConfig& cfg,
                                         DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "equivalence";

  const auto run_model = [&](double alpha, double lambda, double p, double s,
                             RangeDirection dir, const std::string& name) {
    const auto run_at = [&](int n) {
      const SpectralDecomposition& d0 =
          cache.get(alpha, 0.0, n, battery::kXMax, battery::grading());
      const SpectralDecomposition& dl =
          cache.get(alpha, lambda, n, battery::kXMax, battery::grading());
      return norm_equivalence_report(d0, dl, p, s, detail::drift_panel(dl),
                                     dir);
    };
    const auto coarse = run_at(battery::kCoarseN);
    const auto fine = run_at(battery::kFineN);
    const bool both = dir == RangeDirection::equivalence;
    // Judge only the claimed direction(s): a forward-only claim says
    // nothing about the backward ratio, which may legitimately diverge.
    double drift =
        report_drift(coarse.forward.max_ratio, fine.forward.max_ratio);
    if (both)
      drift = std::max(drift, report_drift(coarse.backward.max_ratio,
                                           fine.backward.max_ratio));
    std::vector<std::pair<std::string, double>> metrics = {
        {"fwd_min", fine.forward.min_ratio},
        {"fwd_max", fine.forward.max_ratio},
        {"bwd_min", fine.backward.min_ratio},
        {"bwd_max", fine.backward.max_ratio},
        {"drift", drift},
        {"p_lo", fine.range.p_lo},
        {"p_hi", fine.range.p_hi}};
    const bool pass = fine.forward.finite() && drift <= 0.10 &&
                      (!both || fine.backward.finite());
    out.checks.push_back(
        make_check(name, pass, "sobolev-equivalence", std::move(metrics)));
  };

  for (const auto& model : battery::ratio_models())
    for (const auto& ps : battery::ps_tuples())
      run_model(model.alpha, model.lambda, ps.first, ps.second,
                RangeDirection::equivalence,
                "eq-" + detail::model_tag(model.alpha, model.lambda) + "-" +
                    detail::ps_tag(ps.first, ps.second));

  // s = 2: the backward window closes for alpha >= 1, so only the
  // free-controls-coupled direction is claimed there.
  run_model(2.0, 2.0, 2.0, 2.0, RangeDirection::forward,
            "eq-fwd-only-a2-l2-p2-s2");

  return out;
}

// ---------------------------------------------------------------------------
// Riesz suite: L_0^{s/2} L_lambda^{-s/2} boundedness

inline SuiteResult run_riesz_suite(const RunConfig& cfg, DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "riesz";

  for (const auto& model : battery::ratio_models())
    for (const auto& ps : battery::ps_tuples()) {
      const double p = ps.first, s = ps.second;
      const auto run_at = [&](int n) {
        const SpectralDecomposition& d0 =
            cache.get(model.alpha, 0.0, n, battery::kXMax, battery::grading());
        const SpectralDecomposition& dl = cache.get(
            model.alpha, model.lambda, n, battery::kXMax, battery::grading());
        return riesz_transform_report(d0, dl, p, s, detail::drift_panel(dl));
      };
      const auto coarse = run_at(battery::kCoarseN);
      const auto fine = run_at(battery::kFineN);
      const double drift = report_drift(coarse.max_ratio, fine.max_ratio);
      std::vector<std::pair<std::string, double>> metrics;
      detail::push_ratio_metrics(metrics, fine);
      metrics.emplace_back("drift", drift);
      out.checks.push_back(make_check(
          "rz-" + detail::model_tag(model.alpha, model.lambda) + "-" +
              detail::ps_tag(p, s),
          fine.finite() && drift <= 0.10, "riesz-transform",
          std::move(metrics)));
    }

  return out;
}

// ---------------------------------------------------------------------------
// Schur suite: the scalar reduction and the case-by-case discrete replay

inline SuiteResult run_schur_suite(const RunConfig& cfg, DecompCache& cache) {
  (void)cfg;
  SuiteResult out;
  out.suite = "schur";

  {
    // Scalar integral against values frozen from an independent
    // high-precision evaluation.
    struct Pin {
      double beta, p, r, alpha, value;
    };
    const Pin pins[] = {
        {1.0, 2.0, 0.0, 2.0, 9.9972912484290514},
        {0.8, 2.0, 0.25, 1.5, 15.021180891657785},
        {1.2, 3.0, 0.1, 1.0, 8.6733897673520171},
    };
    double worst = 0.0;
    double worst_depth = 0.0;
    for (const Pin& pin : pins) {
      const double got = schur_scalar_integral(pin.beta, pin.p, pin.r, pin.alpha);
      worst = std::max(worst, std::abs(got - pin.value) / pin.value);
      const double deep =
          schur_scalar_integral(pin.beta, pin.p, pin.r, pin.alpha, 2.5e-11);
      worst_depth = std::max(worst_depth, std::abs(got - deep) / pin.value);
    }
    out.checks.push_back(make_check("scalar-pins", worst <= 1e-8,
                                    "schur-scalar-integral",
                                    {{"max_rel_err", worst}}));
    out.checks.push_back(make_check("scalar-depth-stability",
                                    worst_depth <= 1e-8,
                                    "schur-scalar-integral",
                                    {{"max_rel_shift", worst_depth}}));
  }

  {
    // Divergent parameter requests must be refused, on both endpoints.
    int threw = 0;
    try {
      schur_scalar_integral(2.0, 2.0, 0.0, 2.0);  // beta = p(1 - r)
    } catch (const std::domain_error&) {
      ++threw;
    }
    try {
      schur_scalar_integral(0.5, 2.0, 0.25, 2.0);  // beta = p r
    } catch (const std::domain_error&) {
      ++threw;
    }
    out.checks.push_back(make_check("scalar-divergence-gates", threw == 2,
                                    "schur-scalar-integral",
                                    {{"gates_threw", static_cast<double>(threw)}}));
  }

  {
    // The marginal-kernel reduction: the weighted row integral of M equals
    // the scalar integral by substitution, so the separately coded
    // integrand must agree with (x/y)^{beta/p} M(x, y) pointwise.
    double worst = 0.0;
    const double beta = 1.0, p = 2.0, r = 0.25, alpha = 1.5;
    for (int k = 0; k <= 20; ++k) {
      const double t = std::pow(10.0, -2.0 + 4.0 * k / 20.0);
      const double lhs = schur_scalar_integrand(t, beta, p, r, alpha);
      const double rhs =
          std::pow(1.0 / t, beta / p) * schur_marginal_kernel(1.0, t, r, alpha);
      worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    const double diag = std::abs(schur_marginal_kernel(3.0, 3.0, 0.3, 1.5) -
                                 1.0 / 3.0) * 3.0;
    const double farpin =
        std::abs(schur_marginal_kernel(1.0, 4.0, 0.0, 2.0) - 16.0 / 27.0) /
        (16.0 / 27.0);
    out.checks.push_back(make_check(
        "marginal-reduction", worst <= 1e-13 && diag <= 1e-13 && farpin <= 1e-13,
        "schur-marginal-reduction",
        {{"max_pointwise_dev", worst},
         {"diag_pin_dev", diag},
         {"far_pin_dev", farpin}}));
  }

  {
    // Weight-exponent windows: midpoint selections at the two reference
    // couplings, and refusal when the window is empty.
    const auto bg1 = weight_exponent_select(2.0, 1.0, 1.0, 2.0);
    const auto bg2 = weight_exponent_select(2.0, 1.0, 2.0, 2.0);
    bool refused = false;
    try {
      weight_exponent_select(1.2, 1.0, 2.0, 2.0);
    } catch (const admissibility_error&) {
      refused = true;
    }
    out.checks.push_back(make_check(
        "weight-windows",
        bg1.first == 1.0 && bg1.second == 3.0 && bg2.first == 1.0 &&
            bg2.second == 5.0 && refused,
        "schur-weight-window",
        {{"beta_sigma1", bg1.first},
         {"gamma_sigma1", bg1.second},
         {"beta_sigma2", bg2.first},
         {"gamma_sigma2", bg2.second},
         {"empty_window_refused", refused ? 1.0 : 0.0}}));
  }

  {
    // Case-region coverage: every node pair must fall in at least one of
    // the four regions (overlap on the boundaries is expected).
    const SpectralDecomposition& d = cache.get(
        2.0, 2.0, battery::kCoarseN, battery::kXMax, battery::grading());
    long gaps = 0;
    for (int i = 0; i < d.n(); ++i)
      for (int j = 0; j <= i; ++j) {
        const double x = d.grid.x[i], y = d.grid.x[j];
        const double dist = std::abs(x - y);
        int hit = 0;
        for (int c = 1; c <= 4; ++c)
          if (schur_case_contains(c, x, y, dist)) ++hit;
        if (hit == 0) ++gaps;
      }
    out.checks.push_back(make_check("case-partition", gaps == 0,
                                    "schur-case-sums",
                                    {{"coverage_gaps", static_cast<double>(gaps)}}));
  }

  // Discrete replay of the case-by-case Schur sums at (p, s) = (2, 1).
  // The far region (case 4) is empty on the half line, where |x - y| never
  // exceeds max(x, y); it is reported as such rather than dropped, since
  // its emptiness is itself a statement about the one-dimensional setup.
  for (int case_id = 1; case_id <= 4; ++case_id) {
    const auto run_at = [&](int n) {
      const SpectralDecomposition& d =
          cache.get(2.0, 2.0, n, battery::kXMax, battery::grading());
      return schur_case_report(d, 2.0, 1.0, case_id);
    };
    const auto coarse = run_at(battery::kCoarseN);
    const auto fine = run_at(battery::kFineN);
    const std::string name = "case-" + std::to_string(case_id) + "-sums";
    if (fine.sums.empty_region()) {
      CheckResult check;
      check.name = name;
      check.status = "WARN";
      check.claim = "schur-case-sums";
      check.metrics = {{"samples", 0.0},
                       {"beta", fine.beta},
                       {"gamma", fine.gamma}};
      out.checks.push_back(std::move(check));
      continue;
    }
    const double drift =
        std::max(report_drift(coarse.sums.row_sup, fine.sums.row_sup),
                 report_drift(coarse.sums.col_sup, fine.sums.col_sup));
    out.checks.push_back(make_check(
        name,
        std::isfinite(fine.sums.row_sup) && std::isfinite(fine.sums.col_sup) &&
            drift <= 0.15,
        "schur-case-sums",
        {{"row_sup", fine.sums.row_sup},
         {"col_sup", fine.sums.col_sup},
         {"drift", drift},
         {"beta", fine.beta},
         {"gamma", fine.gamma},
         {"samples", static_cast<double>(fine.sums.samples)}}));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Dispatch

inline std::vector<std::pair<std::string,
                             SuiteResult (*)(const RunConfig&, DecompCache&)>>
suite_registry() {
  return {
      {"coupling", run_coupling_suite},
      {"spectrum", run_spectrum_suite},
      {"heat-oracle", run_heat_oracle_suite},
      {"envelopes", run_envelopes_suite},
      {"smoothing", run_smoothing_suite},
      {"sector", run_sector_suite},
      {"difference", run_difference_suite},
      {"squarefn", run_squarefn_suite},
      {"reversed-hardy", run_reversed_hardy_suite},
      {"gen-hardy", run_gen_hardy_suite},
      {"equivalence", run_equivalence_suite},
      {"riesz", run_riesz_suite},
      {"schur", run_schur_suite},
  };
}

inline SuiteResult run_suites(const RunConfig& cfg) {
  DecompCache cache;
  const auto registry = suite_registry();
  if (cfg.suite == "all") {
    SuiteResult merged;
    merged.suite = "all";
    for (const auto& entry : registry)
      merged.append(entry.second(cfg, cache));
    return merged;
  }
  for (const auto& entry : registry)
    if (entry.first == cfg.suite) return entry.second(cfg, cache);
  std::string known = "all";
  for (const auto& entry : registry) known += ", " + entry.first;
  throw std::invalid_argument("unknown suite '" + cfg.suite +
                              "' (known: " + known + ")");
}

}  // namespace hardyops
