// Command-line front end: scalar coupling queries, kernel dumps, the named
// verification suites, and the exploratory negative-coupling probe.
//
// Exit codes: 0 success, 1 a verification check failed, 2 the requested
// parameters are outside an admissible window, 64 usage errors. The
// HARDYOPS_THREADS environment variable caps worker threads; reports with
// the same configuration are byte-identical across runs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardyops/suites.hpp"

namespace {

constexpr int kExitUsage = 64;

// Options shared by the model-driven subcommands. Each field mirrors a
// RunConfig entry; merge() lets an explicit command-line flag override the
// config file, which overrides the built-in defaults.
struct ModelFlags {
  std::string config_path;
  hardyops::RunConfig values;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--config", flags.config_path,
                  "JSON file with configuration fields");
  cmd->add_option("--alpha", flags.values.alpha, "order alpha in (0, 2]");
  cmd->add_option("--lambda", flags.values.lambda, "coupling strength");
  cmd->add_option("--n", flags.values.n, "number of grid cells");
  cmd->add_option("--x-max", flags.values.x_max, "domain truncation");
  cmd->add_option("--grading", flags.values.grading,
                  "'uniform' or 'geometric'");
  cmd->add_option("--grading-ratio", flags.values.grading_ratio,
                  "cell growth factor in the boundary layer");
  cmd->add_option("--boundary-fraction", flags.values.boundary_fraction,
                  "fraction of the domain covered by the layer");
  cmd->add_option("--seed", flags.values.seed, "seed for the random panels");
}

hardyops::RunConfig merge(const CLI::App* cmd, const ModelFlags& flags) {
  hardyops::RunConfig cfg;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open file");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ValidationError("--config", e.what());
    }
    if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
    if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
    if (j.contains("n")) cfg.n = j["n"].get<int>();
    if (j.contains("x_max")) cfg.x_max = j["x_max"].get<double>();
    if (j.contains("grading")) cfg.grading = j["grading"].get<std::string>();
    if (j.contains("grading_ratio"))
      cfg.grading_ratio = j["grading_ratio"].get<double>();
    if (j.contains("boundary_fraction"))
      cfg.boundary_fraction = j["boundary_fraction"].get<double>();
    if (j.contains("seed"))
      cfg.seed = j["seed"].get<unsigned long long>();
    if (j.contains("conjecture_mode"))
      cfg.conjecture_mode = j["conjecture_mode"].get<bool>();
    if (j.contains("suite")) cfg.suite = j["suite"].get<std::string>();
  }
  const auto take = [&](const char* name, auto member) {
    if (cmd->count(name) > 0) cfg.*member = flags.values.*member;
  };
  take("--alpha", &hardyops::RunConfig::alpha);
  take("--lambda", &hardyops::RunConfig::lambda);
  take("--n", &hardyops::RunConfig::n);
  take("--x-max", &hardyops::RunConfig::x_max);
  take("--grading", &hardyops::RunConfig::grading);
  take("--grading-ratio", &hardyops::RunConfig::grading_ratio);
  take("--boundary-fraction", &hardyops::RunConfig::boundary_fraction);
  take("--seed", &hardyops::RunConfig::seed);
  return cfg;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to " + path);
  out << body;
}

int cmd_sigma(double alpha, bool have_lambda, double lambda, bool have_sigma,
              double sigma) {
  using hardyops::format_double;
  if (have_lambda == have_sigma) {
    std::cerr << "sigma: pass exactly one of --lambda or --sigma\n";
    return kExitUsage;
  }
  const double lstar = hardyops::lambda_star(alpha);
  if (have_lambda) {
    if (lambda < lstar) {
      std::cerr << "sigma: lambda = " << format_double(lambda)
                << " lies below the admissible floor lambda_star = "
                << format_double(lstar) << " at alpha = "
                << format_double(alpha) << "\n";
      return 2;
    }
    const double s = hardyops::sigma_from_lambda(lambda, alpha);
    std::cout << "sigma=" << format_double(s) << "\n"
              << "lambda_star=" << format_double(lstar) << "\n"
              << "branch_sup=" << format_double(hardyops::sigma_branch_sup(alpha))
              << "\n";
    return 0;
  }
  const double axis = 0.5 * (alpha - 1.0);
  const double l = hardyops::c_of_sigma(sigma, alpha);
  std::cout << "lambda=" << format_double(l) << "\n";
  if (sigma < axis)
    std::cout << "note=sigma lies on the mirror branch; the calculus uses "
              << format_double(alpha - 1.0 - sigma) << "\n";
  return 0;
}

int cmd_verify(const CLI::App* cmd, const ModelFlags& flags,
               const std::string& suite, const std::string& out_path) {
  hardyops::RunConfig cfg = merge(cmd, flags);
  if (cmd->count("--suite") > 0 || cfg.suite.empty()) cfg.suite = suite;
  const hardyops::SuiteResult result = hardyops::run_suites(cfg);
  write_text(out_path,
             hardyops::render_report(result, hardyops::config_digest(cfg)));
  return result.all_ok() ? 0 : 1;
}

int cmd_kernel(const CLI::App* cmd, const ModelFlags& flags, double t, int k,
               double complex_arg, double epsilon, int stride,
               const std::string& out_path) {
  using hardyops::format_double;
  const hardyops::RunConfig cfg = merge(cmd, flags);
  if (k > 0 && complex_arg != 0.0) {
    std::cerr << "kernel: --complex-arg applies to the semigroup kernel only "
                 "(--k 0)\n";
    return kExitUsage;
  }

  const hardyops::Grid grid =
      hardyops::make_grid(cfg.n, cfg.x_max, hardyops::grid_spec_of(cfg));
  const hardyops::ModelParams params =
      hardyops::make_params(cfg.alpha, cfg.lambda);

  // Keep the dump inside the trusted window, where the discrete kernel
  // means something; outside it the numbers would only mislead.
  const double tpow = std::pow(t, 1.0 / cfg.alpha);
  const double window_lo = 3.0 * grid.h_min;
  const double window_hi = grid.x_max / 8.0;
  if (tpow < window_lo || tpow > window_hi) {
    std::cerr << "kernel: t = " << format_double(t)
              << " is outside the trusted window; need t^(1/alpha) in ["
              << format_double(window_lo) << ", " << format_double(window_hi)
              << "]\n";
    return 2;
  }

  hardyops::EnvelopeSpec spec;
  if (k > 0) {
    spec = hardyops::envelope_spec(hardyops::EnvelopeKind::ptk, params);
    spec.k = k;
    spec.epsilon = epsilon;
    if (cfg.alpha == 2.0) spec.gaussian_rate = 5.0;
  } else if (complex_arg != 0.0) {
    spec = hardyops::envelope_spec(hardyops::EnvelopeKind::complex_time, params);
    spec.epsilon = epsilon;
    if (cfg.alpha == 2.0)
      spec.gaussian_rate = 4.0 / std::cos(complex_arg);
    else if (std::abs(complex_arg) > epsilon * M_PI / 4.0) {
      std::cerr << "kernel: |arg| exceeds the envelope sector epsilon*pi/4 = "
                << format_double(epsilon * M_PI / 4.0) << " below alpha = 2\n";
      return 2;
    }
  } else {
    spec = hardyops::envelope_spec(hardyops::EnvelopeKind::heat, params);
  }

  const hardyops::SpectralDecomposition dec =
      hardyops::decompose(hardyops::assemble_L(grid, params), params);
  Eigen::MatrixXd kt;
  if (k > 0)
    kt = hardyops::ptk_kernel(dec, t, k);
  else if (complex_arg != 0.0)
    kt = hardyops::complex_heat_kernel(dec, t * std::polar(1.0, complex_arg))
             .cwiseAbs();
  else
    kt = hardyops::heat_kernel(dec, t);

  const int step = stride > 0 ? stride : std::max(1, cfg.n / 64);
  std::string body = "x,y,t,kernel,envelope,ratio\n";
  for (int i = 0; i < dec.n(); i += step)
    for (int j = 0; j < dec.n(); j += step) {
      const double x = grid.x[i], y = grid.x[j];
      const double dist = std::abs(x - y);
      // The smoothing envelope is stated for L^k e^{-tL}; the dumped
      // kernel carries (tL)^k, so the column picks up t^k.
      const double env =
          std::pow(t, k) * hardyops::eval_envelope(spec, x, y, t, dist);
      const double ratio = kt(i, j) / env;
      body += format_double(x) + "," + format_double(y) + "," +
              format_double(t) + "," + format_double(kt(i, j)) + "," +
              format_double(env) + "," + format_double(ratio) + "\n";
    }
  write_text(out_path, body);
  return 0;
}

int cmd_probe(const CLI::App* cmd, const ModelFlags& flags, bool conjecture_flag,
              const std::string& out_path) {
  using hardyops::format_double;
  hardyops::RunConfig cfg = merge(cmd, flags);
  if (conjecture_flag) cfg.conjecture_mode = true;
  if (!cfg.conjecture_mode) {
    std::cerr << "probe-conjecture explores couplings with no proven "
                 "comparability theory; pass --conjecture (or set "
                 "conjecture_mode in the config) to acknowledge that the "
                 "outcome is evidence, not verification\n";
    return kExitUsage;
  }

  nlohmann::ordered_json out;
  out["config_digest"] = hardyops::config_digest(cfg);
  out["alpha"] = cfg.alpha;
  out["lambda"] = cfg.lambda;

  if (cfg.lambda >= 0.0) {
    out["verdict"] = "REDIRECT";
    out["note"] =
        "nonnegative couplings are covered by the proven envelopes; run "
        "'verify --suite envelopes' instead";
    write_text(out_path, out.dump(2) + "\n");
    return 0;
  }

  // Below the admissible floor make_params refuses (exit 2 via the
  // admissibility handler in main).
  const hardyops::ModelParams params =
      hardyops::make_params(cfg.alpha, cfg.lambda);

  // Two-sided near-diagonal comparability under the sigma-weighted
  // envelope, at the configured resolution and its refinement.
  hardyops::DecompCache cache;
  hardyops::EnvelopeSpec spec =
      hardyops::envelope_spec(hardyops::EnvelopeKind::heat, params);
  hardyops::SweepOptions opt;
  opt.near_diagonal_only = true;
  const auto sweep_at = [&](int n) {
    const hardyops::SpectralDecomposition& d = cache.get(
        cfg.alpha, cfg.lambda, n, cfg.x_max, hardyops::grid_spec_of(cfg));
    opt.ts = hardyops::trusted_t_values(d.grid, cfg.alpha, 4);
    return hardyops::comparability_report(
        [&d](double t) { return hardyops::heat_kernel(d, t); }, spec, d.grid,
        opt);
  };
  const auto coarse = sweep_at(cfg.n);
  const auto fine = sweep_at(2 * cfg.n);
  const double drift =
      std::max(hardyops::relative_drift(coarse.max_ratio, fine.max_ratio),
               hardyops::relative_drift(coarse.min_ratio, fine.min_ratio));
  const double spread = fine.max_ratio / fine.min_ratio;

  std::string verdict = "INCONCLUSIVE";
  if (coarse.pass && fine.pass && spread <= 50.0 && drift <= 0.15)
    verdict = "SUPPORTED";
  else if (!std::isfinite(spread) ||
           hardyops::divergence_verdict(coarse.max_ratio, fine.max_ratio) ==
               "EXPECTED-DIVERGENCE" ||
           fine.min_ratio <= 0.0)
    verdict = "NOT-SUPPORTED";

  out["verdict"] = verdict;
  out["metrics"] = {{"min_ratio", fine.min_ratio},
                    {"max_ratio", fine.max_ratio},
                    {"spread", spread},
                    {"drift", drift},
                    {"samples", fine.samples}};
  write_text(out_path, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerical laboratory for half-line operators with a critically "
      "singular potential: spectral calculus, kernel envelopes, and named "
      "verification suites. HARDYOPS_THREADS caps worker threads."};
  app.require_subcommand(1);

  // sigma
  auto* sigma_cmd = app.add_subcommand(
      "sigma", "map a coupling to its boundary exponent (or back)");
  double sigma_alpha = 2.0, sigma_lambda = 0.0, sigma_sigma = 0.0;
  sigma_cmd->add_option("--alpha", sigma_alpha, "order alpha in (0, 2]")
      ->required();
  auto* opt_lambda = sigma_cmd->add_option("--lambda", sigma_lambda,
                                           "coupling to invert");
  auto* opt_sigma = sigma_cmd->add_option("--sigma", sigma_sigma,
                                          "exponent to map forward");

  // lambda-star
  auto* lstar_cmd = app.add_subcommand(
      "lambda-star", "print the admissible coupling floor at alpha");
  double lstar_alpha = 2.0;
  lstar_cmd->add_option("--alpha", lstar_alpha, "order alpha in (0, 2]")
      ->required();

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "run a named verification suite and emit a JSON report");
  ModelFlags verify_flags;
  add_model_flags(verify_cmd, verify_flags);
  std::string verify_suite = "all";
  std::string verify_out;
  verify_cmd->add_option("--suite", verify_suite,
                         "suite name, or 'all' for the merged battery");
  verify_cmd->add_option("--out", verify_out, "write the report here");

  // kernel
  auto* kernel_cmd = app.add_subcommand(
      "kernel", "dump kernel, envelope, and ratio values as CSV");
  ModelFlags kernel_flags;
  add_model_flags(kernel_cmd, kernel_flags);
  double kernel_t = 1.0, kernel_arg = 0.0, kernel_eps = 0.1;
  int kernel_k = 0, kernel_stride = 0;
  kernel_cmd->add_option("--t", kernel_t, "time (or |z| with --complex-arg)")
      ->required();
  kernel_cmd->add_option("--k", kernel_k, "semigroup power (0 = heat kernel)")
      ->check(CLI::NonNegativeNumber);
  kernel_cmd->add_option("--complex-arg", kernel_arg,
                         "argument of complex time (k = 0 only)");
  kernel_cmd->add_option("--epsilon", kernel_eps,
                         "envelope relaxation parameter in (0, 1)");
  kernel_cmd->add_option("--stride", kernel_stride,
                         "node subsampling stride (default n/64)");
  std::string kernel_out;
  kernel_cmd->add_option("--out", kernel_out, "write the CSV here");

  // probe-conjecture
  auto* probe_cmd = app.add_subcommand(
      "probe-conjecture",
      "exploratory comparability probe for negative couplings");
  ModelFlags probe_flags;
  add_model_flags(probe_cmd, probe_flags);
  bool probe_ack = false;
  probe_cmd->add_flag("--conjecture", probe_ack,
                      "acknowledge the exploratory nature of the probe");
  std::string probe_out;
  probe_cmd->add_option("--out", probe_out, "write the verdict here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (sigma_cmd->parsed())
      return cmd_sigma(sigma_alpha, opt_lambda->count() > 0, sigma_lambda,
                       opt_sigma->count() > 0, sigma_sigma);
    if (lstar_cmd->parsed()) {
      std::cout << "lambda_star="
                << hardyops::format_double(hardyops::lambda_star(lstar_alpha))
                << "\n";
      return 0;
    }
    if (verify_cmd->parsed())
      return cmd_verify(verify_cmd, verify_flags, verify_suite, verify_out);
    if (kernel_cmd->parsed())
      return cmd_kernel(kernel_cmd, kernel_flags, kernel_t, kernel_k,
                        kernel_arg, kernel_eps, kernel_stride, kernel_out);
    if (probe_cmd->parsed())
      return cmd_probe(probe_cmd, probe_flags, probe_ack, probe_out);
  } catch (const hardyops::admissibility_error& e) {
    std::cerr << "admissibility: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage: bad config file: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
