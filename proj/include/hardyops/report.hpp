#pragma once
// Verdict bookkeeping for the verification suites and its JSON wire form.
// Reports must be byte-identical across reruns with the same config, so
// checks keep their metrics in insertion order and nothing here touches
// clocks, locales, or iteration order of hashed containers.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hardyops/numerics.hpp"

namespace hardyops {

struct CheckResult {
  std::string name;
  std::string status;  // PASS, FAIL, WARN, EXPECTED-DIVERGENCE, INCONCLUSIVE
  std::vector<std::pair<std::string, double>> metrics;
  std::string claim;  // stable slug naming the statement being verified

  bool failed() const { return status == "FAIL"; }
};

inline CheckResult make_check(
    std::string name, bool pass, std::string claim,
    std::vector<std::pair<std::string, double>> metrics) {
  CheckResult c;
  c.name = std::move(name);
  c.status = pass ? "PASS" : "FAIL";
  c.metrics = std::move(metrics);
  c.claim = std::move(claim);
  return c;
}

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (c.failed()) return false;
    return true;
  }

  void append(const SuiteResult& other) {
    for (const auto& c : other.checks) {
      CheckResult prefixed = c;
      prefixed.name = other.suite + "/" + c.name;
      checks.push_back(std::move(prefixed));
    }
  }
};

// Wire schema: {suite, config_digest, checks: [{name, status, metrics{},
// paper_ref}]}. paper_ref carries the claim slug. Exit-code policy treats
// every status except FAIL as non-failing; the probe statuses exist so an
// inconclusive divergence probe can never masquerade as a silent PASS.
inline nlohmann::ordered_json report_to_json(const SuiteResult& result,
                                             const std::string& config_digest) {
  nlohmann::ordered_json root;
  root["suite"] = result.suite;
  root["config_digest"] = config_digest;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : result.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    nlohmann::ordered_json metrics(nlohmann::json::value_t::object);
    for (const auto& [key, value] : c.metrics) metrics[key] = value;
    jc["metrics"] = metrics;
    jc["paper_ref"] = c.claim;
    checks.push_back(std::move(jc));
  }
  root["checks"] = std::move(checks);
  return root;
}

inline std::string render_report(const SuiteResult& result,
                                 const std::string& config_digest) {
  return report_to_json(result, config_digest).dump(2) + "\n";
}

}  // namespace hardyops
