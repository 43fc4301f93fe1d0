#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hardyops {

// Parameter combinations outside the supported coupling window. The CLI maps
// this to its own exit code, so it must stay distinguishable from plain
// std::domain_error.
class admissibility_error : public std::domain_error {
 public:
  explicit admissibility_error(const std::string& what)
      : std::domain_error(what) {}
};

// Iteration caps exceeded, unstable assembly, eigensolver failures.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what)
      : std::runtime_error(what) {}
};

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

inline bool close_abs_or_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace hardyops
