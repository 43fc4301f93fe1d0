#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hardyops/common.hpp"

namespace hardyops {

// Brent root finder on a bracketing interval. fa/fb are f(a), f(b) if already
// known (pass NaN to recompute). Caps at max_iter, throws on a bad bracket.
inline double brent_root(const std::function<double(double)>& f, double a,
                         double b, double tol, int max_iter = 200,
                         double fa = std::numeric_limits<double>::quiet_NaN(),
                         double fb = std::numeric_limits<double>::quiet_NaN()) {
  if (std::isnan(fa)) fa = f(a);
  if (std::isnan(fb)) fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw numeric_error("brent_root: endpoints do not bracket a root");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d; d = p / q;
      } else {
        d = xm; e = d;
      }
    } else {
      d = xm; e = d;
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = b - a; e = d; }
  }
  throw numeric_error("brent_root: iteration cap reached");
}

namespace detail {

inline double adaptive_simpson_rec(const std::function<double(double)>& f,
                                   double a, double b, double fa, double fm,
                                   double fb, double whole, double tol,
                                   int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0) throw numeric_error("adaptive_simpson: recursion depth exhausted");
  if (std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson on a finite interval; tol is an absolute target.
inline double integrate_adaptive(const std::function<double(double)>& f,
                                 double a, double b, double tol,
                                 int max_depth = 48) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// Integrate over [a, inf) by mapping the tail [T, inf) -> (0, 1/T] with
// t = 1/u. Breakpoints let callers isolate kinks or peaks first.
inline double integrate_to_infinity(const std::function<double(double)>& f,
                                    double a, const std::vector<double>& breaks,
                                    double tail_start, double tol) {
  double total = 0.0;
  double left = a;
  for (double brk : breaks) {
    if (brk <= left || brk >= tail_start) continue;
    total += integrate_adaptive(f, left, brk, tol);
    left = brk;
  }
  total += integrate_adaptive(f, left, tail_start, tol);
  auto tail = [&f](double u) { return f(1.0 / u) / (u * u); };
  total += integrate_adaptive(tail, 1.0 / tail_start * 1e-12, 1.0 / tail_start, tol);
  return total;
}

// Log-spaced grid from lo to hi inclusive, points_per_decade density.
inline std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  require(lo > 0.0 && hi > lo, "log_grid: need 0 < lo < hi");
  const double decades = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::ceil(decades * points_per_decade)) + 1);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  g.back() = hi;
  return g;
}

// Deterministic standard normal via Box-Muller on mt19937_64. Avoids
// std::normal_distribution, whose output is implementation-defined.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : eng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  double uniform() {
    return (eng_() >> 11) * 0x1.0p-53;  // [0,1) with 53 random bits
  }
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FNV-1a, used for config digests in reports.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Shortest-faithful double formatting used by every serialized artifact
// (JSON reports, CSV dumps): 17 significant digits, C locale semantics.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace hardyops
