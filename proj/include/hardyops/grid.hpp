#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hardyops/common.hpp"

// Cell-centered grids on (0, x_max). Nodes are cell midpoints, weights are
// cell widths, so sum(weights) == x_max and quadrature is the midpoint rule.
// Two gradings: uniform, and a geometric boundary layer (constant cell-width
// ratio) for experiments with singular weights x^(-alpha s/2) near 0.

namespace hardyops {

struct GridSpec {
  enum class Kind { uniform, geometric };
  Kind kind = Kind::uniform;
  double ratio = 1.05;              // cell growth factor inside the layer
  double boundary_fraction = 0.025; // layer covers [0, boundary_fraction * x_max]

  static GridSpec uniform() { return GridSpec{}; }
  static GridSpec geometric(double ratio, double boundary_fraction) {
    GridSpec g;
    g.kind = Kind::geometric;
    g.ratio = ratio;
    g.boundary_fraction = boundary_fraction;
    return g;
  }

  std::string describe() const {
    if (kind == Kind::uniform) return "uniform";
    return "geometric(ratio=" + std::to_string(ratio) +
           ",boundary_fraction=" + std::to_string(boundary_fraction) + ")";
  }
};

struct Grid {
  std::vector<double> x;      // nodes, strictly increasing in (0, x_max)
  std::vector<double> w;      // weights (cell widths), positive
  std::vector<double> edges;  // n+1 cell edges, edges[0] = 0, edges[n] = x_max
  double x_max = 0.0;
  double h_min = 0.0;
  GridSpec spec;

  int n() const { return static_cast<int>(x.size()); }
};

inline Grid make_grid(int n, double x_max, const GridSpec& spec = GridSpec::uniform()) {
  require(n >= 8, "make_grid: need at least 8 cells");
  require(x_max > 0.0 && std::isfinite(x_max), "make_grid: x_max must be positive");

  Grid g;
  g.x_max = x_max;
  g.spec = spec;
  g.edges.resize(n + 1);
  g.edges[0] = 0.0;

  if (spec.kind == GridSpec::Kind::uniform) {
    for (int k = 1; k <= n; ++k) g.edges[k] = x_max * k / n;
  } else {
    require(spec.ratio > 1.0 && spec.ratio <= 2.0,
            "make_grid: geometric ratio must lie in (1, 2]");
    require(spec.boundary_fraction > 0.0 && spec.boundary_fraction < 1.0,
            "make_grid: boundary_fraction must lie in (0, 1)");
    const double rho = spec.ratio;
    const double layer = spec.boundary_fraction * x_max;
    // Smallest layer cell count whose innermost cell is no wider than the
    // uniform cells outside. The innermost width then tracks the uniform
    // width (within a factor rho), so refining n shrinks every scale of
    // the grid polynomially and the family stays comparable across sizes.
    // A fixed-ratio layer over a fixed interval has outermost cells of
    // intrinsic size ~ layer*(rho-1)/rho, so a bounded jump can remain at
    // the seam; only the inner scale is matched to the bulk.
    int ng = 2;
    while (ng < n - 2) {
      const double hu = (x_max - layer) / (n - ng);
      const double delta = layer * (rho - 1.0) / (std::pow(rho, ng) - 1.0);
      if (delta <= hu) break;
      ++ng;
    }
    const double denom = std::pow(rho, ng) - 1.0;
    for (int k = 1; k < ng; ++k)
      g.edges[k] = layer * (std::pow(rho, k) - 1.0) / denom;
    g.edges[ng] = layer;
    const int nu = n - ng;
    for (int j = 1; j < nu; ++j) g.edges[ng + j] = layer + (x_max - layer) * j / nu;
    g.edges[n] = x_max;
  }

  g.x.resize(n);
  g.w.resize(n);
  g.h_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    g.x[i] = 0.5 * (g.edges[i] + g.edges[i + 1]);
    g.w[i] = g.edges[i + 1] - g.edges[i];
    require(g.w[i] > 0.0, "make_grid: degenerate cell");
    g.h_min = std::min(g.h_min, g.w[i]);
  }
  return g;
}

}  // namespace hardyops
