#include "minmetric/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace minmetric {

namespace {

// Legendre P_q and its derivative at x by the three-term recurrence.
void legendre(int q, double x, double& p, double& dp) {
  double prev = 1.0;
  double cur = x;
  for (int k = 2; k <= q; ++k) {
    const double next = ((2 * k - 1) * x * cur - (k - 1) * prev) / k;
    prev = cur;
    cur = next;
  }
  p = cur;
  dp = q * (x * cur - prev) / (x * x - 1.0);
}

}  // namespace

GaussLegendre::GaussLegendre(int npoints) {
  if (npoints < 1) throw Error("gauss-legendre: need at least one point");
  nodes.resize(npoints);
  weights.resize(npoints);

  for (int i = 0; i < npoints; ++i) {
    // Chebyshev-angle guess for the i-th root, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (npoints + 0.5));
    double p, dp;
    for (int iter = 0; iter < 100; ++iter) {
      legendre(npoints, x, p, dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(npoints, x, p, dp);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  std::vector<int> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return nodes[a] < nodes[b]; });
  std::vector<double> sorted_nodes(nodes.size()), sorted_weights(nodes.size());
  for (size_t k = 0; k < order.size(); ++k) {
    sorted_nodes[k] = nodes[order[k]];
    sorted_weights[k] = weights[order[k]];
  }
  nodes = std::move(sorted_nodes);
  weights = std::move(sorted_weights);
}

}  // namespace minmetric
