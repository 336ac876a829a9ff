#pragma once

#include "minmetric/metric_cone.hpp"
#include "minmetric/types.hpp"

#include <functional>
#include <vector>

namespace minmetric {

struct OracleResult {
  RealVector alpha_star;
  double objective_value;
  long iterations;
  bool converged;
  std::vector<Index> active_set;  // indices pinned to the boundary alpha = -1
  double kkt_residual;
};

struct MinimizeOptions {
  double tol = 1e-10;       // KKT residual threshold
  long max_iter = 1000000;
  double step_scale = 1.0;  // multiplies the default step 1/(2L), L = lambda_max(2G)
  // Observer invoked once per iteration with the current objective value.
  std::function<void(long, double)> on_iterate;
};

// Projected gradient descent for min f(alpha) = c^T G c - 2 sum(c) + n over the
// box alpha >= -1, from the isotropic start alpha = 0 with a fixed step.
// Deliberately independent of the Euler-Lagrange route: no linear solve, no
// active-set guessing. Throws NotConverged at the iteration cap.
OracleResult minimize(const GramMatrix& G, const MinimizeOptions& opts = {});

// Agreement rule between the two routes: when the verdict is MetricExists the
// oracle must match alpha_el with an empty active set; otherwise the oracle
// must have pinned at least one coordinate to the boundary.
bool crosscheck(Verdict verdict, const RealVector& alpha_el, const OracleResult& oracle,
                double agree_tol = 1e-8);

}  // namespace minmetric
