#include "minmetric/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace minmetric {

namespace {

// KKT residual over the box alpha >= -1: active coordinates need a
// nonnegative gradient, free coordinates a vanishing one.
double kkt_residual(const RealVector& alpha, const RealVector& grad) {
  double worst = 0.0;
  for (Index i = 0; i < alpha.size(); ++i) {
    const double violation =
        alpha[i] <= -1.0 ? std::max(0.0, -grad[i]) : std::abs(grad[i]);
    worst = std::max(worst, violation);
  }
  return worst;
}

}  // namespace

OracleResult minimize(const GramMatrix& G, const MinimizeOptions& opts) {
  if (opts.tol <= 0.0) throw Error("minimize: tolerance must be positive");
  if (opts.max_iter < 0) throw Error("minimize: negative iteration cap");

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(G.g, Eigen::EigenvaluesOnly);
  const double lipschitz = 2.0 * es.eigenvalues().maxCoeff();  // of the gradient
  const double step = opts.step_scale / (2.0 * lipschitz);

  RealVector alpha = RealVector::Zero(G.size());  // the isotropic candidate
  const RealVector r = offdiagonal_row_sums(G);

  long iterations = 0;
  double residual;
  while (true) {
    const RealVector grad = 2.0 * (G.g * alpha + r);
    residual = kkt_residual(alpha, grad);
    if (residual <= opts.tol) break;
    if (iterations >= opts.max_iter)
      throw NotConverged("minimize: iteration cap reached above KKT tolerance");
    alpha = (alpha - step * grad).cwiseMax(-1.0);
    ++iterations;
    if (opts.on_iterate) opts.on_iterate(iterations, hs_objective(G, alpha));
  }

  OracleResult result;
  result.objective_value = hs_objective(G, alpha);
  result.iterations = iterations;
  result.converged = true;
  result.kkt_residual = residual;
  for (Index i = 0; i < alpha.size(); ++i)
    if (alpha[i] <= -1.0) result.active_set.push_back(i);
  result.alpha_star = std::move(alpha);
  return result;
}

bool crosscheck(Verdict verdict, const RealVector& alpha_el, const OracleResult& oracle,
                double agree_tol) {
  if (!oracle.converged) return false;
  if (verdict == Verdict::MetricExists)
    return oracle.active_set.empty() &&
           (alpha_el - oracle.alpha_star).cwiseAbs().maxCoeff() <= agree_tol;
  return !oracle.active_set.empty();
}

}  // namespace minmetric
