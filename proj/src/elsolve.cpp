#include "minmetric/elsolve.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <cmath>

namespace minmetric {

RealVector solve_el(const GramMatrix& G) {
  const RealVector rhs = -offdiagonal_row_sums(G);
  Eigen::LLT<RealMatrix> llt(G.g);
  if (llt.info() == Eigen::Success) return llt.solve(rhs);
  // Positive definiteness can fail numerically near degeneracy; a pivoted
  // solve gets one more chance before giving up.
  Eigen::FullPivLU<RealMatrix> lu(G.g);
  if (!lu.isInvertible()) throw SingularSystem("solve_el: gram matrix numerically singular");
  return lu.solve(rhs);
}

Verdict classify(const RealVector& alpha_el) {
  if (alpha_el.size() < 1) throw DimensionMismatch("classify: empty vector");
  return alpha_el.minCoeff() > -1.0 + kBoundaryTol ? Verdict::MetricExists
                                                   : Verdict::NoMinimalMetric;
}

SufficiencyCheck sufficiency_check(const GramMatrix& G) {
  const double sum = offdiagonal_row_sums(G).sum();
  return {sum, sum < 1.0};
}

ElReport analyze_gram(const GramMatrix& G, const AnalyzeOptions& opts) {
  ElReport rep;
  rep.alpha_el = solve_el(G);
  rep.el_residual =
      (G.g * rep.alpha_el + offdiagonal_row_sums(G)).cwiseAbs().maxCoeff();
  rep.verdict = classify(rep.alpha_el);
  rep.marginal = std::abs(rep.alpha_el.minCoeff() + 1.0) <= kBoundaryTol;

  const SufficiencyCheck suff = sufficiency_check(G);
  rep.sufficiency_sum = suff.sum;
  rep.sufficiency_holds = suff.holds;

  rep.oracle = minimize(G, opts.oracle);
  rep.oracle_agrees = crosscheck(rep.verdict, rep.alpha_el, rep.oracle);

  // The cone-constrained minimiser: the EL point itself when interior,
  // otherwise the boundary point the oracle located.
  rep.minimizer = make_candidate(
      G, rep.verdict == Verdict::MetricExists ? rep.alpha_el : rep.oracle.alpha_star);
  return rep;
}

ElReport analyze(const ComplexMatrix& H, const BiorthogonalSystem& sys,
                 const AnalyzeOptions& opts) {
  ElReport rep = analyze_gram(gram(sys), opts);
  if (rep.verdict == Verdict::MetricExists) {
    ComplexMatrix theta = assemble_metric(sys, rep.alpha_el);
    rep.intertwining = intertwining_residual(theta, H);
    rep.metric_min_eigenvalue = hermitian_min_eigenvalue(theta);
    rep.metric = std::move(theta);
  }
  return rep;
}

ElReport analyze(const BiorthogonalSystem& sys, const AnalyzeOptions& opts) {
  return analyze(reconstruct_operator(sys), sys, opts);
}

}  // namespace minmetric
