#pragma once

#include "minmetric/biortho.hpp"
#include "minmetric/metric_cone.hpp"
#include "minmetric/oracle.hpp"
#include "minmetric/types.hpp"

#include <optional>

namespace minmetric {

// Full outcome of the minimal-metric analysis for one Gram matrix.
struct ElReport {
  RealVector alpha_el;        // solution of G alpha = -r (may leave the cone)
  Verdict verdict;
  bool marginal = false;      // min(alpha_el) inside the boundary tolerance band
  MetricCandidate minimizer;  // cone-constrained minimiser (EL point or boundary point)
  double el_residual;         // ||G alpha_el + r||_inf
  double sufficiency_sum;     // sum_n sum_{m != n} G[n][m]
  bool sufficiency_holds;     // sufficiency_sum < 1 (sufficient, not necessary)
  OracleResult oracle;
  bool oracle_agrees;

  // Populated by the operator-level analyze() when the metric exists.
  std::optional<ComplexMatrix> metric;
  std::optional<double> intertwining;            // ||Theta H - H^dagger Theta||_F
  std::optional<double> metric_min_eigenvalue;
};

// Solves G alpha = -r (Cholesky, pivoted-LU fallback). Throws SingularSystem.
RealVector solve_el(const GramMatrix& G);

// MetricExists iff min(alpha_el) > -1 + kBoundaryTol; ties inside the band
// classify as NoMinimalMetric (the marginal flag on ElReport records them).
Verdict classify(const RealVector& alpha_el);

struct SufficiencyCheck {
  double sum;
  bool holds;
};

// Smallness-of-coupling sufficient condition: sum_n sum_{m != n} G[n][m] < 1
// guarantees existence. Its failure decides nothing.
SufficiencyCheck sufficiency_check(const GramMatrix& G);

struct AnalyzeOptions {
  Tolerances tol;
  MinimizeOptions oracle;
};

// Gram-level pipeline: solve_el -> classify -> sufficiency -> oracle cross-check.
ElReport analyze_gram(const GramMatrix& G, const AnalyzeOptions& opts = {});

// Operator-level pipeline on a prepared eigensystem; when the metric exists it
// also assembles Theta(alpha_el) and embeds the intertwining and positivity
// witnesses against H.
ElReport analyze(const ComplexMatrix& H, const BiorthogonalSystem& sys,
                 const AnalyzeOptions& opts = {});

// Same, reconstructing the operator from the system itself.
ElReport analyze(const BiorthogonalSystem& sys, const AnalyzeOptions& opts = {});

}  // namespace minmetric
