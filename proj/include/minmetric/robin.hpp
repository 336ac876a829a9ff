#pragma once

#include "minmetric/elsolve.hpp"
#include "minmetric/errors.hpp"
#include "minmetric/metric_cone.hpp"
#include "minmetric/types.hpp"

#include <vector>

namespace minmetric {

// Laplacian on (-pi/2, pi/2) with the complex Robin condition
// u'(+-pi/2) + i beta u(+-pi/2) = 0. Real spectrum beta^2, 1, 4, 9, ...;
// the analysis works with the first truncation+1 modes.
struct RobinModel {
  RobinModel(double beta, int truncation, int quad_order = 64);

  double beta;
  int truncation;  // highest mode index N; modes 0..N enter the analysis
  int quad_order;  // Gauss-Legendre points per quadrature panel
};

// lambda_0 = beta^2, lambda_n = n^2.
double eigenvalue(const RobinModel& model, int n);

// Norm factor of phi_n: B_0 = 1/sqrt(pi), B_n = sqrt(2/pi) n / sqrt(n^2 + beta^2).
double b_normalizer(const RobinModel& model, int n);

// Pairing factor of psi_n, fixed by <psi_n, phi_n> = 1. Complex for n = 0.
Complex a_normalizer(const RobinModel& model, int n);

// Adjoint-problem eigenfunctions, unit norm: phi_n(x) = B_n (cos(n(x + pi/2)) + ...).
Complex phi(const RobinModel& model, int n, double x);

// Direct-problem eigenfunctions, scaled against phi: psi_n = A_n (cos + i beta/n sin).
Complex psi(const RobinModel& model, int n, double x);

// d/dx psi_n — closed form, used for boundary-condition checks.
Complex psi_derivative(const RobinModel& model, int n, double x);

// Overlap a_nm = <phi_n, phi_m> in closed form. Exactly zero for n, m >= 1
// with n + m even (parity selection rule, implemented as such), and 1 on the
// diagonal.
Complex gram_coefficient(const RobinModel& model, int n, int m);

// Same overlap by composite Gauss-Legendre quadrature (independent route).
Complex gram_coefficient_quadrature(const RobinModel& model, int n, int m);

// (N+1) x (N+1) Gram matrix with entries |a_nm|^2.
GramMatrix gram_matrix(const RobinModel& model);

// Quadrature witnesses for the normalisation conventions.
Complex biortho_pairing_quadrature(const RobinModel& model, int n);  // <psi_n, phi_n>
double phi_norm_quadrature(const RobinModel& model, int n);          // ||phi_n||

// Closed-form bound on the total off-diagonal Gram weight,
// (64 beta^2 / pi^2)(2 pi^2 - 16 + pi^4 / 72), valid for beta in (0, 1/2).
double sufficiency_bound(double beta);

// sum_n sum_{m != n} |a_nm|^2 over the truncated mode set; increases with the
// truncation and stays below sufficiency_bound(beta).
double truncated_sufficiency_sum(const RobinModel& model);

struct TruncationStage {
  int truncation;
  Verdict verdict;
  RealVector alpha_el;
  // max |alpha_n - alpha_n(previous stage)| over the shared indices; NaN on the
  // first stage.
  double max_delta_vs_prev;
};

// Analysis at the full truncation plus a convergence ladder at N/4 and N/2.
// Verdicts are per-truncation statements; no claim about the untruncated
// operator is made.
struct RobinAnalysis {
  ElReport report;
  std::vector<TruncationStage> stages;
};

RobinAnalysis truncated_analyze(const RobinModel& model, const AnalyzeOptions& opts = {});

// Kernel of the conjugation-symmetry metric candidate:
// k(x, y) = beta e^{-i beta (y - x)} (tan(pi beta / 2) - i sign(y - x)),
// with sign(0) = 0. Throws TanPole near odd integers, BetaOutOfRange at other
// nonzero integers.
Complex csym_kernel(double beta, double x, double y);

// Slope at the origin of the lowest diagonal matrix element of the candidate,
// equal to 2 beta pi tan(pi beta / 2); computed by double quadrature split
// along the kernel's diagonal discontinuity.
double csym_f0_prime(double beta, int quad_order = 64);

// Characteristic vector of the conjugation-symmetry candidate:
// alpha_n = Re <phi_n, K psi_n> with K the integral operator for csym_kernel.
RealVector csym_characteristic_vector(const RobinModel& model);

}  // namespace minmetric
