#pragma once

#include "minmetric/biortho.hpp"
#include "minmetric/errors.hpp"
#include "minmetric/types.hpp"

namespace minmetric {

// Classification band around the cone boundary min(alpha) = -1.
inline constexpr double kBoundaryTol = 1e-9;

// G[n][m] = |<phi_m, phi_n>|^2 for the normalised phi family: symmetric, unit
// diagonal, entries in [0,1], and positive definite (checked at construction).
struct GramMatrix {
  RealMatrix g;

  Index size() const { return g.rows(); }
};

GramMatrix gram(const BiorthogonalSystem& sys);

// Wraps a raw matrix as a GramMatrix, enforcing symmetry/diagonal/range/positivity.
GramMatrix make_gram(const RealMatrix& g);

// A point of the metric cone: Theta(alpha) = sum_n (1 + alpha_n) phi_n <phi_n, .|.
struct MetricCandidate {
  RealVector alpha;
  ConeRegion classification;
  double hs_distance;  // ||Theta(alpha) - I||_HS
};

// Squared Hilbert-Schmidt distance ||Theta(alpha) - I||^2 via the exact trace
// identity c^T G c - 2 sum(c) + n with c = 1 + alpha. Defined for any alpha of
// matching length; cone membership is not enforced here (the Euler-Lagrange
// point legitimately leaves the cone in the non-existence regime).
double hs_objective(const GramMatrix& G, const RealVector& alpha);

// Gradient of hs_objective: 2 (G alpha + r) with r_n = sum_{m != n} G[n][m].
RealVector hs_gradient(const GramMatrix& G, const RealVector& alpha);

// Off-diagonal row sums r of G; the EL system reads G alpha = -r.
RealVector offdiagonal_row_sums(const GramMatrix& G);

// Interior <=> min(alpha) > -1 + kBoundaryTol. Throws Error when alpha lies
// outside the cone altogether (min below -1 beyond the tolerance band).
ConeRegion classify_cone(const RealVector& alpha);

MetricCandidate make_candidate(const GramMatrix& G, const RealVector& alpha);

// Theta(alpha) as a dense Hermitian matrix. Requires an interior alpha
// (NotInterior otherwise): boundary points have unbounded Theta^{-1}.
ComplexMatrix assemble_metric(const BiorthogonalSystem& sys, const RealVector& alpha);

// Reads alpha back off a metric: alpha_n = Re <phi_n, Theta psi_n> - 1.
RealVector characteristic_vector_of(const BiorthogonalSystem& sys, const ComplexMatrix& Theta);

// ||Theta H - H^dagger Theta||_F — zero exactly when Theta intertwines H with its adjoint.
double intertwining_residual(const ComplexMatrix& Theta, const ComplexMatrix& H);

// Smallest eigenvalue of a Hermitian matrix (positivity witness for metrics).
double hermitian_min_eigenvalue(const ComplexMatrix& A);

}  // namespace minmetric
