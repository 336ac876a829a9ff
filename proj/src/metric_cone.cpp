#include "minmetric/metric_cone.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace minmetric {

GramMatrix make_gram(const RealMatrix& g) {
  if (g.rows() != g.cols() || g.rows() < 1)
    throw DimensionMismatch("gram: matrix must be square and nonempty");
  if (!g.allFinite()) throw Error("gram: non-finite entries");
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw Error("gram: not symmetric");
  if ((g.diagonal().array() - 1.0).abs().maxCoeff() > 1e-12)
    throw Error("gram: diagonal must be 1");
  if (g.minCoeff() < -1e-12 || g.maxCoeff() > 1.0 + 1e-12)
    throw Error("gram: entries must lie in [0, 1]");

  GramMatrix G{((g + g.transpose()) * 0.5).cwiseMax(0.0).cwiseMin(1.0)};
  G.g.diagonal().setOnes();

  Eigen::LLT<RealMatrix> llt(G.g);
  if (llt.info() != Eigen::Success)
    throw GramNotPositiveDefinite("gram: matrix is not positive definite");
  return G;
}

GramMatrix gram(const BiorthogonalSystem& sys) {
  const ComplexMatrix overlaps = sys.phi.adjoint() * sys.phi;
  return make_gram(overlaps.cwiseAbs2());
}

double hs_objective(const GramMatrix& G, const RealVector& alpha) {
  if (alpha.size() != G.size())
    throw DimensionMismatch("hs_objective: alpha length does not match gram size");
  const RealVector c = alpha.array() + 1.0;
  return c.dot(G.g * c) - 2.0 * c.sum() + static_cast<double>(G.size());
}

RealVector hs_gradient(const GramMatrix& G, const RealVector& alpha) {
  if (alpha.size() != G.size())
    throw DimensionMismatch("hs_gradient: alpha length does not match gram size");
  return 2.0 * (G.g * alpha + offdiagonal_row_sums(G));
}

RealVector offdiagonal_row_sums(const GramMatrix& G) {
  return G.g.rowwise().sum().array() - 1.0;  // unit diagonal
}

ConeRegion classify_cone(const RealVector& alpha) {
  if (alpha.size() < 1) throw DimensionMismatch("classify_cone: empty vector");
  const double low = alpha.minCoeff();
  if (low < -1.0 - kBoundaryTol) throw Error("classify_cone: vector outside the cone");
  return low > -1.0 + kBoundaryTol ? ConeRegion::Interior : ConeRegion::Boundary;
}

MetricCandidate make_candidate(const GramMatrix& G, const RealVector& alpha) {
  MetricCandidate cand;
  cand.classification = classify_cone(alpha);
  cand.hs_distance = std::sqrt(std::max(0.0, hs_objective(G, alpha)));
  cand.alpha = alpha;
  return cand;
}

ComplexMatrix assemble_metric(const BiorthogonalSystem& sys, const RealVector& alpha) {
  if (alpha.size() != sys.size())
    throw DimensionMismatch("assemble_metric: alpha length does not match system size");
  if (alpha.minCoeff() <= -1.0 + kBoundaryTol)
    throw NotInterior("assemble_metric: characteristic vector not in the cone interior");
  const RealVector c = alpha.array() + 1.0;
  ComplexMatrix theta = sys.phi * c.asDiagonal() * sys.phi.adjoint();
  return (theta + theta.adjoint()) / 2.0;  // exact Hermitian symmetry
}

RealVector characteristic_vector_of(const BiorthogonalSystem& sys, const ComplexMatrix& Theta) {
  if (Theta.rows() != sys.size() || Theta.cols() != sys.size())
    throw DimensionMismatch("characteristic_vector_of: metric and system sizes differ");
  return (sys.phi.adjoint() * Theta * sys.psi).diagonal().real().array() - 1.0;
}

double intertwining_residual(const ComplexMatrix& Theta, const ComplexMatrix& H) {
  if (Theta.rows() != H.rows() || Theta.cols() != H.cols() || H.rows() != H.cols())
    throw DimensionMismatch("intertwining_residual: size mismatch");
  return (Theta * H - H.adjoint() * Theta).norm();
}

double hermitian_min_eigenvalue(const ComplexMatrix& A) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(A, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace minmetric
