#include "minmetric/biortho.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace minmetric {

namespace {

// First component with non-negligible modulus; anchors the phase convention.
Index leading_index(const ComplexVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > 1e-8) return i;
  return 0;
}

std::vector<Index> ascending_order(const ComplexVector& values) {
  std::vector<Index> order(values.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (values[a].real() != values[b].real()) return values[a].real() < values[b].real();
    return values[a].imag() < values[b].imag();
  });
  return order;
}

}  // namespace

BiorthogonalSystem eigensystem(const ComplexMatrix& H, const Tolerances& tol) {
  if (H.rows() != H.cols() || H.rows() < 1)
    throw DimensionMismatch("eigensystem: operator must be square and nonempty");
  if (!H.allFinite()) throw Error("eigensystem: operator has non-finite entries");

  const Index n = H.rows();
  const double eig_tol = tol.eig_rel * H.norm();

  Eigen::ComplexEigenSolver<ComplexMatrix> direct(H, true);
  Eigen::ComplexEigenSolver<ComplexMatrix> adjoint(H.adjoint(), true);
  if (direct.info() != Eigen::Success || adjoint.info() != Eigen::Success)
    throw NotDiagonalizable("eigensystem: dense eigensolver did not converge");

  for (Index k = 0; k < n; ++k)
    if (std::abs(direct.eigenvalues()[k].imag()) > eig_tol)
      throw NonRealSpectrum("eigensystem: eigenvalue with imaginary part above tolerance");

  const auto order_d = ascending_order(direct.eigenvalues());
  const auto order_a = ascending_order(adjoint.eigenvalues());

  RealVector lambda(n);
  for (Index k = 0; k < n; ++k) lambda[k] = direct.eigenvalues()[order_d[k]].real();

  const double diameter = lambda[n - 1] - lambda[0];
  const double gap_tol = tol.gap_rel * diameter;
  for (Index k = 0; k + 1 < n; ++k)
    if (lambda[k + 1] - lambda[k] <= gap_tol)
      throw DegenerateSpectrum("eigensystem: eigenvalue gap below tolerance");

  // The adjoint spectrum is the complex conjugate of the direct one; after
  // sorting, position k must name the same eigenvalue on both sides or the
  // nearest-eigenvalue pairing is ambiguous.
  const double pair_tol = std::max(gap_tol, eig_tol);
  for (Index k = 0; k < n; ++k) {
    const Complex mu = adjoint.eigenvalues()[order_a[k]];
    if (std::abs(mu - Complex(lambda[k], 0.0)) > pair_tol)
      throw DegenerateSpectrum("eigensystem: direct/adjoint eigenvalue pairing is ambiguous");
  }

  ComplexMatrix phi(n, n);
  for (Index k = 0; k < n; ++k) {
    ComplexVector v = adjoint.eigenvectors().col(order_a[k]);
    v /= v.norm();
    const Complex anchor = v[leading_index(v)];
    v *= std::abs(anchor) / anchor;
    phi.col(k) = v;
  }

  ComplexMatrix psi(n, n);
  for (Index k = 0; k < n; ++k) {
    const ComplexVector w = direct.eigenvectors().col(order_d[k]);
    const Complex d = w.dot(phi.col(k));  // antilinear in the first argument
    if (std::abs(d) < 1e-12)
      throw NotDiagonalizable("eigensystem: eigenvector pairing numerically defective");
    psi.col(k) = w / std::conj(d);
  }

  BiorthogonalSystem sys{std::move(lambda), std::move(psi), std::move(phi)};

  if (eigen_residual(H, sys) > eig_tol)
    throw NotDiagonalizable("eigensystem: eigen-equation residual above tolerance");
  if (biorthogonality_residual(sys) > tol.biortho)
    throw NotDiagonalizable("eigensystem: biorthogonality residual above tolerance");
  return sys;
}

double resolution_of_identity_residual(const BiorthogonalSystem& sys) {
  const Index n = sys.size();
  return (ComplexMatrix::Identity(n, n) - sys.psi * sys.phi.adjoint()).norm();
}

double biorthogonality_residual(const BiorthogonalSystem& sys) {
  const Index n = sys.size();
  const ComplexMatrix pairing = sys.psi.adjoint() * sys.phi;
  return (pairing - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

double eigen_residual(const ComplexMatrix& H, const BiorthogonalSystem& sys) {
  if (H.rows() != sys.size() || H.cols() != sys.size())
    throw DimensionMismatch("eigen_residual: operator and system sizes differ");
  double worst = 0.0;
  const ComplexMatrix Hadj = H.adjoint();
  for (Index k = 0; k < sys.size(); ++k) {
    const double lam = sys.eigenvalues[k];
    worst = std::max(worst, (H * sys.psi.col(k) - lam * sys.psi.col(k)).norm());
    worst = std::max(worst, (Hadj * sys.phi.col(k) - lam * sys.phi.col(k)).norm());
  }
  return worst;
}

ComplexMatrix reconstruct_operator(const BiorthogonalSystem& sys) {
  return sys.psi * sys.eigenvalues.asDiagonal() * sys.phi.adjoint();
}

}  // namespace minmetric
