#include "minmetric/finite_models.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <random>

namespace minmetric {

namespace {

// Dual basis: columns of (Phi^dagger)^{-1}, so that <psi_m, phi_n> = delta_nm exactly.
ComplexMatrix dual_basis(const ComplexMatrix& phi) {
  return phi.adjoint().inverse();
}

double operator_norm(const ComplexMatrix& m) {
  return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

}  // namespace

TwoByTwoSpec two_by_two_default() {
  TwoByTwoSpec spec;
  spec.phi1 << 1.0, 0.0;
  spec.phi2 << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return spec;
}

ComplexMatrix build_2x2(const TwoByTwoSpec& spec) {
  if (spec.phi1.size() != 2 || spec.phi2.size() != 2)
    throw DimensionMismatch("build_2x2: vectors must have length 2");
  if (std::abs(spec.phi1.norm() - 1.0) > 1e-12 || std::abs(spec.phi2.norm() - 1.0) > 1e-12)
    throw Error("build_2x2: vectors must be unit norm");
  if (!(spec.lambda1 < spec.lambda2)) throw Error("build_2x2: eigenvalues must be increasing");
  if (std::abs(spec.phi1.dot(spec.phi2)) >= 1.0 - 1e-12)
    throw DegenerateVectors("build_2x2: vectors are numerically parallel");

  ComplexMatrix phi(2, 2);
  phi.col(0) = spec.phi1;
  phi.col(1) = spec.phi2;
  RealVector lambdas(2);
  lambdas << spec.lambda1, spec.lambda2;
  return dual_basis(phi) * lambdas.asDiagonal() * phi.adjoint();
}

ComplexMatrix build_4x4(const FourByFourSpec& spec) {
  if (!(spec.x > 0.0 && spec.x < 1.0)) throw Error("build_4x4: x must lie in (0, 1)");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (spec.lambdas[i] == spec.lambdas[j]) throw Error("build_4x4: eigenvalues must be distinct");

  const double y = std::sqrt(1.0 - spec.x * spec.x);
  ComplexMatrix phi = ComplexMatrix::Zero(4, 4);
  phi(0, 0) = 1.0;
  for (int j = 1; j < 4; ++j) {
    phi(0, j) = y;
    phi(j, j) = spec.x;
  }
  RealVector lambdas(4);
  for (int i = 0; i < 4; ++i) lambdas[i] = spec.lambdas[static_cast<size_t>(i)];
  return dual_basis(phi) * lambdas.asDiagonal() * phi.adjoint();
}

double four_by_four_a(double x) {
  const double y2 = 1.0 - x * x;
  return -3.0 * y2 / (y2 + 1.0);
}

double four_by_four_b(double x) {
  const double y2 = 1.0 - x * x;
  return -y2 / (y2 + 1.0);
}

ComplexMatrix random_instance(int n, double perturbation, std::uint64_t seed) {
  if (n < 2) throw Error("random_instance: need dimension at least 2");
  if (!(perturbation >= 0.0 && perturbation < 1.0))
    throw Error("random_instance: perturbation must lie in [0, 1)");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  constexpr int kMaxResamples = 100;

  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    ComplexMatrix R(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        R(i, j) = Complex(re, im) / std::sqrt(2.0);
      }
    R /= operator_norm(R);

    ComplexMatrix S = ComplexMatrix::Identity(n, n) + perturbation * R;
    Eigen::JacobiSVD<ComplexMatrix> svd(S);
    // ||perturbation * R||_2 < 1 makes S invertible in theory; reject the
    // rare numerically marginal draw instead of returning garbage.
    if (svd.singularValues()(n - 1) < 1e-6) continue;

    RealVector d(n);
    for (Index k = 0; k < n; ++k) d[k] = static_cast<double>(k + 1);
    return S * d.asDiagonal() * S.partialPivLu().inverse();
  }
  throw ResamplesExhausted("random_instance: no acceptably conditioned draw");
}

}  // namespace minmetric
