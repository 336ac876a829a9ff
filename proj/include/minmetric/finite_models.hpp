#pragma once

#include "minmetric/errors.hpp"
#include "minmetric/types.hpp"

#include <array>
#include <cstdint>

namespace minmetric {

// Rank-two family H = lambda1 psi1 <phi1,.| + lambda2 psi2 <phi2,.| built from
// two unit vectors with |<phi1, phi2>| < 1; psi is the dual basis of phi.
struct TwoByTwoSpec {
  ComplexVector phi1{ComplexVector::Zero(2)};
  ComplexVector phi2{ComplexVector::Zero(2)};
  double lambda1 = 1.0;
  double lambda2 = 2.0;
};

// The worked special case: phi1 = (1,0), phi2 = (1,1)/sqrt(2), lambdas 1 < 2,
// whose matrix is exactly [[1, 0], [1, 2]].
TwoByTwoSpec two_by_two_default();

// Throws DegenerateVectors when the vectors are numerically (anti)parallel,
// Error on non-unit inputs or a non-increasing spectrum.
ComplexMatrix build_2x2(const TwoByTwoSpec& spec);

// Four-dimensional family with one distinguished direction: phi_1 = e_1 and
// phi_j = y e_1 + x e_j (y = sqrt(1 - x^2)) for j = 2,3,4, H = sum lambda_j psi_j <phi_j,.|.
// The minimal metric exists iff x > 1/sqrt(2).
struct FourByFourSpec {
  double x = 0.5;  // overlap parameter, in (0, 1)
  std::array<double, 4> lambdas{1.0, 2.0, 3.0, 4.0};
};

ComplexMatrix build_4x4(const FourByFourSpec& spec);

// Closed forms for the 4x4 EL solution alpha = (a, b, b, b).
double four_by_four_a(double x);
double four_by_four_b(double x);

// Similarity-transformed diagonal: H = S diag(1..n) S^{-1}, S = I + p R with R
// a complex Gaussian matrix scaled to operator norm 1. Deterministic in the
// seed. Resamples (up to a cap) when S is too ill-conditioned; throws
// ResamplesExhausted if every draw fails.
ComplexMatrix random_instance(int n, double perturbation, std::uint64_t seed);

}  // namespace minmetric
