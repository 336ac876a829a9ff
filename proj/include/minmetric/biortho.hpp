#pragma once

#include "minmetric/errors.hpp"
#include "minmetric/types.hpp"

namespace minmetric {

// All inner products are antilinear in the first argument: <u, v> = u^dagger v.

struct Tolerances {
  double eig_rel = 1e-9;   // eigen-residual bound, relative to ||H||_F
  double biortho = 1e-10;  // |<psi_m, phi_n> - delta_nm| and |  ||phi_n|| - 1 |
  double gap_rel = 1e-8;   // minimal eigenvalue gap, relative to the spectral diameter
};

// Eigenvalues sorted ascending. psi.col(k) is an eigenvector of H, phi.col(k)
// of H^dagger for the same eigenvalue. Normalisation: ||phi_k|| = 1 with the
// leading nonzero component of phi_k real positive, and <psi_m, phi_n> = delta_nm.
struct BiorthogonalSystem {
  RealVector eigenvalues;
  ComplexMatrix psi;
  ComplexMatrix phi;

  Index size() const { return eigenvalues.size(); }
};

// Diagonalises H and its adjoint, pairs the spectra, and applies the
// normalisation above. Throws NonRealSpectrum, DegenerateSpectrum,
// NotDiagonalizable, or DimensionMismatch.
BiorthogonalSystem eigensystem(const ComplexMatrix& H, const Tolerances& tol = {});

// Frobenius norm of I - sum_n psi_n <phi_n, .|; small for a valid system.
double resolution_of_identity_residual(const BiorthogonalSystem& sys);

// Largest deviation |<psi_m, phi_n> - delta_nm| over all pairs.
double biorthogonality_residual(const BiorthogonalSystem& sys);

// Largest eigen-equation residual over both vector families:
// max_n of ||H psi_n - lambda_n psi_n|| and ||H^dagger phi_n - lambda_n phi_n||.
double eigen_residual(const ComplexMatrix& H, const BiorthogonalSystem& sys);

// Reassembles sum_n lambda_n psi_n <phi_n, .| — the operator the system represents.
ComplexMatrix reconstruct_operator(const BiorthogonalSystem& sys);

}  // namespace minmetric
