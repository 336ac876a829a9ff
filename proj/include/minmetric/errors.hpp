#pragma once

#include <stdexcept>

namespace minmetric {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Spectrum of the input operator is not real within tolerance.
class NonRealSpectrum : public Error { public: using Error::Error; };

// Two eigenvalues closer than the gap tolerance: no canonical biorthogonal pairing.
class DegenerateSpectrum : public Error { public: using Error::Error; };

// Eigensolver failure or a numerically defective eigenvector pairing.
class NotDiagonalizable : public Error { public: using Error::Error; };

// Gram matrix of the normalised eigenvectors failed the positivity check.
class GramNotPositiveDefinite : public Error { public: using Error::Error; };

class DimensionMismatch : public Error { public: using Error::Error; };

// Metric assembly requested at or below the cone boundary.
class NotInterior : public Error { public: using Error::Error; };

// Euler-Lagrange system could not be solved (Gram matrix numerically singular).
class SingularSystem : public Error { public: using Error::Error; };

// Iterative minimiser hit its iteration cap above the convergence tolerance.
class NotConverged : public Error { public: using Error::Error; };

// Two-by-two model vectors (anti)parallel: the family degenerates.
class DegenerateVectors : public Error { public: using Error::Error; };

// Random instance rejection loop exhausted without an acceptably conditioned draw.
class ResamplesExhausted : public Error { public: using Error::Error; };

// Robin parameter collides with a nonzero integer (spectrum degenerates).
class BetaOutOfRange : public Error { public: using Error::Error; };

// Conjugation kernel evaluated at a pole of tan(pi*beta/2).
class TanPole : public Error { public: using Error::Error; };

// Eigenfunction index beyond the configured truncation order.
class IndexOutOfTruncation : public Error { public: using Error::Error; };

class ParseError : public Error { public: using Error::Error; };

}  // namespace minmetric
