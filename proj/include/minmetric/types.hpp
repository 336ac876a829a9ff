#pragma once

#include <Eigen/Dense>
#include <complex>

namespace minmetric {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Outcome of the constrained minimisation over the metric cone: either the
// Euler-Lagrange point is admissible (a bounded minimal metric with bounded
// inverse exists) or the infimum sits on the cone boundary and is not attained.
enum class Verdict { MetricExists, NoMinimalMetric };

// Where a characteristic vector sits relative to the cone boundary min(alpha) = -1.
enum class ConeRegion { Interior, Boundary };

inline const char* to_string(Verdict v) {
  return v == Verdict::MetricExists ? "MetricExists" : "NoMinimalMetric";
}

inline const char* to_string(ConeRegion r) {
  return r == ConeRegion::Interior ? "Interior" : "Boundary";
}

}  // namespace minmetric
