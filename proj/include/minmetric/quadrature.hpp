#pragma once

#include "minmetric/errors.hpp"

#include <vector>

namespace minmetric {

// Gauss-Legendre rule on (-1, 1): nodes from Newton iteration on the Legendre
// polynomial (Chebyshev initial guesses), weights 2 / ((1 - x^2) P'^2).
struct GaussLegendre {
  explicit GaussLegendre(int npoints);

  std::vector<double> nodes;    // ascending
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Composite rule: [a, b] cut into `panels` equal panels, `rule` applied to each.
template <class F>
auto integrate(const F& f, double a, double b, const GaussLegendre& rule, int panels = 1)
    -> decltype(f(0.0) * 0.0) {
  using Value = decltype(f(0.0) * 0.0);
  Value total{};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    const double half = 0.5 * h;
    for (int i = 0; i < rule.size(); ++i)
      total += (half * rule.weights[i]) * f(mid + half * rule.nodes[i]);
  }
  return total;
}

// Double integral of f(x, y) over [a, b]^2, with the inner integral split at
// y = x so integrands with a jump across the diagonal are integrated on the
// two smooth triangles separately.
template <class F>
auto integrate_square_diagonal_split(const F& f, double a, double b, const GaussLegendre& rule,
                                     int panels = 1) -> decltype(f(0.0, 0.0) * 0.0) {
  auto outer = [&](double x) {
    auto lower = integrate([&](double y) { return f(x, y); }, a, x, rule, panels);
    auto upper = integrate([&](double y) { return f(x, y); }, x, b, rule, panels);
    return lower + upper;
  };
  return integrate(outer, a, b, rule, panels);
}

}  // namespace minmetric
