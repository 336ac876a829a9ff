#include "minmetric/robin.hpp"

#include "minmetric/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace minmetric {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfWidth = kPi / 2.0;  // interval (-pi/2, pi/2)

void check_index(const RobinModel& model, int n) {
  if (n < 0 || n > model.truncation)
    throw IndexOutOfTruncation("robin: mode index outside the truncated range");
}

// Composite-rule panel count for integrands oscillating like the given mode:
// roughly four points per half-oscillation plus a safety margin.
int panels_for(int modes, int quad_order) {
  const int target = 4 * (modes + 8);
  return std::max(2, (target + quad_order - 1) / quad_order);
}

void check_csym_beta(double beta) {
  const double nearest_odd = 2.0 * std::round((beta - 1.0) / 2.0) + 1.0;
  if (std::abs(beta - nearest_odd) < 1e-8)
    throw TanPole("robin: conjugation kernel has a tan pole at odd integer beta");
  const double nearest = std::round(beta);
  if (nearest != 0.0 && std::abs(beta - nearest) <= 1e-8)
    throw BetaOutOfRange("robin: beta too close to a nonzero integer");
}

double sign_of(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }

}  // namespace

RobinModel::RobinModel(double beta_, int truncation_, int quad_order_)
    : beta(beta_), truncation(truncation_), quad_order(quad_order_) {
  if (!std::isfinite(beta)) throw BetaOutOfRange("robin: beta must be finite");
  const double nearest = std::round(beta);
  if (nearest != 0.0 && std::abs(beta - nearest) <= 1e-8)
    throw BetaOutOfRange("robin: beta within 1e-8 of a nonzero integer (spectrum degenerates)");
  if (truncation < 1) throw Error("robin: truncation must be at least 1");
  if (quad_order < 2) throw Error("robin: need at least two quadrature points per panel");
}

double eigenvalue(const RobinModel& model, int n) {
  check_index(model, n);
  return n == 0 ? model.beta * model.beta : static_cast<double>(n) * n;
}

double b_normalizer(const RobinModel& model, int n) {
  check_index(model, n);
  if (n == 0) return 1.0 / std::sqrt(kPi);
  return std::sqrt(2.0 / kPi) * n / std::sqrt(n * n + model.beta * model.beta);
}

Complex a_normalizer(const RobinModel& model, int n) {
  check_index(model, n);
  const double beta = model.beta;
  if (n == 0) {
    if (beta == 0.0) return 1.0 / std::sqrt(kPi);
    // fixed by <psi_0, phi_0> = conj(A_0) B_0 e^{i pi beta} sin(pi beta) / beta = 1
    return std::sqrt(kPi) * beta * std::polar(1.0, kPi * beta) / std::sin(kPi * beta);
  }
  const double bn = b_normalizer(model, n);
  return 1.0 / (bn * kHalfWidth * (1.0 - beta * beta / (static_cast<double>(n) * n)));
}

Complex phi(const RobinModel& model, int n, double x) {
  check_index(model, n);
  const double t = x + kHalfWidth;
  if (n == 0) return b_normalizer(model, 0) * std::polar(1.0, model.beta * t);
  return b_normalizer(model, n) *
         Complex(std::cos(n * t), (model.beta / n) * std::sin(n * t));
}

Complex psi(const RobinModel& model, int n, double x) {
  check_index(model, n);
  const double t = x + kHalfWidth;
  if (n == 0) return a_normalizer(model, 0) * std::polar(1.0, -model.beta * t);
  return a_normalizer(model, n) *
         Complex(std::cos(n * t), -(model.beta / n) * std::sin(n * t));
}

Complex psi_derivative(const RobinModel& model, int n, double x) {
  check_index(model, n);
  const double t = x + kHalfWidth;
  if (n == 0)
    return a_normalizer(model, 0) * Complex(0.0, -model.beta) * std::polar(1.0, -model.beta * t);
  return a_normalizer(model, n) *
         Complex(-static_cast<double>(n) * std::sin(n * t), -model.beta * std::cos(n * t));
}

Complex gram_coefficient(const RobinModel& model, int n, int m) {
  check_index(model, n);
  check_index(model, m);
  if (n == m) return 1.0;
  const double beta = model.beta;
  if (n >= 1 && m >= 1) {
    if ((n + m) % 2 == 0) return 0.0;  // parity selection rule, exact
    const double bn = b_normalizer(model, n);
    const double bm = b_normalizer(model, m);
    return Complex(0.0, 4.0 * bn * bm * beta /
                            (static_cast<double>(m) * m - static_cast<double>(n) * n));
  }
  if (m == 0) {
    const double bn = b_normalizer(model, n);
    const double b0 = b_normalizer(model, 0);
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    const Complex phase = std::polar(1.0, kPi * beta);
    return 2.0 * bn * b0 * Complex(0.0, beta) * (1.0 - parity * phase) /
           (beta * beta - static_cast<double>(n) * n);
  }
  return std::conj(gram_coefficient(model, m, n));  // n == 0, m >= 1
}

Complex gram_coefficient_quadrature(const RobinModel& model, int n, int m) {
  check_index(model, n);
  check_index(model, m);
  const GaussLegendre rule(model.quad_order);
  const int panels = panels_for(n + m, model.quad_order);
  return integrate(
      [&](double x) { return std::conj(phi(model, n, x)) * phi(model, m, x); },
      -kHalfWidth, kHalfWidth, rule, panels);
}

GramMatrix gram_matrix(const RobinModel& model) {
  const int n = model.truncation + 1;
  RealMatrix g = RealMatrix::Identity(n, n);
  for (int row = 0; row < n; ++row)
    for (int col = row + 1; col < n; ++col) {
      const double w = std::norm(gram_coefficient(model, row, col));
      g(row, col) = w;
      g(col, row) = w;
    }
  return make_gram(g);
}

Complex biortho_pairing_quadrature(const RobinModel& model, int n) {
  check_index(model, n);
  const GaussLegendre rule(model.quad_order);
  const int panels = panels_for(2 * n, model.quad_order);
  return integrate(
      [&](double x) { return std::conj(psi(model, n, x)) * phi(model, n, x); },
      -kHalfWidth, kHalfWidth, rule, panels);
}

double phi_norm_quadrature(const RobinModel& model, int n) {
  check_index(model, n);
  const GaussLegendre rule(model.quad_order);
  const int panels = panels_for(2 * n, model.quad_order);
  const double norm2 = integrate(
      [&](double x) { return std::norm(phi(model, n, x)); },
      -kHalfWidth, kHalfWidth, rule, panels);
  return std::sqrt(norm2);
}

double sufficiency_bound(double beta) {
  if (!(beta > 0.0 && beta < 0.5))
    throw BetaOutOfRange("sufficiency_bound: valid for beta in (0, 1/2) only");
  const double pi2 = kPi * kPi;
  return (64.0 * beta * beta / pi2) * (2.0 * pi2 - 16.0 + pi2 * pi2 / 72.0);
}

double truncated_sufficiency_sum(const RobinModel& model) {
  double sum = 0.0;
  for (int n = 0; n <= model.truncation; ++n)
    for (int m = n + 1; m <= model.truncation; ++m)
      sum += 2.0 * std::norm(gram_coefficient(model, n, m));
  return sum;
}

RobinAnalysis truncated_analyze(const RobinModel& model, const AnalyzeOptions& opts) {
  std::vector<int> ladder;
  for (int t : {model.truncation / 4, model.truncation / 2, model.truncation})
    if (t >= 1 && (ladder.empty() || t > ladder.back())) ladder.push_back(t);

  RobinAnalysis out;
  RealVector prev;
  for (size_t s = 0; s < ladder.size(); ++s) {
    const RobinModel stage_model(model.beta, ladder[s], model.quad_order);
    const GramMatrix G = gram_matrix(stage_model);

    TruncationStage stage;
    stage.truncation = ladder[s];
    if (s + 1 == ladder.size()) {
      out.report = analyze_gram(G, opts);
      stage.alpha_el = out.report.alpha_el;
      stage.verdict = out.report.verdict;
    } else {
      stage.alpha_el = solve_el(G);
      stage.verdict = classify(stage.alpha_el);
    }

    if (prev.size() == 0) {
      stage.max_delta_vs_prev = std::numeric_limits<double>::quiet_NaN();
    } else {
      stage.max_delta_vs_prev =
          (stage.alpha_el.head(prev.size()) - prev).cwiseAbs().maxCoeff();
    }
    prev = stage.alpha_el;
    out.stages.push_back(std::move(stage));
  }
  return out;
}

Complex csym_kernel(double beta, double x, double y) {
  check_csym_beta(beta);
  if (beta == 0.0) return 0.0;
  return beta * std::polar(1.0, -beta * (y - x)) *
         Complex(std::tan(kPi * beta / 2.0), -sign_of(y - x));
}

double csym_f0_prime(double beta, int quad_order) {
  check_csym_beta(beta);
  if (quad_order < 2) throw Error("csym_f0_prime: need at least two quadrature points");
  const GaussLegendre rule(quad_order);
  const double tangent = std::tan(kPi * beta / 2.0);
  const Complex square = integrate_square_diagonal_split(
      [&](double x, double y) { return Complex(tangent, -sign_of(y - x)); },
      -kHalfWidth, kHalfWidth, rule, 2);
  return (2.0 * beta / kPi) * square.real();
}

RealVector csym_characteristic_vector(const RobinModel& model) {
  check_csym_beta(model.beta);
  const double beta = model.beta;
  RealVector alpha(model.truncation + 1);
  if (beta == 0.0) {
    alpha.setZero();
    return alpha;
  }

  const GaussLegendre rule(model.quad_order);
  const double tangent = std::tan(kPi * beta / 2.0);
  const auto kernel = [&](double x, double y) {
    return beta * std::polar(1.0, -beta * (y - x)) * Complex(tangent, -sign_of(y - x));
  };

  for (int n = 0; n <= model.truncation; ++n) {
    const int panels = panels_for(n, model.quad_order);
    // <phi_n, K psi_n>: apply the kernel to psi_n (inner integral split at the
    // diagonal jump), then pair with phi_n.
    const auto paired = [&](double x) {
      const auto integrand = [&](double y) { return kernel(x, y) * psi(model, n, y); };
      const Complex applied = integrate(integrand, -kHalfWidth, x, rule, panels) +
                              integrate(integrand, x, kHalfWidth, rule, panels);
      return std::conj(phi(model, n, x)) * applied;
    };
    alpha[n] = integrate(paired, -kHalfWidth, kHalfWidth, rule, panels).real();
  }
  return alpha;
}

}  // namespace minmetric
