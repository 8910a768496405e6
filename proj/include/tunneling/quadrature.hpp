#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "tunneling/errors.hpp"

namespace tunneling {

enum class QuadratureRule { GaussLegendre, Simpson };

struct QuadratureConfig {
  int n_points = 128;
  QuadratureRule rule = QuadratureRule::GaussLegendre;

  void validate() const {
    if (n_points < 16) throw ContractViolation("quadrature needs at least 16 points");
  }
};

struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]; roots of P_n by Newton iteration
/// from the Chebyshev-like initial guess.
inline GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw ContractViolation("Gauss-Legendre order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

/// Integral of f over [lo, hi]. f may return any type closed under scaling
/// and addition (double, std::complex<double>).
template <class Func>
auto integrate(Func&& f, double lo, double hi, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  using Value = decltype(f(lo));
  Value sum{};
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  if (cfg.rule == QuadratureRule::GaussLegendre) {
    const GaussLegendreRule rule = gauss_legendre(cfg.n_points);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return Value(half * sum);
  }
  // Composite Simpson needs an even number of panels.
  const int panels = cfg.n_points % 2 == 0 ? cfg.n_points : cfg.n_points + 1;
  const double h = (hi - lo) / panels;
  sum = f(lo) + f(hi);
  for (int j = 1; j < panels; ++j) sum += (j % 2 == 1 ? 4.0 : 2.0) * f(lo + j * h);
  return Value(sum * (h / 3.0));
}

}  // namespace tunneling
