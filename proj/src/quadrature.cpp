#include "dskg/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace dskg {

void QuadratureConfig::validate() const {
  if (panel_order < 2) {
    raise(ErrorKind::invalid_params, "panel_order must be at least 2");
  }
  if (!(tol > 0.0)) {
    raise(ErrorKind::invalid_params, "quadrature tol must be positive");
  }
  if (max_depth < 1) {
    raise(ErrorKind::invalid_params, "max_depth must be at least 1");
  }
}

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> rules;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = rules[order];
  if (!slot) {
    slot = std::make_unique<GaussLegendreRule>(build_rule(order));
  }
  return *slot;
}

}  // namespace dskg
