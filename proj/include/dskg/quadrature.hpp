#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dskg/error.hpp"

namespace dskg {

struct QuadratureConfig {
  int panel_order = 16;  // Gauss-Legendre nodes per panel
  double tol = 1e-9;     // per-panel mixed tolerance
  int max_depth = 24;    // bisection limit

  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are computed once per order and shared; the reference stays valid
/// for the lifetime of the program.
const GaussLegendreRule& gauss_legendre(int order);

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class F>
auto gauss_panel(F& f, std::span<const double> nodes,
                 std::span<const double> weights, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  using R = decltype(f(mid));
  R sum{};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    sum += weights[i] * f(mid + half * nodes[i]);
  }
  return R(sum * half);
}

template <class F, class R>
R refine(F& f, const GaussLegendreRule& rule, double a, double b, R coarse,
         int depth, const QuadratureConfig& cfg) {
  const double m = 0.5 * (a + b);
  const R left = gauss_panel(f, rule.nodes, rule.weights, a, m);
  const R right = gauss_panel(f, rule.nodes, rule.weights, m, b);
  const R fine = left + right;
  if (magnitude(fine - coarse) <= cfg.tol * (1.0 + magnitude(fine))) {
    return fine;
  }
  if (depth >= cfg.max_depth) {
    raise(ErrorKind::depth_exceeded,
          "adaptive quadrature reached max_depth on [" + std::to_string(a) +
              ", " + std::to_string(b) + "]");
  }
  return refine(f, rule, a, m, left, depth + 1, cfg) +
         refine(f, rule, m, b, right, depth + 1, cfg);
}

}  // namespace detail

/// Composite Gauss-Legendre with recursive bisection: a panel is accepted when
/// its two halves agree with the whole to tol * (1 + |I_fine|). Works for
/// real- and complex-valued integrands.
template <class F>
auto adaptive_quad(F&& f, double a, double b, const QuadratureConfig& cfg = {}) {
  using R = decltype(f(a));
  cfg.validate();
  if (!(a <= b)) {
    raise(ErrorKind::domain, "adaptive_quad requires a <= b");
  }
  if (a == b) {
    return R{};
  }
  const GaussLegendreRule& rule = gauss_legendre(cfg.panel_order);
  const R coarse = detail::gauss_panel(f, rule.nodes, rule.weights, a, b);
  return detail::refine(f, rule, a, b, coarse, 0, cfg);
}

}  // namespace dskg
