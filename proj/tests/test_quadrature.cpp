#include <cmath>

#include "doctest.h"
#include "dskg/quadrature.hpp"

using namespace dskg;

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {2, 5, 16, 33}) {
    const GaussLegendreRule& r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    double w = 0.0;
    for (double v : r.weights) w += v;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for degree 2n - 1.
    double m = 0.0;
    for (int i = 0; i < n; ++i) m += r.weights[i] * std::pow(r.nodes[i], 2 * n - 2);
    CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
  CHECK(&gauss_legendre(16) == &gauss_legendre(16));
}

TEST_CASE("adaptive integrals") {
  CHECK(std::abs(adaptive_quad([](double x) { return x * x; }, 0.0, 1.0) - 1.0 / 3.0) < 1e-14);
  CHECK(std::abs(adaptive_quad([](double x) { return std::sin(x); }, 0.0, M_PI) - 2.0) < 1e-14);
  const double v = adaptive_quad([](double s) { return 1.0 / std::sqrt(1.0 - s); }, 0.0, 0.99);
  CHECK(std::abs(v - 1.8) <= 1e-9);
  using C = std::complex<double>;
  const C c = adaptive_quad([](double x) { return std::exp(C(0.0, x)); }, 0.0, M_PI);
  CHECK(std::abs(c - C(0.0, 2.0)) < 1e-13);
  CHECK(adaptive_quad([](double x) { return x; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("configuration and failures") {
  CHECK_THROWS_AS((QuadratureConfig{1, 1e-9, 24}.validate()), Error);
  CHECK_THROWS_AS((QuadratureConfig{16, 0.0, 24}.validate()), Error);
  CHECK_THROWS_AS((QuadratureConfig{16, 1e-9, 0}.validate()), Error);
  CHECK_THROWS_AS(adaptive_quad([](double x) { return x; }, 1.0, 0.0), Error);
  const QuadratureConfig shallow{4, 1e-14, 2};
  try {
    adaptive_quad([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, shallow);
    FAIL("expected depth_exceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::depth_exceeded);
  }
}

}
