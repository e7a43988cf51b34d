#include <cmath>

#include "doctest.h"
#include "dskg/error.hpp"
#include "dskg/hypergeom.hpp"

using namespace dskg;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const Mass kMasses[] = {Mass::curved(0.0),     Mass::curved(0.25),
                        Mass::curved(0.5),     Mass::curved(1.0),
                        Mass::curved(0.0, 0.3), Mass::curved(0.0, 1.7)};

}  // namespace

TEST_SUITE("hypergeom") {

TEST_CASE("closed values of the series") {
  CHECK(gauss_2f1({0.0, 0.0, 1.0, 0.7}) == cplx(1.0));
  CHECK(gauss_2f1({0.5, 0.5, 1.0, 0.0}) == cplx(1.0));
  CHECK(std::abs(gauss_2f1({-1.0, 2.0, 1.0, 0.3}) - 0.4) < 1e-15);
  // F(1,1;2;z) = -ln(1-z)/z
  CHECK(rel(gauss_2f1({1.0, 1.0, 2.0, 0.5}), 2.0 * std::log(2.0)) < 1e-14);
  // F(1/2,1/2;1;z) = (2/pi) K(z)
  const double k_half = 1.8540746773013719;  // complete elliptic K at m = 1/2
  CHECK(rel(gauss_2f1({0.5, 0.5, 1.0, 0.5}), 2.0 / M_PI * k_half) < 1e-14);
}

TEST_CASE("z = 0 gives exactly one and parameters commute bit for bit") {
  for (const Mass& m : kMasses) {
    const cplx a = 0.5 - m.value;
    CHECK(gauss_2f1({a, a + 1.0, 2.0, 0.0}) == cplx(1.0));
    for (double z : {0.1, 0.55, 0.97}) {
      const cplx f1 = gauss_2f1({a, a + 1.0, 2.0, z});
      const cplx f2 = gauss_2f1({a + 1.0, a, 2.0, z});
      CHECK(f1 == f2);
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, -2.0, 0.3}), Error);
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 0.0, 0.3}), Error);
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 1.0, 0.995}), Error);
  CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 1.0, -0.1}), Error);
  try {
    gauss_2f1({0.5, 0.5, 1.0, 0.995});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_convergence);
  }
  try {
    gauss_2f1({0.5, 0.5, -1.0, 0.2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_params);
  }
  CHECK_THROWS_AS(euler_integral_oracle({0.5, 1.0, 1.0, 0.2}), Error);
}

TEST_CASE("series tail stays within epsilon near the admissible edge") {
  // z = tanh^2(2.5) is the largest kernel argument for t <= 5.
  const double z = std::pow(std::tanh(2.5), 2);
  const cplx s = gauss_2f1({0.5, 0.5, 1.0, z});
  const cplx o = euler_integral_oracle({0.5, 0.5, 1.0, z});
  CHECK(rel(s, o) < 1e-11);
}

TEST_CASE("derivative relation") {
  CHECK(gauss_2f1_dz({0.0, 0.5, 1.0, 0.4}) == cplx(0.0));
  CHECK(std::abs(gauss_2f1_dz({0.5, 0.5, 1.0, 0.0}) - 0.25) < 1e-16);
  const double h = 1e-6;
  const cplx fd = (gauss_2f1({0.5, 0.5, 1.0, 0.3 + h}) - gauss_2f1({0.5, 0.5, 1.0, 0.3 - h})) / (2 * h);
  CHECK(rel(gauss_2f1_dz({0.5, 0.5, 1.0, 0.3}), fd) < 1e-8);
}

TEST_CASE("Euler integral oracle") {
  CHECK(rel(euler_integral_oracle({3.7, 0.5, 1.0, 0.0}), 1.0) < 1e-13);
  CHECK(rel(euler_integral_oracle({1.0, 1.0, 2.0, 0.5}), 2.0 * std::log(2.0)) < 1e-12);
  CHECK(rel(euler_integral_oracle({0.5, 0.5, 1.0, 0.9}), gauss_2f1({0.5, 0.5, 1.0, 0.9})) < 1e-10);
}

TEST_CASE("series against the Euler integral on a parameter grid") {
  int count = 0;
  double worst = 0.0;
  for (const Mass& m : kMasses) {
    const cplx a = 0.5 - m.value;
    // (a, b, c) with Re c > Re b > 0, including the kernel triples.
    const cplx triples[][3] = {{a, 0.5, 1.0}, {a, 1.5 - m.value.real(), 2.0 + 1.0},
                               {a + 1.0, 0.75, 2.0}, {a, 1.25, 3.0}};
    for (const auto& tr : triples) {
      for (int k = 1; k <= 9; ++k) {
        const double z = 0.1 * k;
        const HypergeomArgs args{tr[0], tr[1], tr[2], z};
        worst = std::max(worst, rel(gauss_2f1(args), euler_integral_oracle(args)));
        ++count;
      }
    }
  }
  CHECK(count >= 100);
  CHECK(worst <= 1e-10);
}

TEST_CASE("ODE residual") {
  CHECK(hypergeom_ode_residual(Mass::curved(0.5), 0.5) == cplx(0.0));
  for (const Mass& m : kMasses) {
    for (int k = 0; k <= 19; ++k) {
      const double z = std::min(0.95, 0.05 * k);
      const cplx a = 0.5 - m.value;
      const cplx f = gauss_2f1({a, a, 1.0, z});
      CHECK(std::abs(hypergeom_ode_residual(m, z)) <= 1e-9 * std::abs(f));
    }
  }
  const cplx f = gauss_2f1({0.5 - cplx(0, 0.25), 0.5 - cplx(0, 0.25), 1.0, 0.8});
  CHECK(std::abs(hypergeom_ode_residual(Mass::curved(0.0, 0.25), 0.8)) <= 1e-9 * std::abs(f));
}

TEST_CASE("gamma function") {
  CHECK(rel(complex_gamma(5.0), 24.0) < 1e-13);
  CHECK(rel(complex_gamma(0.5), std::sqrt(M_PI)) < 1e-13);
  CHECK(rel(complex_gamma(-0.5), -2.0 * std::sqrt(M_PI)) < 1e-13);
  // |Gamma(i y)|^2 = pi / (y sinh(pi y))
  const double y = 1.3;
  CHECK(std::abs(std::norm(complex_gamma(cplx(0, y))) - M_PI / (y * std::sinh(M_PI * y))) < 1e-13);
}

}
