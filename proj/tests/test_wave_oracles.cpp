#include <cmath>

#include "doctest.h"
#include "dskg/error.hpp"
#include "dskg/kernels.hpp"
#include "dskg/wave_oracles.hpp"

using namespace dskg;

TEST_SUITE("wave_oracles") {

TEST_CASE("d'Alembert and mode factors") {
  const Profile c = [](double) { return 3.5; };
  CHECK(dalembert_v(c, 0.3, 2.0) == 3.5);
  const Profile g = [](double x) { return std::exp(-x * x); };
  CHECK(dalembert_v(g, 0.4, 0.0) == g(0.4));
  const double lam = 1.7;
  const Profile cs = [lam](double x) { return std::cos(lam * x); };
  CHECK(dalembert_v(cs, 0.3, 0.8) ==
        doctest::Approx(std::cos(lam * 0.3) * std::cos(lam * 0.8)).epsilon(1e-14));
  CHECK(dalembert_v(cs, 0.3, 0.8) ==
        doctest::Approx(std::cos(lam * 0.3) * mode_v(-lam * lam, 0.8)).epsilon(1e-14));

  CHECK(mode_v(0.0, 3.0) == 1.0);
  CHECK(mode_v(-1.0, M_PI) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(mode_v(-4.0, 0.9) == doctest::Approx(std::cos(1.8)).epsilon(1e-15));  // k = sqrt 2 beam
  const double mu = -2.3, t = 0.7, h = 1e-3;
  const double dd = (mode_v(mu, t + h) - 2 * mode_v(mu, t) + mode_v(mu, t - h)) / (h * h);
  CHECK(std::abs(dd - mu * mode_v(mu, t)) < 1e-5);
}

TEST_CASE("ODE oracle against closed forms") {
  ModeProblem p;
  p.mu = 0.0;
  p.mass = Mass::curved(0.8);
  p.c0 = 1.0;
  const DenseSolution s = ode_oracle(p, 2.0, 1e-12);
  for (double t : {0.0, 0.37, 1.0, 2.0}) {
    CHECK(s.value(t) == doctest::Approx(std::cosh(0.8 * t)).epsilon(1e-10));
  }
  const double lam = 1.3;
  p.mu = -lam * lam;
  p.mass = Mass::curved(0.5);
  p.c0 = 0.0;
  p.c1 = 1.0;
  const DenseSolution s1 = ode_oracle(p, 2.0, 1e-12);
  p.c0 = 1.0;
  p.c1 = 0.0;
  const DenseSolution s0 = ode_oracle(p, 2.0, 1e-12);
  for (double t : {0.1, 0.77, 1.5, 2.0}) {
    const double ph = phi(t);
    CHECK(s1.value(t) ==
          doctest::Approx(std::exp(0.5 * t) * std::sin(lam * ph) / lam).epsilon(1e-10));
    CHECK(s0.value(t) == doctest::Approx(std::exp(0.5 * t) * (std::cos(lam * ph) -
                                                               std::sin(lam * ph) / (2 * lam)))
                             .epsilon(1e-10));
  }
  CHECK(s1.derivative(0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ODE oracle self-consistency and errors") {
  ModeProblem p;
  p.mu = -4.0;
  p.mass = Mass::curved(0.25);
  p.c0 = 1.0;
  p.forcing = [](double t) { return std::exp(-t); };
  const double a = ode_oracle(p, 2.0, 1e-8).value(2.0);
  const double b = ode_oracle(p, 2.0, 5e-9).value(2.0);
  CHECK(std::abs(a - b) < 1e-8);
  CHECK_THROWS_AS(ode_oracle(p, 2.0, 0.0), Error);
  p.mass = Mass::curved(0.3, 0.3);
  CHECK_THROWS_AS(ode_oracle(p, 2.0, 1e-10), Error);
}

TEST_CASE("finite-difference solver") {
  GridProblem1D g;
  g.x_min = 0.0;
  g.x_max = 2.0 * M_PI;
  g.n_x = 64;
  g.phi0.assign(64, 0.0);
  g.phi1.assign(64, 0.0);
  const SpaceTimeField zero = fd_direct_solver(g, Mass::curved(0.25), 1.0, 0.5 * g.dx());
  for (const auto& row : zero.u) {
    for (double v : row) CHECK(v == 0.0);
  }
  CHECK(zero.t.back() == 1.0);
  CHECK_THROWS_AS(fd_direct_solver(g, Mass::curved(0.25), 1.0, 0.95 * g.dx()), Error);
  try {
    fd_direct_solver(g, Mass::curved(0.25), 1.0, 0.95 * g.dx());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::cfl_violation);
  }
  CHECK_THROWS_AS(fd_direct_solver(g, Mass::curved(0.2, 0.2), 1.0, 0.5 * g.dx()), Error);
  g.phi0.pop_back();
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("periodic single mode converges at second order to the ODE oracle") {
  const double lam = 2.0;
  ModeProblem p;
  p.mu = -lam * lam;
  p.mass = Mass::curved(0.25);
  p.c0 = 1.0;
  const double y = ode_oracle(p, 1.0, 1e-12).value(1.0);
  double err[2];
  for (int k = 0; k < 2; ++k) {
    GridProblem1D g;
    g.x_min = 0.0;
    g.x_max = M_PI;
    g.n_x = 50 << k;
    g.boundary = Boundary::periodic;
    for (double x : g.nodes()) {
      g.phi0.push_back(std::cos(lam * x));
      g.phi1.push_back(0.0);
    }
    const SpaceTimeField f = fd_direct_solver(g, p.mass, 1.0, 0.5 * g.dx());
    double e = 0.0;
    for (std::size_t i = 0; i < f.x.size(); ++i) {
      e = std::max(e, std::abs(f.u.back()[i] - std::cos(lam * f.x[i]) * y));
    }
    err[k] = e;
  }
  CHECK(err[0] < 1e-3);
  CHECK(err[0] / err[1] == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("Dirichlet rows keep zero boundary values") {
  GridProblem1D g;
  g.x_min = 0.0;
  g.x_max = 1.0;
  g.n_x = 41;
  g.boundary = Boundary::dirichlet;
  for (double x : g.nodes()) {
    g.phi0.push_back(std::exp(-50 * (x - 0.4) * (x - 0.4)));
    g.phi1.push_back(x * (1 - x));
  }
  g.f = [](double x, double t) { return std::sin(3 * x) * t; };
  const SpaceTimeField f = fd_direct_solver(g, Mass::curved(0.0, 0.7), 2.0, 0.5 * g.dx());
  for (const auto& row : f.u) {
    CHECK(row.front() == 0.0);
    CHECK(row.back() == 0.0);
  }
}

}
