#include <cmath>

#include "doctest.h"
#include "dskg/error.hpp"
#include "dskg/kernels.hpp"

using namespace dskg;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const Mass kMasses[] = {Mass::curved(0.0),     Mass::curved(0.25),
                        Mass::curved(0.5),     Mass::curved(1.0),
                        Mass::curved(0.0, 0.3), Mass::curved(0.0, 1.7)};

KernelPoint edge(double t, double b) { return {std::exp(-b) - std::exp(-t), t, b}; }

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("phi") {
  CHECK(phi(0.0) == 0.0);
  CHECK(std::abs(phi(std::log(2.0)) - 0.5) < 1e-16);
  CHECK(phi(40.0) <= 1.0);
  CHECK(phi(2.0) > phi(1.0));
}

TEST_CASE("mass conventions") {
  const Mass m = Mass::physical(2.0);
  CHECK(m.value == cplx(0.0, -2.0));
  CHECK(m.convention == MassConvention::real_mass);
  CHECK(m.squared().real() == doctest::Approx(-4.0));
  CHECK_THROWS_AS(Mass::curved(std::nan(""), 0.0), Error);
  CHECK_FALSE(Mass::curved(1.0, 1.0).is_real_or_imaginary());
}

TEST_CASE("auxiliary functions") {
  for (const Mass& m : kMasses) {
    const AuxValues a = aux(edge(1.3, 0.4), m);
    CHECK(std::abs(a.alpha - 1.0) < 1e-14);
    CHECK(a.beta == doctest::Approx(0.5 * std::exp(0.5 * 1.7)).epsilon(1e-14));
    CHECK(a.gamma == 0.0);
  }
  const AuxValues d = aux({0.0, 2.0, 2.0}, Mass::curved(0.3));
  CHECK(d.gamma == 0.0);
  CHECK(d.beta == doctest::Approx(0.5 * std::exp(2.0)).epsilon(1e-14));

  const double e1 = std::exp(-1.0);
  const double g = (std::pow(1 - e1, 2) - 0.09) / (std::pow(1 + e1, 2) - 0.09);
  CHECK(aux({0.3, 1.0, 0.0}, Mass::curved(0.7)).gamma == doctest::Approx(g).epsilon(1e-15));
}

TEST_CASE("auxiliary derivatives") {
  const Mass m = Mass::curved(0.35, 0.0);
  const AuxDerivatives at_edge = aux_derivatives(edge(1.2, 0.3), m);
  const double D = std::exp(-0.3) - std::exp(-1.2);
  CHECK(at_edge.gamma_r == doctest::Approx(-0.5 * D * std::exp(1.5)).epsilon(1e-13));

  const AuxDerivatives axis = aux_derivatives({0.0, 1.2, 0.3}, m);
  CHECK(axis.alpha_r == cplx(0.0));
  CHECK(axis.beta_r == 0.0);
  CHECK(axis.gamma_r == 0.0);

  for (const Mass& mm : kMasses) {
    const KernelPoint p{0.2, 1.4, 0.5};
    const AuxDerivatives d = aux_derivatives(p, mm);
    const double h = 1e-6;
    const auto at = [&](double r, double t) { return aux({r, t, p.b}, mm); };
    const auto cd = [&](auto f) { return (f(h) - f(-h)) / (2 * h); };
    CHECK(rel(d.alpha_r, cd([&](double s) { return at(p.r + s, p.t).alpha; })) < 1e-7);
    CHECK(rel(d.alpha_t, cd([&](double s) { return at(p.r, p.t + s).alpha; })) < 1e-7);
    CHECK(rel(d.beta_r, cd([&](double s) { return cplx(at(p.r + s, p.t).beta); })) < 1e-7);
    CHECK(rel(d.beta_t, cd([&](double s) { return cplx(at(p.r, p.t + s).beta); })) < 1e-7);
    CHECK(rel(d.gamma_r, cd([&](double s) { return cplx(at(p.r + s, p.t).gamma); })) < 1e-7);
    CHECK(rel(d.gamma_t, cd([&](double s) { return cplx(at(p.r, p.t + s).gamma); })) < 1e-7);
    // Second differences need a wider step than 1e-6 in double precision.
    const double H = 1e-4;
    const auto cdH = [&](auto f) { return (f(H) - 2.0 * f(0.0) + f(-H)) / (H * H); };
    CHECK(rel(d.alpha_rr, cdH([&](double s) { return at(p.r + s, p.t).alpha; })) < 1e-6);
    CHECK(rel(d.beta_rr, cdH([&](double s) { return cplx(at(p.r + s, p.t).beta); })) < 1e-6);
    CHECK(rel(d.gamma_rr, cdH([&](double s) { return cplx(at(p.r + s, p.t).gamma); })) < 1e-6);
  }
}

TEST_CASE("E closed values") {
  for (const Mass& m : kMasses) {
    CHECK(rel(kernel_E(edge(2.0, 0.7), m), 0.5 * std::exp(1.35)) < 1e-14);
    CHECK(rel(kernel_E({0.0, 1.5, 1.5}, m), 0.5 * std::exp(1.5)) < 1e-14);
  }
  const Mass half = Mass::curved(0.5);
  CHECK(rel(kernel_E({0.1, 1.0, 0.3}, half), 0.5 * std::exp(0.65)) < 1e-14);
}

TEST_CASE("E domain") {
  const Mass m = Mass::curved(0.25);
  CHECK_THROWS_AS(kernel_E({0.1, 1.0, 1.2}, m), Error);
  CHECK_THROWS_AS(kernel_E({0.1, 1.0, -0.1}, m), Error);
  CHECK_THROWS_AS(kernel_E({-0.1, 1.0, 0.0}, m), Error);
  CHECK_THROWS_AS(kernel_E({0.8, 1.0, 0.0}, m), Error);
  CHECK_THROWS_AS(kernel_E({0.1, 1.0, 1.0}, m), Error);  // t = b needs r = 0
  try {
    kernel_E({0.8, 1.0, 0.0}, m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::domain);
    CHECK(std::string(e.what()).find("e^{-b} - e^{-t}") != std::string::npos);
  }
}

TEST_CASE("kernel values are real for real and imaginary masses") {
  for (const Mass& m : kMasses) {
    const KernelPoint p{0.25, 2.0, 0.4};
    CHECK(kernel_E(p, m).imag() == 0.0);
    CHECK(kernel_E_tt(p, m).imag() == 0.0);
    CHECK(kernel_K0(0.4, 1.0, m).imag() == 0.0);
  }
  const cplx c = kernel_E({0.25, 2.0, 0.4}, Mass::curved(0.3, 0.4));
  CHECK(c.imag() != 0.0);
}

TEST_CASE("E solves the de Sitter Klein-Gordon equation") {
  for (const Mass& m : kMasses) {
    for (const KernelPoint& p : {KernelPoint{0.1, 0.8, 0.2}, KernelPoint{0.3, 3.0, 1.0},
                                 KernelPoint{0.008, 4.9, 4.0}}) {
      const cplx Ett = kernel_E_tt(p, m);
      const cplx Err = std::exp(-2.0 * p.t) * kernel_E_rr(p, m);
      const cplx ME = m.squared() * kernel_E(p, m);
      const double scale = std::abs(Ett) + std::abs(Err) + std::abs(ME);
      CHECK(std::abs(Ett - Err - ME) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("K1") {
  for (const Mass& m : kMasses) {
    CHECK(rel(kernel_K1(phi(1.0), 1.0, m), 0.5 * std::exp(0.5)) < 1e-14);
    CHECK(kernel_E_r({0.0, 1.0, 0.0}, m) == cplx(0.0));
  }
  CHECK(rel(kernel_K1(0.3, 1.0, Mass::curved(0.5)), 0.5 * std::exp(0.5)) < 1e-14);
  CHECK_THROWS_AS(kernel_K1(0.7, 1.0, Mass::curved(0.0)), Error);
}

TEST_CASE("K0 endpoint limit and the M = 1/2 constant") {
  const double t = 1.3;
  for (const Mass& m : kMasses) {
    const cplx M2 = m.squared();
    const cplx expected = -0.25 * M2 * std::exp(0.5 * t) + 0.25 * M2 * std::exp(1.5 * t) -
                          3.0 / 16.0 * std::exp(0.5 * t) - 1.0 / 16.0 * std::exp(1.5 * t);
    CHECK(rel(kernel_K0_endpoint(t, m), expected) < 1e-14);
    CHECK(rel(kernel_K0(phi(t), t, m), expected) < 1e-13);
  }
  for (double z : {0.0, 0.2, 0.5, phi(1.3) * (1 - 5e-5), phi(1.3)}) {
    CHECK(rel(kernel_K0(z, 1.3, Mass::curved(0.5)), -0.25 * std::exp(0.65)) < 1e-13);
  }
}

TEST_CASE("K0 forms agree") {
  for (const Mass& m : kMasses) {
    for (double t : {0.05, 1.0, 4.5}) {
      for (double q : {0.0, 0.3, 0.9, 0.99}) {
        const double z = q * phi(t);
        CHECK(rel(kernel_K0_direct(z, t, m), kernel_K0_regular(z, t, m)) < 1e-9);
        CHECK(kernel_K0(z, t, m) == kernel_K0_direct(z, t, m));
      }
      // Through the blend zone the result stays continuous and close.
      const double ph = phi(t);
      for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const double z = ph * (1.0 - 1e-4 * (1.0 - s));
        CHECK(rel(kernel_K0(z, t, m), kernel_K0_regular(z, t, m)) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(kernel_K0_direct(phi(1.0), 1.0, Mass::curved(0.0)), Error);
  CHECK_THROWS_AS(kernel_K0(0.1, 0.0, Mass::curved(0.0)), Error);
}

TEST_CASE("K0 is minus the b-derivative of E") {
  const double h = 1e-5;
  for (const Mass& m : kMasses) {
    const double z = 0.3, t = 1.2;
    // One-sided second-order difference at b = 0.
    const cplx fd = -(-3.0 * kernel_E({z, t, 0.0}, m) + 4.0 * kernel_E({z, t, h}, m) -
                      kernel_E({z, t, 2 * h}, m)) / (2 * h);
    CHECK(rel(kernel_K0(z, t, m), fd) < 1e-6);
  }
}

TEST_CASE("K0 endpoint derivatives") {
  // M = 0, t = 1 values of the endpoint limits.
  const K0BoundaryDerivatives d = kernel_K0_boundary_derivatives(1.0, Mass::curved(0.0));
  const double k0r = 15.0 / 256 * std::exp(0.5) - 3.0 / 128 * std::exp(1.5) - 9.0 / 256 * std::exp(2.5);
  const double k0t = -15.0 / 256 * std::exp(-0.5) - 9.0 / 128 * std::exp(0.5) - 15.0 / 256 * std::exp(1.5);
  CHECK(rel(d.k0_r, k0r) < 1e-14);
  CHECK(rel(d.k0_t, k0t) < 1e-14);
  for (const Mass& m : kMasses) {
    for (double t : {0.3, 2.0, 4.0}) {
      const K0BoundaryDerivatives b = kernel_K0_boundary_derivatives(t, m);
      const double et = std::exp(-t);
      const cplx terms[] = {(0.25 - m.squared()) * std::exp(0.5 * t),
                            -2.0 * et * kernel_K0_endpoint(t, m), 4.0 * et * et * b.k0_r,
                            4.0 * et * b.k0_t};
      cplx sum{};
      double scale = 0.0;
      for (const cplx& v : terms) {
        sum += v;
        scale += std::abs(v);
      }
      CHECK(std::abs(sum) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("symmetry of E in b and t") {
  KernelOptions past;
  past.allow_past = true;
  for (const Mass& m : kMasses) {
    const KernelPoint p{0.1, 2.0, 0.6};
    CHECK(kernel_E(p, m) == kernel_E({p.r, p.b, p.t}, m, past));
  }
}

}
