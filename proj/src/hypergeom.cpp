#include "dskg/hypergeom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dskg/error.hpp"

namespace dskg {
namespace {

bool nonpositive_integer(cplx c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && std::floor(c.real()) == c.real();
}

// Orders the pair so that F(a,b) and F(b,a) run the identical sequence of
// floating-point operations.
std::pair<cplx, cplx> canonical(cplx a, cplx b) {
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) {
    return {b, a};
  }
  return {a, b};
}

std::string describe(const HypergeomArgs& args) {
  std::ostringstream os;
  os.precision(17);
  os << "F(" << args.a << ", " << args.b << "; " << args.c << "; " << args.z
     << ")";
  return os.str();
}

}  // namespace

SeriesResult gauss_2f1_series(const HypergeomArgs& args,
                              const SeriesOptions& opts) {
  if (nonpositive_integer(args.c)) {
    raise(ErrorKind::invalid_params,
          "c is zero or a negative integer in " + describe(args));
  }
  if (!(args.z >= 0.0 && args.z < 1.0)) {
    raise(ErrorKind::invalid_params,
          "z outside [0, 1) in " + describe(args));
  }
  if (args.z > opts.z_max) {
    raise(ErrorKind::non_convergence,
          "z above the direct-series limit in " + describe(args));
  }
  if (args.z == 0.0) {
    return {cplx{1.0, 0.0}, 1.0, 1};
  }

  const auto [a, b] = canonical(args.a, args.b);
  const cplx c = args.c;
  const double z = args.z;
  // Below this index the term ratios are not yet monotone in general.
  const double settle = 2.0 * (std::abs(a) + std::abs(b) + std::abs(c)) + 2.0;

  cplx sum{1.0, 0.0};
  cplx term{1.0, 0.0};
  double abs_sum = 1.0;
  for (int n = 0; n < opts.max_terms; ++n) {
    const double dn = n;
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    if (term == cplx{0.0, 0.0}) {
      return {sum, abs_sum, n + 1};  // terminating series
    }
    sum += term;
    abs_sum += std::abs(term);

    const double next = dn + 1.0;
    const double q_next =
        std::abs((a + next) * (b + next) / ((c + next) * (next + 1.0))) * z;
    const double q = std::max(q_next, z);
    if (next < settle || q >= 1.0) {
      continue;
    }
    const double tail = std::abs(term) * q / (1.0 - q);
    if (tail <= opts.epsilon * std::abs(sum)) {
      return {sum, abs_sum, n + 2};
    }
  }
  raise(ErrorKind::non_convergence,
        "term cap reached before the tail bound met epsilon in " +
            describe(args));
}

cplx gauss_2f1(const HypergeomArgs& args, const SeriesOptions& opts) {
  return gauss_2f1_series(args, opts).value;
}

cplx gauss_2f1_dz(const HypergeomArgs& args, const SeriesOptions& opts) {
  if (nonpositive_integer(args.c)) {
    raise(ErrorKind::invalid_params,
          "c is zero or a negative integer in " + describe(args));
  }
  const cplx factor = args.a * args.b / args.c;
  if (factor == cplx{0.0, 0.0}) {
    // Still validate z so the error contract matches gauss_2f1.
    (void)gauss_2f1({0.0, 0.0, 1.0, args.z}, opts);
    return {0.0, 0.0};
  }
  return factor *
         gauss_2f1({args.a + 1.0, args.b + 1.0, args.c + 1.0, args.z}, opts);
}

cplx complex_gamma(cplx z) {
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> coeffs = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double pi = std::numbers::pi;

  if (z.real() < 0.5) {
    return pi / (std::sin(pi * z) * complex_gamma(1.0 - z));
  }
  z -= 1.0;
  cplx x = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    x += coeffs[i] / (z + static_cast<double>(i));
  }
  const cplx t = z + g + 0.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx euler_integral_oracle(const HypergeomArgs& args) {
  const cplx a = args.a;
  const cplx b = args.b;
  const cplx c = args.c;
  const double z = args.z;
  if (!(c.real() > b.real() && b.real() > 0.0)) {
    raise(ErrorKind::domain, "euler_integral_oracle requires Re c > Re b > 0 in " +
                                 describe(args));
  }
  if (!(z >= 0.0 && z < 1.0)) {
    raise(ErrorKind::domain, "z outside [0, 1) in " + describe(args));
  }

  // s = 1 / (1 + e^{-2u}), u = (pi/2) sinh x: both endpoints are pushed to
  // x = -inf / +inf and the algebraic endpoint factors decay doubly
  // exponentially. log s and log(1-s) are formed without cancellation.
  constexpr double half_pi = 0.5 * std::numbers::pi;
  const auto integrand = [&](double x) -> cplx {
    const double u = half_pi * std::sinh(x);
    const double log_s = -std::log1p(std::exp(-2.0 * u));
    const double log_1ms = -std::log1p(std::exp(2.0 * u));
    const double s = std::exp(log_s);
    // s^b (1-s)^{c-b} (1 - z s)^{-a} * ds/dx / (s (1-s))
    const cplx log_val = b * log_s + (c - b) * log_1ms - a * std::log1p(-z * s);
    const double jac = std::numbers::pi * std::cosh(x);
    return std::exp(log_val) * jac;
  };

  // Truncation: integrate x in [-L, L] where the endpoint decay has reached
  // below 1e-18 of the bulk; L = 7 covers Re b, Re(c-b) >= ~0.01.
  const double lb = std::min(b.real(), (c - b).real());
  double L = 3.0;
  while (L < 7.0) {
    const double u = half_pi * std::sinh(L);
    if (2.0 * u * lb > 45.0) break;
    L += 0.25;
  }

  double h = 0.5;
  cplx prev{};
  cplx total{};
  {
    cplx sum = integrand(0.0);
    for (double x = h; x <= L; x += h) {
      sum += integrand(x) + integrand(-x);
    }
    total = sum * h;
  }
  for (int level = 0; level < 12; ++level) {
    prev = total;
    h *= 0.5;
    // New midpoints only.
    cplx add{};
    for (double x = h; x <= L; x += 2.0 * h) {
      add += integrand(x) + integrand(-x);
    }
    total = 0.5 * prev + add * h;
    if (level >= 2 && std::abs(total - prev) <= 1e-15 * std::abs(total)) {
      break;
    }
  }

  const cplx norm = complex_gamma(c) / (complex_gamma(b) * complex_gamma(c - b));
  return norm * total;
}

cplx hypergeom_ode_residual(const Mass& mass, double z, const SeriesOptions& opts) {
  const cplx a = 0.5 - mass.value;
  const HypergeomArgs args{a, a, 1.0, z};
  const cplx f = gauss_2f1(args, opts);
  const cplx fz = gauss_2f1_dz(args, opts);
  // F'' = d/dz [(ab/c) F(a+1,b+1;c+1;z)].
  const cplx fzz = (a * a) * gauss_2f1_dz({a + 1.0, a + 1.0, 2.0, z}, opts);
  return z * (1.0 - z) * fzz + (1.0 - (2.0 * a + 1.0) * z) * fz - a * a * f;
}

}  // namespace dskg
