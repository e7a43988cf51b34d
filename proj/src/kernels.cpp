#include "dskg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dskg/error.hpp"

#ifdef DSKG_INJECT_SIGN_FLIP
inline constexpr double kMutantSign = -1.0;
#else
inline constexpr double kMutantSign = 1.0;
#endif

namespace dskg {
namespace {

std::string fmt_point(const KernelPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(r=" << p.r << ", t=" << p.t << ", b=" << p.b << ")";
  return os.str();
}

// Shared quantities of one admissible point. S = e^{-b}+e^{-t},
// D = e^{-b}-e^{-t}, rho = S^2 - r^2.
struct Geometry {
  double r, t, b;
  double eb, et;    // e^{-b}, e^{-t}
  double S, D;
  double rho;
  double log_rho;
  double beta;
  double gamma;
};

Geometry geometry(const KernelPoint& p, const KernelOptions& opts) {
  if (!std::isfinite(p.r) || !std::isfinite(p.t) || !std::isfinite(p.b)) {
    raise(ErrorKind::domain, "non-finite kernel argument " + fmt_point(p));
  }
  if (p.b < 0.0 && !opts.allow_past) {
    raise(ErrorKind::domain, "b >= 0 violated at " + fmt_point(p));
  }
  if (p.b > p.t && !opts.allow_past) {
    raise(ErrorKind::domain, "b <= t violated at " + fmt_point(p));
  }
  if (p.r < 0.0) {
    raise(ErrorKind::domain, "r >= 0 violated at " + fmt_point(p));
  }
  Geometry g{};
  g.r = p.r;
  g.t = p.t;
  g.b = p.b;
  g.eb = std::exp(-p.b);
  g.et = std::exp(-p.t);
  g.S = g.eb + g.et;
  g.D = g.eb - g.et;
  const double reach = std::abs(g.D);
  // A few ulps of slack so that r computed as e^{-b}-e^{-t} elsewhere passes.
  if (p.r > reach * (1.0 + 8e-16) + 1e-300) {
    raise(ErrorKind::domain,
          "r <= e^{-b} - e^{-t} violated at " + fmt_point(p));
  }
  g.rho = g.S * g.S - p.r * p.r;
  g.log_rho = std::log(g.rho);
  g.beta = 1.0 / std::sqrt(g.rho);
  // (D - r)(D + r) keeps relative accuracy near the light cone.
  const double num = (reach - p.r) * (reach + p.r);
  g.gamma = std::max(0.0, num / g.rho);
  return g;
}

cplx rho_pow(const Geometry& g, cplx p) { return std::exp(p * g.log_rho); }

cplx pow2(cplx p) { return std::exp(p * std::log(2.0)); }

// Linear combination sum_k coef_k F(k+1/2-M, k+1/2-M; k+1; gamma) with the
// magnitude bookkeeping needed for the realness check.
class Combination {
 public:
  Combination(const Geometry& g, const Mass& mass, const KernelOptions& opts)
      : g_(g), mass_(mass), opts_(opts) {}

  void add(int k, cplx coef) {
    const cplx a = static_cast<double>(k) + 0.5 - mass_.value;
    const SeriesResult s = gauss_2f1_series(
        {a, a, static_cast<double>(k + 1), g_.gamma}, opts_.series);
    add_value(coef * s.value, std::abs(coef) * s.abs_sum);
  }

  void add_general(cplx a, cplx b, cplx c, cplx coef) {
    const SeriesResult s = gauss_2f1_series({a, b, c, g_.gamma}, opts_.series);
    add_value(coef * s.value, std::abs(coef) * s.abs_sum);
  }

  void add_value(cplx v, double magnitude) {
    sum_ += v;
    scale_ += magnitude;
  }

  cplx finish(const char* what) const {
    if (!mass_.is_real_or_imaginary()) {
      return sum_;
    }
    if (std::abs(sum_.imag()) > opts_.realness_tol * scale_ + 1e-300) {
      std::ostringstream os;
      os.precision(17);
      os << what << " has imaginary part " << sum_.imag()
         << " against term scale " << scale_ << " at "
         << fmt_point({g_.r, g_.t, g_.b});
      raise(ErrorKind::not_real, os.str());
    }
    return {sum_.real(), 0.0};
  }

 private:
  const Geometry& g_;
  const Mass& mass_;
  const KernelOptions& opts_;
  cplx sum_{};
  double scale_ = 0.0;
};

cplx alpha_of(const Geometry& g, cplx M) {
  return pow2(-2.0 * M) * std::exp(M * (g.b + g.t)) * rho_pow(g, M);
}

}  // namespace

double phi(double t) { return -std::expm1(-t); }

AuxValues aux(const KernelPoint& p, const Mass& mass,
              const KernelOptions& opts) {
  const Geometry g = geometry(p, opts);
  return {alpha_of(g, mass.value), g.beta, g.gamma};
}

AuxDerivatives aux_derivatives(const KernelPoint& p, const Mass& mass,
                               const KernelOptions& opts) {
  const Geometry g = geometry(p, opts);
  const cplx M = mass.value;
  const cplx a = alpha_of(g, M);
  const double be = g.beta;
  const double be2 = be * be;
  const double be3 = be2 * be;
  const double r = g.r;
  const double r2 = r * r;

  AuxDerivatives d;
  d.alpha_r = -2.0 * M * r * a * be2;
  d.alpha_rr = -2.0 * M * a * be2 * (1.0 - 2.0 * M * r2 * be2 + 2.0 * r2 * be2);
  d.alpha_t = M * a - 2.0 * M * g.et * g.S * a * be2;
  d.beta_r = r * be3;
  d.beta_rr = be3 + 3.0 * r2 * be3 * be2;
  d.beta_t = g.et * g.S * be3;
  d.gamma_r = 2.0 * r * be2 * (g.gamma - 1.0);
  d.gamma_rr = 2.0 * be2 * (1.0 + 4.0 * r2 * be2) * (g.gamma - 1.0);
  d.gamma_t = 2.0 * g.et * be2 * (g.D + g.S * g.gamma);
  return d;
}

cplx kernel_E(const KernelPoint& p, const Mass& mass,
              const KernelOptions& opts) {
  const Geometry g = geometry(p, opts);
  Combination c(g, mass, opts);
  c.add(0, alpha_of(g, mass.value) * g.beta);
  return c.finish("E");
}

cplx kernel_E_r(const KernelPoint& p, const Mass& mass,
                const KernelOptions& opts) {
  const Geometry g = geometry(p, opts);
  const cplx M = mass.value;
  const cplx h = 0.5 - M;
  const cplx pre = 2.0 * h * g.r * pow2(-2.0 * M) * std::exp(M * (g.b + g.t)) *
                   rho_pow(g, M - 1.5);
  Combination c(g, mass, opts);
  c.add(0, pre);
  c.add(1, -pre * 4.0 * g.eb * g.et / g.rho * h);
  return c.finish("E_r");
}

cplx kernel_E_rr(const KernelPoint& p, const Mass& mass,
                 const KernelOptions& opts) {
  const Geometry g = geometry(p, opts);
  const cplx M = mass.value;
  const cplx h = 0.5 - M;
  const cplx h3 = 1.5 - M;
  const double r2 = g.r * g.r;
  const double S2 = g.S * g.S;
  const double bt = g.b + g.t;

  const cplx A = pow2(1.0 - 2.0 * M) * h * std::exp(M * bt) *
                 rho_pow(g, M - 2.5) * (S2 + (2.0 - 2.0 * M) * r2);
  const cplx B = -pow2(3.0 - 2.0 * M) * h * h * std::exp((M - 1.0) * bt) *
                 rho_pow(g, M - 3.5) * (S2 + (5.0 - 4.0 * M) * r2);
  const cplx C = pow2(5.0 - 2.0 * M) * h * h * h3 * h3 *
                 std::exp((M - 2.0) * bt) * r2 * rho_pow(g, M - 4.5);
  Combination c(g, mass, opts);
  c.add(0, A);
  c.add(1, B);
  c.add(2, C);
  return c.finish("E_rr");
}

cplx kernel_E_t(const KernelPoint& p, const Mass& mass,
                const KernelOptions& opts) {
  const Geometry g = geometry(p, opts);
  const cplx M = mass.value;
  const cplx h = 0.5 - M;
  const double r2 = g.r * g.r;
  const double bt = g.b + g.t;
  const double S = g.S;
  const double D = g.D;

  const cplx A = pow2(-2.0 * M) * std::exp(M * bt) * rho_pow(g, M - 1.5) *
                 (M * g.rho - (2.0 * M - 1.0) * S * g.et);
  const cplx B = pow2(1.0 - 2.0 * M) * h * h * std::exp(M * bt) * g.et *
                 rho_pow(g, M - 2.5) *
                 (D * S * S - D * r2 + S * D * D - S * r2);
  Combination c(g, mass, opts);
  c.add(0, A);
  c.add(1, B);
  return c.finish("E_t");
}

cplx kernel_E_tt(const KernelPoint& p, const Mass& mass,
                 const KernelOptions& opts) {
  const Geometry g = geometry(p, opts);
  const cplx M = mass.value;
  const cplx h = 0.5 - M;
  const cplx h3 = 1.5 - M;
  const double r = g.r;
  const double r2 = r * r;
  const double r4 = r2 * r2;
  const double b = g.b;
  const double t = g.t;
  const double bt = b + t;
  const double S = g.S;

  const cplx At =
      pow2(-2.0 * M) * M * M * std::exp(M * bt) * rho_pow(g, M - 0.5) -
      pow2(-2.0 * M) * (2.0 * M - 1.0) * std::exp(M * bt - b - 2.0 * t) *
          rho_pow(g, M - 1.5) *
          (2.0 * std::exp(b) * M - 2.0 * std::exp(b) + 2.0 * M * std::exp(t) -
           std::exp(t)) +
      pow2(2.0 - 2.0 * M) * (M - 0.5) * (M - 1.5) * S * S *
          std::exp(M * bt - 2.0 * t) * rho_pow(g, M - 2.5);

  // Second C term: the printed bracket in powers of e^{b}, e^{t} divided
  // through by e^{4(b+t)}, with that factor moved into the exponential
  // prefactor e^{(M-5)(b+t)} -> e^{(M-1)(b+t)}.
  const double ebm = g.eb;  // e^{-b}
  const double etm = g.et;  // e^{-t}
  const double ebm2 = ebm * ebm;
  const double etm2 = etm * etm;
  const cplx bracket =
      -4.0 * M * r2 * ebm * etm - 4.0 * M * r2 * etm2 +
      4.0 * M * ebm2 * etm2 - 4.0 * M * ebm * etm2 * etm +
      4.0 * M * ebm2 * ebm * etm - 4.0 * M * etm2 * etm2 + r4 +
      4.0 * r2 * ebm * etm - 2.0 * r2 * ebm2 + 8.0 * r2 * etm2 -
      8.0 * ebm2 * etm2 - 4.0 * ebm2 * ebm * etm + 3.0 * etm2 * etm2 +
      ebm2 * ebm2;
  const cplx C1 = kMutantSign * pow2(3.0 - 2.0 * M) * h * h * M *
                  std::exp(M * bt - 3.0 * b - t) * rho_pow(g, M - 2.5) *
                  (-std::exp(2.0 * b) * r2 - std::exp(2.0 * b - 2.0 * t) + 1.0);
  const cplx C2 = -pow2(2.0 - 2.0 * M) * h * h * std::exp((M - 1.0) * bt) *
                  rho_pow(g, M - 3.5) * bracket;

  const cplx Dc = pow2(3.0 - 2.0 * M) * h * h * h3 * h3 *
                  std::exp(M * bt - 2.0 * t) * rho_pow(g, M - 4.5) *
                  (ebm2 * r4 + 2.0 * r2 * ebm2 * etm2 -
                   2.0 * ebm2 * ebm2 * r2 - 2.0 * ebm2 * ebm2 * etm2 +
                   ebm2 * etm2 * etm2 + ebm2 * ebm2 * ebm2);

  Combination c(g, mass, opts);
  c.add(0, At);
  c.add(1, C1);
  c.add(1, C2);
  c.add(2, Dc);
  return c.finish("E_tt");
}

cplx kernel_K1(double z, double t, const Mass& mass,
               const KernelOptions& opts) {
  if (!(t >= 0.0)) {
    raise(ErrorKind::domain, "K1 requires t >= 0");
  }
  return kernel_E({z, t, 0.0}, mass, opts);
}

cplx kernel_K0_direct(double z, double t, const Mass& mass,
                      const KernelOptions& opts) {
  if (!(t > 0.0)) {
    raise(ErrorKind::domain, "K0 requires t > 0");
  }
  const double ph = phi(t);
  if (!(z >= 0.0 && z < ph)) {
    raise(ErrorKind::domain,
          "direct K0 formula requires 0 <= z < 1 - e^{-t}");
  }
  const Geometry g = geometry({z, t, 0.0}, opts);
  const cplx M = mass.value;
  const double z2 = z * z;
  const double e2t = g.et * g.et;
  // (1 - e^{-t})^2 - z^2, factored for accuracy near the endpoint.
  const double lower = (ph - z) * (ph + z);
  const cplx pre = pow2(-2.0 * M) * std::exp(t * M) * rho_pow(g, M) /
                   (lower * std::sqrt(g.rho));
  Combination c(g, mass, opts);
  c.add(0, pre * (g.et - 1.0 + M * (e2t - 1.0 - z2)));
  c.add_general(-0.5 - M, 0.5 - M, 1.0,
                pre * (1.0 - e2t + z2) * (0.5 + M));
  return c.finish("K0");
}

cplx kernel_K0_regular(double z, double t, const Mass& mass,
                       const KernelOptions& opts) {
  if (!(t > 0.0)) {
    raise(ErrorKind::domain, "K0 requires t > 0");
  }
  const double ph = phi(t);
  if (!(z >= 0.0) || z > ph * (1.0 + 8e-16)) {
    raise(ErrorKind::domain, "K0 requires 0 <= z <= 1 - e^{-t}");
  }
  const Geometry g = geometry({std::min(z, ph), t, 0.0}, opts);
  const cplx M = mass.value;
  const cplx pre = pow2(-2.0 * M) * std::exp(t * M) * rho_pow(g, M - 0.5);
  Combination c(g, mass, opts);
  c.add(0, -0.5 * pre);
  c.add_general(0.5 - M, 1.5 - M, 2.0,
                -pre * (0.25 - M * M) * (-std::expm1(-2.0 * t) + z * z) / g.rho);
  return c.finish("K0");
}

cplx kernel_K0_endpoint(double t, const Mass& mass) {
  const cplx M2 = mass.squared();
  const double e1 = std::exp(0.5 * t);
  const double e3 = std::exp(1.5 * t);
  cplx v = -0.25 * M2 * e1 + 0.25 * M2 * e3 - 3.0 / 16.0 * e1 - 1.0 / 16.0 * e3;
  if (mass.is_real_or_imaginary()) v.imag(0.0);
  return v;
}

K0BoundaryDerivatives kernel_K0_boundary_derivatives(double t,
                                                     const Mass& mass) {
  const cplx M2 = mass.squared();
  const cplx M4 = M2 * M2;
  const double em = std::exp(-0.5 * t);
  const double e1 = std::exp(0.5 * t);
  const double e3 = std::exp(1.5 * t);
  const double e5 = std::exp(2.5 * t);
  K0BoundaryDerivatives d;
  d.k0_r = -M4 / 16.0 * e1 + M4 / 8.0 * e3 - M4 / 16.0 * e5 -
           7.0 / 32.0 * M2 * e1 + M2 / 16.0 * e3 + 5.0 / 32.0 * M2 * e5 +
           15.0 / 256.0 * e1 - 3.0 / 128.0 * e3 - 9.0 / 256.0 * e5;
  d.k0_t = M4 / 16.0 * em - M4 / 8.0 * e1 + M4 / 16.0 * e3 +
           7.0 / 32.0 * M2 * em - 3.0 / 16.0 * M2 * e1 +
           7.0 / 32.0 * M2 * e3 - 15.0 / 256.0 * em - 9.0 / 128.0 * e1 -
           15.0 / 256.0 * e3;
  if (mass.is_real_or_imaginary()) {
    d.k0_r.imag(0.0);
    d.k0_t.imag(0.0);
  }
  return d;
}

cplx kernel_K0(double z, double t, const Mass& mass,
               const KernelOptions& opts) {
  if (!(t > 0.0)) {
    raise(ErrorKind::domain, "K0 requires t > 0");
  }
  const double ph = phi(t);
  if (!(z >= 0.0) || z > ph * (1.0 + 8e-16)) {
    raise(ErrorKind::domain, "K0 requires 0 <= z <= 1 - e^{-t}");
  }
  const double eps = opts.k0_blend_eps;
  const double z0 = (1.0 - eps) * ph;
  if (z <= z0) {
    return kernel_K0_direct(z, t, mass, opts);
  }

  // Cubic Hermite on [z0, phi]. Value and slope at z0 come from the
  // regularized form (slope by a five-point difference); the direct formula
  // has lost about log10(1/eps) digits to its 0/0 there. Value and slope at
  // phi are the closed-form limits.
  const double w = ph - z0;
  const double hs = 0.25 * w;
  const auto regular = [&](double x) {
    return kernel_K0_regular(x, t, mass, opts);
  };
  const cplx f0 = regular(z0);
  const cplx d0 = (regular(z0 - 2.0 * hs) - 8.0 * regular(z0 - hs) +
                   8.0 * regular(z0 + hs) - regular(z0 + 2.0 * hs)) /
                  (12.0 * hs);
  const cplx f1 = kernel_K0_endpoint(t, mass);
  const cplx d1 = kernel_K0_boundary_derivatives(t, mass).k0_r;

  const double s = std::min(1.0, (z - z0) / w);
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * f0 + h10 * w * d0 + h01 * f1 + h11 * w * d1;
}

}  // namespace dskg
