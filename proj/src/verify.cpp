#include "dskg/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "dskg/hypergeom.hpp"
#include "dskg/transform.hpp"
#include "parallel.hpp"
#include "ridders.hpp"

namespace dskg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double radical_inverse(std::uint64_t n, unsigned base) {
  double inv = 1.0 / base;
  double f = inv;
  double x = 0.0;
  while (n > 0) {
    x += f * static_cast<double>(n % base);
    n /= base;
    f *= inv;
  }
  return x;
}

std::string case_name(std::size_t mass_index, std::uint64_t sample) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "m%02zu-s%05llu", mass_index,
                static_cast<unsigned long long>(sample));
  return buf;
}

bool is_canary(const Mass& m) { return m.value == cplx{0.5, 0.0}; }

double rel(cplx value, cplx expected) {
  const double diff = std::abs(value - expected);
  const double scale = std::max(std::abs(value), std::abs(expected));
  return scale == 0.0 ? diff : diff / scale;
}

// Relative difference with the scale floored at `floor`, for quantities
// that vanish identically for some masses.
double rel_floor(cplx value, cplx expected, double floor) {
  const double scale =
      std::max({std::abs(value), std::abs(expected), floor});
  return std::abs(value - expected) / scale;
}

// Value with first and second derivative along one variable.
struct Jet {
  cplx v, d, dd;
};

Jet operator+(Jet x, Jet y) { return {x.v + y.v, x.d + y.d, x.dd + y.dd}; }
Jet operator-(Jet x, Jet y) { return {x.v - y.v, x.d - y.d, x.dd - y.dd}; }
Jet operator*(cplx k, Jet x) { return {k * x.v, k * x.d, k * x.dd}; }
Jet operator*(Jet x, Jet y) {
  return {x.v * y.v, x.d * y.v + x.v * y.d,
          x.dd * y.v + 2.0 * x.d * y.d + x.v * y.dd};
}

// g(x) given g, g', g'' at x.v.
Jet compose(Jet x, cplx g0, cplx g1, cplx g2) {
  return {g0, g1 * x.d, g2 * x.d * x.d + g1 * x.dd};
}

Jet jexp(Jet x) {
  const cplx e = std::exp(x.v);
  return compose(x, e, e, e);
}

Jet jpow(Jet x, cplx p) {
  const cplx v = std::pow(x.v, p);
  return compose(x, v, p * v / x.v, p * (p - 1.0) * v / (x.v * x.v));
}

Jet jhyp(cplx a, cplx b, cplx c, Jet x) {
  // Rounding can push the argument just below 0 at the endpoint.
  const double z = std::max(0.0, x.v.real());
  const cplx f0 = gauss_2f1({a, b, c, z});
  const cplx f1 = a * b / c * gauss_2f1({a + 1.0, b + 1.0, c + 1.0, z});
  const cplx f2 = a * b * (a + 1.0) * (b + 1.0) / (c * (c + 1.0)) *
                  gauss_2f1({a + 2.0, b + 2.0, c + 2.0, z});
  return compose(x, f0, f1, f2);
}

// Regularized K0 with derivatives along (z, t) = (z, t) + s (dz, dt):
//   4^{-M} e^{tM} rho^{M-1/2} [-F(a,a;1;g)/2 - (1/4-M^2) w/rho F(a,a+1;2;g)]
// with a = 1/2-M, rho = (1+e^{-t})^2 - z^2, g = ((1-e^{-t})^2 - z^2)/rho and
// w = 1 - e^{-2t} + z^2. Exact derivatives for the PDE check of K0.
Jet k0_jet(double z, double t, double dz, double dt, const Mass& mass) {
  const cplx M = mass.value;
  const cplx a = 0.5 - M;
  const Jet zz{z, dz, 0.0};
  const Jet tt{t, dt, 0.0};
  const Jet et = jexp(-1.0 * tt);
  const Jet one{1.0, 0.0, 0.0};
  const Jet z2 = zz * zz;
  const Jet sp = one + et;
  const Jet sm = one - et;
  const Jet rho = sp * sp - z2;
  const Jet inv_rho = jpow(rho, -1.0);
  const Jet g = (sm * sm - z2) * inv_rho;
  const Jet w = one - et * et + z2;
  const Jet pre = std::pow(4.0, -M) * (jexp(M * tt) * jpow(rho, M - 0.5));
  const Jet bracket = -0.5 * jhyp(a, a, 1.0, g) -
                      (0.25 - M * M) * (w * inv_rho * jhyp(a, a + 1.0, 2.0, g));
  return pre * bracket;
}

// Collects the cases of one (mass, sample) pair. A check that throws is
// recorded as a failure with infinite residual.
class CaseSink {
 public:
  CaseSink(std::vector<SuiteCase>& out, const Mass& mass, std::string id,
           double tol)
      : out_(out), mass_(mass), id_(std::move(id)), tol_(tol) {}

  template <class Fn>
  void check(const char* suite, const KernelPoint& p, Fn&& fn) {
    record(suite, p, fn, tol_);
  }

 private:
  template <class Fn>
  void record(const char* suite, const KernelPoint& p, Fn& fn, double tol) {
    double residual = kInf;
    try {
      residual = fn();
    } catch (const Error&) {
      residual = kInf;
    }
    if (std::isnan(residual)) residual = kInf;
    out_.push_back({suite, id_, p.r, p.t, p.b, mass_.value, residual, tol,
                    residual <= tol});
  }

  std::vector<SuiteCase>& out_;
  const Mass& mass_;
  std::string id_;
  double tol_;
};

void kernel_identities(const Mass& mass, const KernelPoint& p,
                       const KernelOptions& kopts, CaseSink& sink) {
  const cplx M = mass.value;
  const cplx M2 = mass.squared();
  const double t = p.t;
  const double b = p.b;
  const double eb = std::exp(-b);
  const double et = std::exp(-t);
  const double D = eb - et;
  const double S = eb + et;
  const double ph = phi(t);
  const double q = D > 0.0 ? p.r / D : 0.0;
  KernelOptions past = kopts;
  past.allow_past = true;

  sink.check("E_pde", p, [&] {
    const cplx E = kernel_E(p, mass, kopts);
    const cplx Ett = kernel_E_tt(p, mass, kopts);
    const cplx Err = std::exp(-2.0 * t) * kernel_E_rr(p, mass, kopts);
    const double scale = std::abs(Ett) + std::abs(Err) + std::abs(M2 * E);
    return std::abs(Ett - Err - M2 * E) / scale;
  });

  const KernelPoint edge{D, t, b};
  sink.check("E_cone_derivative", edge, [&] {
    const cplx a = 2.0 * kernel_E_r(edge, mass, kopts);
    const cplx c = 2.0 * std::exp(t) * kernel_E_t(edge, mass, kopts);
    const double d = std::exp(t) / std::sqrt(4.0 * std::exp(-b - t));
    const double scale = std::max({std::abs(a), std::abs(c), d});
    return std::abs(a + c - d) / scale;
  });

  sink.check("aux_cone_values", edge, [&] {
    const AuxValues v = aux(edge, mass, kopts);
    const AuxDerivatives d = aux_derivatives(edge, mass, kopts);
    const double ebt = std::exp(b + t);
    const double half = std::exp(0.5 * (b + t));
    double worst = 0.0;
    worst = std::max(worst, rel(v.alpha, 1.0));
    worst = std::max(worst, rel(v.beta, 0.5 * half));
    worst = std::max(worst, std::abs(v.gamma));
    worst = std::max(worst, rel(d.alpha_r, -M * D * ebt / 2.0));
    worst = std::max(worst, rel(d.beta_r, D * std::pow(ebt, 1.5) / 8.0));
    worst = std::max(worst, rel(d.gamma_r, -D * ebt / 2.0));
    worst = std::max(worst, rel(d.alpha_t, M - M * S * std::exp(b) / 2.0));
    worst = std::max(worst, rel(d.beta_t, et * S * std::pow(ebt, 1.5) / 8.0));
    worst = std::max(worst, rel(d.gamma_t, et * ebt * D / 2.0));
    worst = std::max(worst, rel(kernel_E(edge, mass, kopts), 0.5 * half));
    worst = std::max(worst, rel(kernel_E_r(edge, mass, kopts),
                                0.25 * (0.25 - M2) * (std::exp(t) - std::exp(b)) *
                                    half));
    worst = std::max(
        worst, rel(kernel_E_t(edge, mass, kopts),
                   std::exp(0.5 * (b - t)) *
                       (std::exp(b) * (1.0 - 4.0 * M2) + (4.0 * M2 + 3.0) * std::exp(t)) /
                       16.0));
    return worst;
  });

  sink.check("symmetry_bt", p, [&] {
    return rel(kernel_E({p.r, b, t}, mass, past), kernel_E(p, mass, kopts));
  });

  const KernelPoint k1_edge{ph, t, 0.0};
  sink.check("K1_endpoint", k1_edge, [&] {
    const cplx a = 2.0 * et * kernel_E_r(k1_edge, mass, kopts);
    const cplx c = 2.0 * kernel_E_t(k1_edge, mass, kopts);
    const cplx k1 = kernel_K1(ph, t, mass, kopts);
    const double scale = std::abs(a) + std::abs(c) + std::abs(k1);
    return std::max(std::abs(a + c - k1) / scale,
                    rel(k1, 0.5 * std::exp(0.5 * t)));
  });

  sink.check("K1_axis", {0.0, t, 0.0}, [&] {
    const cplx k1r = kernel_E_r({0.0, t, 0.0}, mass, kopts);
    return std::abs(k1r) / std::abs(kernel_K1(0.0, t, mass, kopts));
  });

  const double z = q * ph;
  const KernelPoint k1p{z, t, 0.0};
  sink.check("K1_pde", k1p, [&] {
    const cplx E = kernel_E(k1p, mass, kopts);
    const cplx Ett = kernel_E_tt(k1p, mass, kopts);
    const cplx Err = std::exp(-2.0 * t) * kernel_E_rr(k1p, mass, kopts);
    const double scale = std::abs(Ett) + std::abs(Err) + std::abs(M2 * E);
    return std::abs(Ett - Err - M2 * E) / scale;
  });

  sink.check("K0_endpoint_identity", {ph, t, 0.0}, [&] {
    const cplx k0 = kernel_K0_endpoint(t, mass);
    const K0BoundaryDerivatives d = kernel_K0_boundary_derivatives(t, mass);
    const cplx terms[] = {(0.25 - M2) * std::exp(0.5 * t), -2.0 * et * k0,
                          4.0 * et * et * d.k0_r, 4.0 * et * d.k0_t};
    cplx sum{};
    double scale = 0.0;
    for (const cplx& v : terms) {
      sum += v;
      scale += std::abs(v);
    }
    return std::abs(sum) / scale;
  });

  // K0(z,t) = -E_t(z, 0; 0, t): the b-derivative moved onto the first time
  // slot through the b <-> t symmetry of E. No 0/0 form anywhere.
  const auto k0_swap = [&](double zz, double tt) {
    return -kernel_E_t({zz, 0.0, tt}, mass, past);
  };
  const double eps = kopts.k0_blend_eps;

  sink.check("k0_swap_interior", k1p, [&] {
    return rel(kernel_K0(z, t, mass, kopts), k0_swap(z, t));
  });
  const double zb = ph * (1.0 - eps * q);
  sink.check("k0_swap_blend", {zb, t, 0.0}, [&] {
    return rel(kernel_K0(zb, t, mass, kopts), k0_swap(zb, t));
  });
  sink.check("k0_swap_endpoint", {ph, t, 0.0}, [&] {
    return rel(kernel_K0(ph, t, mass, kopts), k0_swap(ph, t));
  });

  // Finite-difference checks use points away from the endpoint zone. Step
  // sizes follow the local length scale ((1+e^{-t})^2 - z^2)/2, which
  // shrinks to about e^{-t} near the light cone.
  const double zf = 0.9 * z;
  const KernelPoint fp{zf, t, 0.0};
  const auto scale_at = [&](double zz) {
    const double s1 = 1.0 + et;
    return std::min(1.0, 0.5 * (s1 - zz) * (s1 + zz));
  };
  const double lf = scale_at(zf);

  // Central differences in b reach into b < 0, where the same closed form
  // is the kernel for data given before time 0.
  sink.check("k0_fd_b", fp, [&] {
    const double hmax = std::min({t, lf, -std::log(zf + et)});
    const auto e = [&](double bb) { return kernel_E({zf, t, bb}, mass, past); };
    const detail::Extrapolated fd = detail::ridders_best(
        [&](double h) { return (e(h) - e(-h)) / (2.0 * h); }, 0.5 * hmax, 2, 2);
    return rel_floor(kernel_K0(zf, t, mass, kopts), -fd.value, std::abs(e(0.0)));
  });

  // Second derivatives of K0 from jets of its regularized form. Difference
  // quotients cannot reach the tolerance here: at large t and small M the
  // derivatives are ~e^{-2t} times K0.
  sink.check("K0_pde", fp, [&] {
    const cplx k0tt = k0_jet(zf, t, 0.0, 1.0, mass).dd;
    const cplx k0rr = std::exp(-2.0 * t) * k0_jet(zf, t, 1.0, 0.0, mass).dd;
    const cplx f0 = M2 * kernel_K0(zf, t, mass, kopts);
    const double scale = std::abs(k0tt) + std::abs(k0rr) + std::abs(f0);
    return std::abs(k0tt - k0rr - f0) / scale;
  });

  // Derivatives at the axis and at the endpoint from jets of the regularized
  // form, which stays analytic up to and including z = phi(t).
  sink.check("K0_axis", {0.0, t, 0.0}, [&] {
    const cplx slope = k0_jet(0.0, t, 1.0, 0.0, mass).d;
    const double scale =
        (std::abs(kernel_K0(0.0, t, mass, kopts)) +
         std::abs(kernel_K0_endpoint(t, mass))) / ph;
    return std::abs(slope) / scale;
  });

  sink.check("k0_endpoint_r", {ph, t, 0.0}, [&] {
    const Jet j = k0_jet(ph, t, 1.0, 0.0, mass);
    const cplx expected = kernel_K0_boundary_derivatives(t, mass).k0_r;
    const double scale = std::abs(expected) + std::abs(j.d) + std::abs(j.v) / ph;
    return std::abs(j.d - expected) / scale;
  });

  sink.check("k0_endpoint_t", {ph, t, 0.0}, [&] {
    const Jet j = k0_jet(ph, t, 0.0, 1.0, mass);
    const cplx expected = kernel_K0_boundary_derivatives(t, mass).k0_t;
    const double scale = std::abs(expected) + std::abs(j.d) + std::abs(j.v);
    return std::abs(j.d - expected) / scale;
  });
}

}  // namespace

bool SuiteReport::all_pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const SuiteCase& c) { return !c.pass; }));
}

void SuiteReport::finalize() {
  std::stable_sort(cases.begin(), cases.end(),
                   [](const SuiteCase& a, const SuiteCase& b) {
                     if (a.suite != b.suite) return a.suite < b.suite;
                     return a.case_id < b.case_id;
                   });
  worst_residual = 0.0;
  for (const SuiteCase& c : cases) {
    worst_residual = std::max(worst_residual, c.residual);
  }
}

KernelPoint halton_point(std::uint64_t index) {
  const double t = 5.0 * radical_inverse(index, 2);
  const double b = radical_inverse(index, 3) * t;
  const double q = radical_inverse(index, 5);
  return {q * (std::exp(-b) - std::exp(-t)), t, b};
}

SuiteReport run_kernel_identity_suite(int sample_count,
                                      const std::vector<Mass>& masses,
                                      const IdentityConfig& cfg) {
  SuiteReport report;
  report.name = "kernel_identities";
  if (sample_count < 1) {
    raise(ErrorKind::invalid_params, "sample_count must be at least 1");
  }
  const std::size_t n = masses.size() * static_cast<std::size_t>(sample_count);
  std::vector<std::vector<SuiteCase>> slots(n);
  detail::parallel_for(n, cfg.threads, [&](std::size_t k) {
    const std::size_t mi = k / sample_count;
    const std::uint64_t si = k % sample_count;
    const Mass& mass = masses[mi];
    const KernelPoint p = halton_point(cfg.seed + si + 1);
    CaseSink sink(slots[k], mass, case_name(mi, si),
                  is_canary(mass) ? cfg.canary_tol : cfg.tol);
    kernel_identities(mass, p, cfg.kernel, sink);
  });
  for (auto& s : slots) {
    report.cases.insert(report.cases.end(), s.begin(), s.end());
  }
  report.finalize();
  return report;
}

SuiteReport run_derivative_suite(int sample_count,
                                 const std::vector<Mass>& masses,
                                 const IdentityConfig& cfg, double tol) {
  SuiteReport report;
  report.name = "analytic_derivatives";
  if (sample_count < 1) {
    raise(ErrorKind::invalid_params, "sample_count must be at least 1");
  }
  const std::size_t n = masses.size() * static_cast<std::size_t>(sample_count);
  std::vector<std::vector<SuiteCase>> slots(n);
  detail::parallel_for(n, cfg.threads, [&](std::size_t k) {
    const std::size_t mi = k / sample_count;
    const std::uint64_t si = k % sample_count;
    const Mass& mass = masses[mi];
    const KernelOptions& ko = cfg.kernel;
    // Interior of the wedge: t in [0.2, 5], b/t and r/(e^-b - e^-t) in
    // [0.1, 0.9].
    const KernelPoint raw = halton_point(cfg.seed + si + 1);
    const double t = 0.2 + 0.96 * raw.t;
    const double u = 0.1 + 0.8 * (raw.t > 0.0 ? raw.b / raw.t : 0.5);
    const double b = u * t;
    const double D = std::exp(-b) - std::exp(-t);
    const double Draw = std::exp(-raw.b) - std::exp(-raw.t);
    const double q = 0.1 + 0.8 * (Draw > 0.0 ? raw.r / Draw : 0.5);
    const double r = q * D;
    const KernelPoint p{r, t, b};
    CaseSink sink(slots[k], mass, case_name(mi, si), tol);

    const double hr = 0.5 * std::min(r, D - r);
    // r <= e^{-b} - e^{-(t-h)} keeps the t-stencil admissible.
    const double ht = 0.5 * std::min(t - b, t + std::log(std::exp(-b) - r));
    const auto E = [&](double rr, double tt) {
      return kernel_E({rr, tt, b}, mass, ko);
    };
    const cplx f0 = E(r, t);

    sink.check("deriv_E_r", p, [&] {
      const auto est = [&](double h) { return (E(r + h, t) - E(r - h, t)) / (2 * h); };
      return rel_floor(kernel_E_r(p, mass, ko), detail::ridders_best(est, hr, 2, 2).value, std::abs(f0));
    });
    sink.check("deriv_E_rr", p, [&] {
      const auto est = [&](double h) {
        return (E(r + h, t) - 2.0 * f0 + E(r - h, t)) / (h * h);
      };
      return rel_floor(kernel_E_rr(p, mass, ko), detail::ridders_best(est, hr, 2, 2).value, std::abs(f0));
    });
    sink.check("deriv_E_t", p, [&] {
      const auto est = [&](double h) { return (E(r, t + h) - E(r, t - h)) / (2 * h); };
      return rel_floor(kernel_E_t(p, mass, ko), detail::ridders_best(est, ht, 2, 2).value, std::abs(f0));
    });
    sink.check("deriv_E_tt", p, [&] {
      const auto est = [&](double h) {
        return (E(r, t + h) - 2.0 * f0 + E(r, t - h)) / (h * h);
      };
      return rel_floor(kernel_E_tt(p, mass, ko), detail::ridders_best(est, ht, 2, 2).value, std::abs(f0));
    });
  });
  for (auto& s : slots) {
    report.cases.insert(report.cases.end(), s.begin(), s.end());
  }
  report.finalize();
  return report;
}

ModeComparison compare_mode(const ModeProblem& problem,
                            const std::vector<double>& t_grid,
                            const QuadratureConfig& cfg, double ode_tol) {
  ModeComparison out;
  if (t_grid.empty()) return out;
  const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
  const DenseSolution oracle = ode_oracle(problem, t_max, ode_tol);
  const double w = problem.frequency();
  // Eigenfunction cos(w x) evaluated at x = 0.
  const auto X = [w](double x) { return std::cos(w * x); };
  const InitialField v0 = [&](double x, double s) {
    return problem.c0 * X(x) * std::cos(w * s);
  };
  const InitialField v1 = [&](double x, double s) {
    return problem.c1 * X(x) * std::cos(w * s);
  };
  SourceField vf;
  if (problem.forcing) {
    vf = [&](double x, double r, double b) {
      return problem.forcing(b) * X(x) * std::cos(w * r);
    };
  }
  Transformer tr(problem.mass, cfg);
  double peak = 0.0;
  double worst = 0.0;
  for (double t : t_grid) {
    const double u = tr.full(vf, v0, v1, 0.0, t).real();
    const double y = oracle.value(t);
    out.t.push_back(t);
    out.u_transform.push_back(u);
    out.u_oracle.push_back(y);
    out.abs_err.push_back(std::abs(u - y));
    peak = std::max(peak, std::abs(y));
    worst = std::max(worst, std::abs(u - y));
  }
  out.max_relative = peak > 0.0 ? worst / peak : worst;
  return out;
}

SuiteReport run_mode_oracle_suite(const std::vector<ModeProblem>& problems,
                                  const std::vector<double>& t_grid,
                                  const QuadratureConfig& cfg, double tol) {
  SuiteReport report;
  report.name = "mode_oracle";
  for (double t : t_grid) {
    if (!(t >= 0.0 && t <= 5.0)) {
      raise(ErrorKind::invalid_params, "mode suite t_grid must lie in [0, 5]");
    }
  }
  std::vector<SuiteCase> slots(problems.size());
  detail::parallel_for(problems.size(), 0, [&](std::size_t k) {
    const ModeProblem& pr = problems[k];
    double residual = kInf;
    try {
      residual = compare_mode(pr, t_grid, cfg).max_relative;
    } catch (const Error&) {
      residual = kInf;
    }
    char id[16];
    std::snprintf(id, sizeof id, "p%03zu", k);
    const double t_end = t_grid.empty() ? 0.0 : t_grid.back();
    slots[k] = {"mode_transform_vs_ode", id, 0.0, t_end, 0.0, pr.mass.value,
                residual, tol, residual <= tol};
  });
  report.cases = std::move(slots);
  report.finalize();
  return report;
}

GridProblem1D GridExperiment::grid() const {
  GridProblem1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_x = n_x;
  g.boundary = boundary;
  const std::vector<double> x = g.nodes();
  g.phi0.resize(x.size());
  g.phi1.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    g.phi0[i] = phi0 ? phi0(x[i]) : 0.0;
    g.phi1[i] = phi1 ? phi1(x[i]) : 0.0;
  }
  g.f = f;
  return g;
}

GridComparison compare_grid(const GridExperiment& ex, const Mass& mass,
                            double t_max, const QuadratureConfig& cfg) {
  const GridProblem1D grid = ex.grid();
  grid.validate();
  const SpaceTimeField fd =
      fd_direct_solver(grid, mass, t_max, ex.cfl * grid.dx());

  InitialField v0, v1;
  SourceField vf;
  if (ex.phi0) v0 = [&](double x, double s) { return dalembert_v(ex.phi0, x, s); };
  if (ex.phi1) v1 = [&](double x, double s) { return dalembert_v(ex.phi1, x, s); };
  if (ex.f) {
    vf = [&](double x, double r, double b) {
      return 0.5 * (ex.f(x + r, b) + ex.f(x - r, b));
    };
  }

  GridComparison out;
  out.x = fd.x;
  out.t = fd.t.back();
  out.u_fd = fd.u.back();
  out.u_transform.assign(out.x.size(), 0.0);
  // One transformer per block of nodes: each reuses its kernel cache.
  const std::size_t n = out.x.size();
  const std::size_t blocks = std::min<std::size_t>(n, 64);
  detail::parallel_for(blocks, 0, [&](std::size_t blk) {
    Transformer tr(mass, cfg);
    for (std::size_t i = blk; i < n; i += blocks) {
      out.u_transform[i] = tr.full(vf, v0, v1, out.x[i], out.t).real();
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    out.linf = std::max(out.linf, std::abs(out.u_transform[i] - out.u_fd[i]));
  }
  return out;
}

SuiteReport run_end_to_end_suite(const GridExperiment& experiment,
                                 const Mass& mass, double t_max,
                                 const QuadratureConfig& cfg, double tol) {
  SuiteReport report;
  report.name = "end_to_end";
  const GridComparison c = compare_grid(experiment, mass, t_max, cfg);
  char id[32];
  std::snprintf(id, sizeof id, "nx%05d", experiment.n_x);
  report.cases.push_back({"transform_vs_fd", id, 0.0, c.t, 0.0, mass.value,
                          c.linf, tol, c.linf <= tol});
  report.finalize();
  return report;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const SuiteReport& report) {
  os << "suite,case_id,r,t,b,mass_re,mass_im,residual,tol,pass\n";
  for (const SuiteCase& c : report.cases) {
    os << c.suite << ',' << c.case_id << ',' << format_number(c.r) << ','
       << format_number(c.t) << ',' << format_number(c.b) << ','
       << format_number(c.mass.real()) << ',' << format_number(c.mass.imag())
       << ',' << format_number(c.residual) << ',' << format_number(c.tol) << ','
       << (c.pass ? "true" : "false") << '\n';
  }
}

}  // namespace dskg
