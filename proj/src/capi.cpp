#include "dskg/dskg.h"

#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "dskg/hypergeom.hpp"
#include "dskg/kernels.hpp"
#include "dskg/transform.hpp"
#include "dskg/verify.hpp"
#include "dskg/wave_oracles.hpp"

struct dskg_context {
  dskg::Mass mass;
  dskg::QuadratureConfig quad;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string error;
};

struct dskg_report {
  dskg::SuiteReport report;
  std::string csv;
};

struct dskg_table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  double summary = 0.0;
  std::string csv;
};

namespace {

dskg_status status_of(dskg::ErrorKind kind) {
  using dskg::ErrorKind;
  switch (kind) {
    case ErrorKind::domain: return DSKG_ERR_DOMAIN;
    case ErrorKind::invalid_params: return DSKG_ERR_INVALID_PARAMS;
    case ErrorKind::non_convergence: return DSKG_ERR_NON_CONVERGENCE;
    case ErrorKind::depth_exceeded: return DSKG_ERR_DEPTH_EXCEEDED;
    case ErrorKind::step_failure: return DSKG_ERR_STEP_FAILURE;
    case ErrorKind::cfl_violation: return DSKG_ERR_CFL_VIOLATION;
    case ErrorKind::boundary_unsupported: return DSKG_ERR_BOUNDARY_UNSUPPORTED;
    case ErrorKind::not_real: return DSKG_ERR_NOT_REAL;
  }
  return DSKG_ERR_INTERNAL;
}

// Runs fn, translating exceptions into a status and the context's message.
template <class Fn>
dskg_status guarded(dskg_context* ctx, Fn&& fn) {
  if (!ctx) return DSKG_ERR_NULL_ARGUMENT;
  ctx->error.clear();
  try {
    fn();
    return DSKG_OK;
  } catch (const dskg::Error& e) {
    ctx->error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
  } catch (const std::exception& e) {
    ctx->error = e.what();
  } catch (...) {
    ctx->error = "unknown exception";
  }
  return DSKG_ERR_INTERNAL;
}

dskg_status fail(dskg_context* ctx, dskg_status s, const char* msg) {
  if (ctx) ctx->error = msg;
  return s;
}

dskg_complex to_c(dskg::cplx v) { return {v.real(), v.imag()}; }

std::vector<dskg::Mass> masses_of(const dskg_complex* m, std::size_t n) {
  std::vector<dskg::Mass> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(dskg::Mass::curved(m[i].re, m[i].im));
  return out;
}

dskg::IdentityConfig identity_config(const dskg_context* ctx) {
  dskg::IdentityConfig cfg;
  cfg.seed = ctx->seed;
  cfg.threads = ctx->threads;
  return cfg;
}

void build_csv(dskg_table& t) {
  std::ostringstream os;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    os << (c ? "," : "") << t.columns[c];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << dskg::format_number(row[c]);
    }
    os << '\n';
  }
  t.csv = os.str();
}

}  // namespace

extern "C" {

const char* dskg_version(void) { return "0.1.0"; }

const char* dskg_status_name(dskg_status status) {
  switch (status) {
    case DSKG_OK: return "ok";
    case DSKG_ERR_DOMAIN: return "DomainError";
    case DSKG_ERR_INVALID_PARAMS: return "InvalidParams";
    case DSKG_ERR_NON_CONVERGENCE: return "NonConvergence";
    case DSKG_ERR_DEPTH_EXCEEDED: return "DepthExceeded";
    case DSKG_ERR_STEP_FAILURE: return "StepFailure";
    case DSKG_ERR_CFL_VIOLATION: return "CflViolation";
    case DSKG_ERR_BOUNDARY_UNSUPPORTED: return "BoundaryUnsupported";
    case DSKG_ERR_NOT_REAL: return "NotReal";
    case DSKG_ERR_NULL_ARGUMENT: return "NullArgument";
    case DSKG_ERR_OUT_OF_RANGE: return "OutOfRange";
    case DSKG_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

dskg_context* dskg_context_create(void) {
  return new (std::nothrow) dskg_context();
}

void dskg_context_destroy(dskg_context* ctx) { delete ctx; }

const char* dskg_last_error(const dskg_context* ctx) {
  return ctx ? ctx->error.c_str() : "null context";
}

dskg_status dskg_set_mass(dskg_context* ctx, double re, double im) {
  return guarded(ctx, [&] { ctx->mass = dskg::Mass::curved(re, im); });
}

dskg_status dskg_set_physical_mass(dskg_context* ctx, double m) {
  return guarded(ctx, [&] { ctx->mass = dskg::Mass::physical(m); });
}

dskg_status dskg_get_mass(const dskg_context* ctx, dskg_complex* out) {
  if (!ctx || !out) return DSKG_ERR_NULL_ARGUMENT;
  *out = to_c(ctx->mass.value);
  return DSKG_OK;
}

dskg_status dskg_set_quadrature(dskg_context* ctx, int panel_order, double tol,
                                int max_depth) {
  return guarded(ctx, [&] {
    dskg::QuadratureConfig q{panel_order, tol, max_depth};
    q.validate();
    ctx->quad = q;
  });
}

dskg_status dskg_set_seed(dskg_context* ctx, uint64_t seed) {
  if (!ctx) return DSKG_ERR_NULL_ARGUMENT;
  ctx->seed = seed;
  return DSKG_OK;
}

dskg_status dskg_set_threads(dskg_context* ctx, unsigned threads) {
  if (!ctx) return DSKG_ERR_NULL_ARGUMENT;
  ctx->threads = threads;
  return DSKG_OK;
}

dskg_status dskg_eval_kernel(dskg_context* ctx, dskg_kernel kernel, double r,
                             double t, double b, dskg_complex* out) {
  if (!out) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "out is null");
  return guarded(ctx, [&] {
    const dskg::KernelPoint p{r, t, b};
    const dskg::Mass& m = ctx->mass;
    dskg::cplx v;
    switch (kernel) {
      case DSKG_KERNEL_E: v = dskg::kernel_E(p, m); break;
      case DSKG_KERNEL_E_R: v = dskg::kernel_E_r(p, m); break;
      case DSKG_KERNEL_E_RR: v = dskg::kernel_E_rr(p, m); break;
      case DSKG_KERNEL_E_T: v = dskg::kernel_E_t(p, m); break;
      case DSKG_KERNEL_E_TT: v = dskg::kernel_E_tt(p, m); break;
      case DSKG_KERNEL_K0: v = dskg::kernel_K0(r, t, m); break;
      case DSKG_KERNEL_K1: v = dskg::kernel_K1(r, t, m); break;
      default: dskg::raise(dskg::ErrorKind::invalid_params, "unknown kernel tag");
    }
    *out = to_c(v);
  });
}

dskg_status dskg_gauss_2f1(dskg_context* ctx, dskg_complex a, dskg_complex b,
                           dskg_complex c, double z, dskg_complex* out) {
  if (!out) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "out is null");
  return guarded(ctx, [&] {
    *out = to_c(dskg::gauss_2f1(
        {{a.re, a.im}, {b.re, b.im}, {c.re, c.im}, z}));
  });
}

dskg_status dskg_transform_line(dskg_context* ctx, dskg_profile_fn phi0,
                                dskg_profile_fn phi1, dskg_source_fn f,
                                void* user, double x, double t, double* out) {
  if (!out) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "out is null");
  return guarded(ctx, [&] {
    dskg::InitialField v0, v1;
    dskg::SourceField vf;
    const auto profile = [user](dskg_profile_fn fn) {
      return [fn, user](double y) { return fn(y, user); };
    };
    if (phi0) {
      v0 = [p = profile(phi0)](double y, double s) { return dskg::dalembert_v(p, y, s); };
    }
    if (phi1) {
      v1 = [p = profile(phi1)](double y, double s) { return dskg::dalembert_v(p, y, s); };
    }
    if (f) {
      vf = [f, user](double y, double r, double b) {
        return 0.5 * (f(y + r, b, user) + f(y - r, b, user));
      };
    }
    dskg::Transformer tr(ctx->mass, ctx->quad);
    *out = tr.full(vf, v0, v1, x, t).real();
  });
}

dskg_status dskg_run_identities(dskg_context* ctx, int samples,
                                const dskg_complex* masses, size_t n_masses,
                                double tol, double canary_tol, dskg_report** out) {
  if (!out) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "out is null");
  if (n_masses > 0 && !masses) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "masses is null");
  return guarded(ctx, [&] {
    if (samples < 1) dskg::raise(dskg::ErrorKind::invalid_params, "samples must be >= 1");
    dskg::IdentityConfig cfg = identity_config(ctx);
    cfg.tol = tol;
    cfg.canary_tol = canary_tol;
    auto* r = new dskg_report{};
    r->report = dskg::run_kernel_identity_suite(samples, masses_of(masses, n_masses), cfg);
    *out = r;
  });
}

dskg_status dskg_run_derivatives(dskg_context* ctx, int samples,
                                 const dskg_complex* masses, size_t n_masses,
                                 double tol, dskg_report** out) {
  if (!out) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "out is null");
  if (n_masses > 0 && !masses) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "masses is null");
  return guarded(ctx, [&] {
    if (samples < 1) dskg::raise(dskg::ErrorKind::invalid_params, "samples must be >= 1");
    auto* r = new dskg_report{};
    r->report = dskg::run_derivative_suite(samples, masses_of(masses, n_masses),
                                           identity_config(ctx), tol);
    *out = r;
  });
}

dskg_status dskg_report_merge(dskg_report* dst, const dskg_report* src) {
  if (!dst || !src) return DSKG_ERR_NULL_ARGUMENT;
  dst->report.cases.insert(dst->report.cases.end(), src->report.cases.begin(),
                           src->report.cases.end());
  dst->report.finalize();
  dst->csv.clear();
  return DSKG_OK;
}

size_t dskg_report_size(const dskg_report* report) {
  return report ? report->report.cases.size() : 0;
}

size_t dskg_report_failures(const dskg_report* report) {
  return report ? report->report.failures() : 0;
}

double dskg_report_worst(const dskg_report* report) {
  return report ? report->report.worst_residual : 0.0;
}

dskg_status dskg_report_case(const dskg_report* report, size_t index,
                             dskg_case* out) {
  if (!report || !out) return DSKG_ERR_NULL_ARGUMENT;
  if (index >= report->report.cases.size()) return DSKG_ERR_OUT_OF_RANGE;
  const dskg::SuiteCase& c = report->report.cases[index];
  *out = {c.suite.c_str(), c.case_id.c_str(), c.r, c.t, c.b, c.mass.real(),
          c.mass.imag(), c.residual, c.tol, c.pass ? 1 : 0};
  return DSKG_OK;
}

const char* dskg_report_csv(dskg_report* report) {
  if (!report) return "";
  if (report->csv.empty()) {
    std::ostringstream os;
    dskg::write_csv(os, report->report);
    report->csv = os.str();
  }
  return report->csv.c_str();
}

void dskg_report_destroy(dskg_report* report) { delete report; }

dskg_status dskg_mode_compare(dskg_context* ctx, const dskg_mode_problem* problem,
                              const double* t_grid, size_t n_t, double ode_tol,
                              dskg_table** out) {
  if (!out || !problem) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "null argument");
  if (n_t > 0 && !t_grid) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "t_grid is null");
  return guarded(ctx, [&] {
    dskg::ModeProblem p;
    p.mu = problem->mu;
    p.mass = ctx->mass;
    p.c0 = problem->c0;
    p.c1 = problem->c1;
    if (problem->forcing) {
      p.forcing = [fn = problem->forcing, user = problem->forcing_user](double t) {
        return fn(t, user);
      };
    }
    const std::vector<double> grid(t_grid, t_grid + n_t);
    const dskg::ModeComparison cmp = dskg::compare_mode(p, grid, ctx->quad, ode_tol);
    auto* t = new dskg_table{};
    t->columns = {"t", "u_transform", "u_oracle", "abs_err"};
    for (std::size_t i = 0; i < cmp.t.size(); ++i) {
      t->rows.push_back({cmp.t[i], cmp.u_transform[i], cmp.u_oracle[i], cmp.abs_err[i]});
    }
    t->summary = cmp.max_relative;
    *out = t;
  });
}

dskg_status dskg_grid_compare(dskg_context* ctx, const dskg_grid_problem* problem,
                              double t_max, dskg_table** out) {
  if (!out || !problem) return fail(ctx, DSKG_ERR_NULL_ARGUMENT, "null argument");
  return guarded(ctx, [&] {
    dskg::GridExperiment ex;
    ex.x_min = problem->x_min;
    ex.x_max = problem->x_max;
    ex.n_x = problem->n_x;
    ex.cfl = problem->cfl;
    switch (problem->boundary) {
      case DSKG_BOUNDARY_PERIODIC: ex.boundary = dskg::Boundary::periodic; break;
      case DSKG_BOUNDARY_DIRICHLET: ex.boundary = dskg::Boundary::dirichlet; break;
      default: dskg::raise(dskg::ErrorKind::boundary_unsupported, "unknown boundary tag");
    }
    void* user = problem->user;
    if (problem->phi0) {
      ex.phi0 = [fn = problem->phi0, user](double x) { return fn(x, user); };
    }
    if (problem->phi1) {
      ex.phi1 = [fn = problem->phi1, user](double x) { return fn(x, user); };
    }
    if (problem->f) {
      ex.f = [fn = problem->f, user](double x, double t) { return fn(x, t, user); };
    }
    const dskg::GridComparison cmp = dskg::compare_grid(ex, ctx->mass, t_max, ctx->quad);
    auto* t = new dskg_table{};
    t->columns = {"x", "t", "u_transform", "u_fd", "diff"};
    for (std::size_t i = 0; i < cmp.x.size(); ++i) {
      t->rows.push_back({cmp.x[i], cmp.t, cmp.u_transform[i], cmp.u_fd[i],
                         cmp.u_transform[i] - cmp.u_fd[i]});
    }
    t->summary = cmp.linf;
    *out = t;
  });
}

size_t dskg_table_rows(const dskg_table* table) {
  return table ? table->rows.size() : 0;
}

size_t dskg_table_columns(const dskg_table* table) {
  return table ? table->columns.size() : 0;
}

const char* dskg_table_column_name(const dskg_table* table, size_t col) {
  if (!table || col >= table->columns.size()) return nullptr;
  return table->columns[col].c_str();
}

double dskg_table_value(const dskg_table* table, size_t row, size_t col) {
  if (!table || row >= table->rows.size() || col >= table->columns.size()) {
    return 0.0;
  }
  return table->rows[row][col];
}

double dskg_table_summary(const dskg_table* table) {
  return table ? table->summary : 0.0;
}

const char* dskg_table_csv(dskg_table* table) {
  if (!table) return "";
  if (table->csv.empty()) build_csv(*table);
  return table->csv.c_str();
}

void dskg_table_destroy(dskg_table* table) { delete table; }

}  // extern "C"
