#ifndef DSKG_H
#define DSKG_H

/* C interface to the de Sitter Klein-Gordon integral-transform library.
 *
 * Every call that can fail returns a dskg_status; the message of the last
 * failure on a context is available from dskg_last_error. Handles are opaque
 * and owned by the caller once returned. A context must not be used from two
 * threads at once; separate contexts are independent. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DSKG_API __declspec(dllexport)
#elif defined(__GNUC__)
#define DSKG_API __attribute__((visibility("default")))
#else
#define DSKG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dskg_status {
  DSKG_OK = 0,
  DSKG_ERR_DOMAIN = 1,
  DSKG_ERR_INVALID_PARAMS = 2,
  DSKG_ERR_NON_CONVERGENCE = 3,
  DSKG_ERR_DEPTH_EXCEEDED = 4,
  DSKG_ERR_STEP_FAILURE = 5,
  DSKG_ERR_CFL_VIOLATION = 6,
  DSKG_ERR_BOUNDARY_UNSUPPORTED = 7,
  DSKG_ERR_NOT_REAL = 8,
  DSKG_ERR_NULL_ARGUMENT = 9,
  DSKG_ERR_OUT_OF_RANGE = 10,
  DSKG_ERR_INTERNAL = 11
} dskg_status;

typedef enum dskg_kernel {
  DSKG_KERNEL_E = 0,
  DSKG_KERNEL_E_R = 1,
  DSKG_KERNEL_E_RR = 2,
  DSKG_KERNEL_E_T = 3,
  DSKG_KERNEL_E_TT = 4,
  DSKG_KERNEL_K0 = 5,
  DSKG_KERNEL_K1 = 6
} dskg_kernel;

typedef enum dskg_boundary {
  DSKG_BOUNDARY_PERIODIC = 0,
  DSKG_BOUNDARY_DIRICHLET = 1
} dskg_boundary;

typedef struct dskg_complex {
  double re;
  double im;
} dskg_complex;

typedef struct dskg_context dskg_context;
typedef struct dskg_report dskg_report;
typedef struct dskg_table dskg_table;

/* One row of a report. The strings live as long as the report. */
typedef struct dskg_case {
  const char* suite;
  const char* case_id;
  double r;
  double t;
  double b;
  double mass_re;
  double mass_im;
  double residual;
  double tol;
  int pass;
} dskg_case;

typedef double (*dskg_profile_fn)(double x, void* user);
typedef double (*dskg_source_fn)(double x, double t, void* user);
typedef double (*dskg_forcing_fn)(double t, void* user);

/* Separable problem y'' - mu e^{-2t} y - M^2 y = g(t), y(0)=c0, y'(0)=c1.
 * The mass is taken from the context. forcing may be NULL. */
typedef struct dskg_mode_problem {
  double mu;
  double c0;
  double c1;
  dskg_forcing_fn forcing;
  void* forcing_user;
} dskg_mode_problem;

/* Grid experiment for A = d^2/dx^2. Any callback may be NULL (zero data). */
typedef struct dskg_grid_problem {
  double x_min;
  double x_max;
  int n_x;
  dskg_boundary boundary;
  double cfl;
  dskg_profile_fn phi0;
  dskg_profile_fn phi1;
  dskg_source_fn f;
  void* user;
} dskg_grid_problem;

DSKG_API const char* dskg_version(void);
DSKG_API const char* dskg_status_name(dskg_status status);

/* Defaults: M = 0, 16-point panels, tol 1e-9, depth 24, seed 0. */
DSKG_API dskg_context* dskg_context_create(void);
DSKG_API void dskg_context_destroy(dskg_context* ctx);
/* Message of the last failure, "" if none. Valid until the next call. */
DSKG_API const char* dskg_last_error(const dskg_context* ctx);

DSKG_API dskg_status dskg_set_mass(dskg_context* ctx, double re, double im);
/* Real-mass convention: stores M = -i m. */
DSKG_API dskg_status dskg_set_physical_mass(dskg_context* ctx, double m);
DSKG_API dskg_status dskg_get_mass(const dskg_context* ctx, dskg_complex* out);
DSKG_API dskg_status dskg_set_quadrature(dskg_context* ctx, int panel_order,
                                         double tol, int max_depth);
DSKG_API dskg_status dskg_set_seed(dskg_context* ctx, uint64_t seed);
/* 0 selects the hardware concurrency. */
DSKG_API dskg_status dskg_set_threads(dskg_context* ctx, unsigned threads);

/* Kernels at (r, t, b); K0 and K1 read r as z and ignore b. */
DSKG_API dskg_status dskg_eval_kernel(dskg_context* ctx, dskg_kernel kernel,
                                      double r, double t, double b,
                                      dskg_complex* out);
DSKG_API dskg_status dskg_gauss_2f1(dskg_context* ctx, dskg_complex a,
                                    dskg_complex b, dskg_complex c, double z,
                                    dskg_complex* out);

/* Transform of d'Alembert data on the real line at (x, t): phi0, phi1 and
 * f are the initial data and source of the target problem. */
DSKG_API dskg_status dskg_transform_line(dskg_context* ctx, dskg_profile_fn phi0,
                                         dskg_profile_fn phi1, dskg_source_fn f,
                                         void* user, double x, double t,
                                         double* out);

/* Identity suite over the given masses; masses == NULL with n_masses == 0
 * yields an empty report. tol applies to all masses but M = 1/2, which uses
 * canary_tol. */
DSKG_API dskg_status dskg_run_identities(dskg_context* ctx, int samples,
                                         const dskg_complex* masses,
                                         size_t n_masses, double tol,
                                         double canary_tol, dskg_report** out);
DSKG_API dskg_status dskg_run_derivatives(dskg_context* ctx, int samples,
                                          const dskg_complex* masses,
                                          size_t n_masses, double tol,
                                          dskg_report** out);
/* Appends the cases of src to dst. */
DSKG_API dskg_status dskg_report_merge(dskg_report* dst, const dskg_report* src);
DSKG_API size_t dskg_report_size(const dskg_report* report);
DSKG_API size_t dskg_report_failures(const dskg_report* report);
DSKG_API double dskg_report_worst(const dskg_report* report);
DSKG_API dskg_status dskg_report_case(const dskg_report* report, size_t index,
                                      dskg_case* out);
/* CSV with header suite,case_id,r,t,b,mass_re,mass_im,residual,tol,pass.
 * Owned by the report. */
DSKG_API const char* dskg_report_csv(dskg_report* report);
DSKG_API void dskg_report_destroy(dskg_report* report);

/* Columns t,u_transform,u_oracle,abs_err; summary = max |diff| / max |y|. */
DSKG_API dskg_status dskg_mode_compare(dskg_context* ctx,
                                       const dskg_mode_problem* problem,
                                       const double* t_grid, size_t n_t,
                                       double ode_tol, dskg_table** out);
/* Columns x,t,u_transform,u_fd,diff at t_max; summary = max |diff|. */
DSKG_API dskg_status dskg_grid_compare(dskg_context* ctx,
                                       const dskg_grid_problem* problem,
                                       double t_max, dskg_table** out);
DSKG_API size_t dskg_table_rows(const dskg_table* table);
DSKG_API size_t dskg_table_columns(const dskg_table* table);
DSKG_API const char* dskg_table_column_name(const dskg_table* table, size_t col);
DSKG_API double dskg_table_value(const dskg_table* table, size_t row, size_t col);
DSKG_API double dskg_table_summary(const dskg_table* table);
DSKG_API const char* dskg_table_csv(dskg_table* table);
DSKG_API void dskg_table_destroy(dskg_table* table);

#ifdef __cplusplus
}
#endif

#endif
