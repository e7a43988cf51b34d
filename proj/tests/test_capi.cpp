#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "dskg/dskg.h"

namespace {

double gauss(double x, void*) { return std::exp(-x * x); }
double exp_decay(double t, void*) { return std::exp(-t); }

struct Ctx {
  dskg_context* p = dskg_context_create();
  ~Ctx() { dskg_context_destroy(p); }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("context lifecycle and errors") {
  Ctx c;
  REQUIRE(c.p != nullptr);
  CHECK(std::string(dskg_version()).size() > 0);
  CHECK(std::string(dskg_status_name(DSKG_ERR_CFL_VIOLATION)) == "CflViolation");
  CHECK(std::string(dskg_last_error(c.p)).empty());
  dskg_complex m{};
  CHECK(dskg_set_physical_mass(c.p, 0.4) == DSKG_OK);
  CHECK(dskg_get_mass(c.p, &m) == DSKG_OK);
  CHECK(m.re == 0.0);
  CHECK(m.im == doctest::Approx(-0.4));
  CHECK(dskg_set_quadrature(c.p, 1, 1e-9, 24) == DSKG_ERR_INVALID_PARAMS);
  CHECK(std::string(dskg_last_error(c.p)).size() > 0);
  CHECK(dskg_get_mass(c.p, nullptr) == DSKG_ERR_NULL_ARGUMENT);
  CHECK(dskg_set_mass(nullptr, 0.0, 0.0) == DSKG_ERR_NULL_ARGUMENT);
  dskg_context_destroy(nullptr);
}

TEST_CASE("kernels through the C boundary") {
  Ctx c;
  dskg_complex out{};
  CHECK(dskg_set_mass(c.p, 0.5, 0.0) == DSKG_OK);
  CHECK(dskg_eval_kernel(c.p, DSKG_KERNEL_E, 0.0, 1.0, 1.0, &out) == DSKG_OK);
  CHECK(out.re == doctest::Approx(0.5 * std::exp(1.0)).epsilon(1e-14));
  CHECK(dskg_eval_kernel(c.p, DSKG_KERNEL_K1, 1.0 - std::exp(-1.0), 1.0, 0.0, &out) == DSKG_OK);
  CHECK(dskg_eval_kernel(c.p, DSKG_KERNEL_E, 0.9, 1.0, 0.0, &out) == DSKG_ERR_DOMAIN);
  CHECK(std::strstr(dskg_last_error(c.p), "e^{-b} - e^{-t}") != nullptr);
  CHECK(dskg_eval_kernel(c.p, static_cast<dskg_kernel>(42), 0.0, 1.0, 0.0, &out) ==
        DSKG_ERR_INVALID_PARAMS);
  dskg_complex a{0.5, 0.0}, b{0.5, 0.0}, cc{1.0, 0.0};
  CHECK(dskg_gauss_2f1(c.p, a, b, cc, 0.0, &out) == DSKG_OK);
  CHECK(out.re == 1.0);
  CHECK(dskg_gauss_2f1(c.p, a, b, cc, 0.995, &out) == DSKG_ERR_NON_CONVERGENCE);
}

TEST_CASE("transform on the line") {
  Ctx c;
  dskg_set_mass(c.p, 0.25, 0.0);
  double u = 1.0;
  CHECK(dskg_transform_line(c.p, nullptr, nullptr, nullptr, nullptr, 0.0, 1.0, &u) == DSKG_OK);
  CHECK(u == 0.0);
  CHECK(dskg_transform_line(c.p, gauss, nullptr, nullptr, nullptr, 0.3, 0.0, &u) == DSKG_OK);
  CHECK(u == doctest::Approx(std::exp(-0.09)).epsilon(1e-14));
  CHECK(dskg_transform_line(c.p, gauss, nullptr, nullptr, nullptr, 0.3, -1.0, &u) ==
        DSKG_ERR_DOMAIN);
}

TEST_CASE("reports") {
  Ctx c;
  const dskg_complex masses[] = {{0.5, 0.0}, {0.0, 0.3}};
  dskg_report* r = nullptr;
  REQUIRE(dskg_run_identities(c.p, 10, masses, 2, 1e-9, 1e-12, &r) == DSKG_OK);
  CHECK(dskg_report_size(r) > 20);
  CHECK(dskg_report_failures(r) == 0);
  CHECK(dskg_report_worst(r) <= 1e-9);
  dskg_case cs{};
  CHECK(dskg_report_case(r, 0, &cs) == DSKG_OK);
  CHECK(std::string(cs.suite).size() > 0);
  CHECK(dskg_report_case(r, dskg_report_size(r), &cs) == DSKG_ERR_OUT_OF_RANGE);
  const std::string csv = dskg_report_csv(r);
  CHECK(csv.rfind("suite,case_id,r,t,b,mass_re,mass_im,residual,tol,pass\n", 0) == 0);

  dskg_report* d = nullptr;
  REQUIRE(dskg_run_derivatives(c.p, 5, masses, 1, 1e-6, &d) == DSKG_OK);
  const std::size_t before = dskg_report_size(r);
  CHECK(dskg_report_merge(r, d) == DSKG_OK);
  CHECK(dskg_report_size(r) == before + dskg_report_size(d));
  dskg_report_destroy(d);
  dskg_report_destroy(r);

  dskg_report* e = nullptr;
  CHECK(dskg_run_identities(c.p, 10, nullptr, 0, 1e-9, 1e-12, &e) == DSKG_OK);
  CHECK(dskg_report_size(e) == 0);
  dskg_report_destroy(e);
  CHECK(dskg_run_identities(c.p, 10, nullptr, 2, 1e-9, 1e-12, &e) == DSKG_ERR_NULL_ARGUMENT);
}

TEST_CASE("comparison tables") {
  Ctx c;
  dskg_set_mass(c.p, 0.25, 0.0);
  dskg_mode_problem mp{-1.0, 1.0, 0.5, exp_decay, nullptr};
  const double grid[] = {0.0, 0.5, 1.0, 1.5, 2.0};
  dskg_table* t = nullptr;
  REQUIRE(dskg_mode_compare(c.p, &mp, grid, 5, 1e-12, &t) == DSKG_OK);
  CHECK(dskg_table_rows(t) == 5);
  CHECK(dskg_table_columns(t) == 4);
  CHECK(std::string(dskg_table_column_name(t, 1)) == "u_transform");
  CHECK(dskg_table_column_name(t, 9) == nullptr);
  CHECK(dskg_table_summary(t) <= 1e-6);
  CHECK(dskg_table_value(t, 0, 2) == doctest::Approx(1.0));
  CHECK(std::string(dskg_table_csv(t)).rfind("t,u_transform,u_oracle,abs_err\n", 0) == 0);
  dskg_table_destroy(t);

  dskg_grid_problem gp{0.0, 1.0, 11, DSKG_BOUNDARY_DIRICHLET, 1.2, nullptr, nullptr, nullptr, nullptr};
  CHECK(dskg_grid_compare(c.p, &gp, 0.5, &t) == DSKG_ERR_CFL_VIOLATION);
  gp.cfl = 0.5;
  REQUIRE(dskg_grid_compare(c.p, &gp, 0.5, &t) == DSKG_OK);
  CHECK(dskg_table_rows(t) == 11);
  CHECK(dskg_table_summary(t) == 0.0);
  dskg_table_destroy(t);
}

}
