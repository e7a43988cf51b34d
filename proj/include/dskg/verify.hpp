#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dskg/kernels.hpp"
#include "dskg/mass.hpp"
#include "dskg/quadrature.hpp"
#include "dskg/wave_oracles.hpp"

namespace dskg {

struct SuiteCase {
  std::string suite;    // identity or comparison name
  std::string case_id;  // unique within the report
  double r = 0.0;
  double t = 0.0;
  double b = 0.0;
  cplx mass;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteCase> cases;
  double worst_residual = 0.0;

  bool all_pass() const;
  std::size_t failures() const;
  /// Sorts cases by (suite, case_id) and recomputes worst_residual.
  void finalize();
};

struct IdentityConfig {
  std::uint64_t seed = 0;
  /// Relative tolerance; the canary mass M = 1/2 uses canary_tol.
  double tol = 1e-9;
  double canary_tol = 1e-12;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  KernelOptions kernel;
};

/// Halton point i (1-based, offset by seed) of the admissible wedge
/// 0 <= b <= t <= 5, 0 <= r <= e^{-b} - e^{-t}.
KernelPoint halton_point(std::uint64_t index);

/// Every exact kernel identity and the finite-difference kernel checks over
/// `sample_count` low-discrepancy points per mass.
SuiteReport run_kernel_identity_suite(int sample_count,
                                      const std::vector<Mass>& masses,
                                      const IdentityConfig& cfg = {});

/// Analytic E_r, E_rr, E_t, E_tt against extrapolated central differences of
/// E at interior points.
SuiteReport run_derivative_suite(int sample_count,
                                 const std::vector<Mass>& masses,
                                 const IdentityConfig& cfg = {},
                                 double tol = 1e-6);

struct ModeComparison {
  std::vector<double> t;
  std::vector<double> u_transform;
  std::vector<double> u_oracle;
  std::vector<double> abs_err;
  double max_relative = 0.0;  // max |diff| / max |u_oracle|
};

/// Transform of the separable problem (at x = 0 of the eigenfunction) against
/// the ODE oracle on t_grid.
ModeComparison compare_mode(const ModeProblem& problem,
                            const std::vector<double>& t_grid,
                            const QuadratureConfig& cfg = {},
                            double ode_tol = 1e-12);

SuiteReport run_mode_oracle_suite(const std::vector<ModeProblem>& problems,
                                  const std::vector<double>& t_grid,
                                  const QuadratureConfig& cfg = {},
                                  double tol = 1e-6);

/// Continuous data of the grid experiment for A = d^2/dx^2. The transform
/// side feeds d'Alembert solutions built from these profiles; the FD side
/// samples them on the grid.
struct GridExperiment {
  double x_min = -2.0;
  double x_max = 2.0;
  int n_x = 401;
  Boundary boundary = Boundary::dirichlet;
  Profile phi0;                                 // empty means 0
  Profile phi1;                                 // empty means 0
  std::function<double(double x, double t)> f;  // empty means 0
  double cfl = 0.5;                             // dt = cfl * dx

  GridProblem1D grid() const;
};

struct GridComparison {
  std::vector<double> x;
  double t = 0.0;
  std::vector<double> u_transform;
  std::vector<double> u_fd;
  double linf = 0.0;
};

GridComparison compare_grid(const GridExperiment& experiment, const Mass& mass,
                            double t_max, const QuadratureConfig& cfg = {});

SuiteReport run_end_to_end_suite(const GridExperiment& experiment,
                                 const Mass& mass, double t_max,
                                 const QuadratureConfig& cfg = {},
                                 double tol = 5e-3);

/// Shortest round-trip decimal form.
std::string format_number(double v);

/// Header suite,case_id,r,t,b,mass_re,mass_im,residual,tol,pass.
void write_csv(std::ostream& os, const SuiteReport& report);

}  // namespace dskg
