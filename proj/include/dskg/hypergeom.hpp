#pragma once

#include <complex>

#include "dskg/mass.hpp"

namespace dskg {

struct HypergeomArgs {
  cplx a;
  cplx b;
  cplx c;
  double z = 0.0;
};

struct SeriesOptions {
  double epsilon = 1e-15;
  int max_terms = 50000;
  /// Direct summation is only attempted up to this argument.
  double z_max = 0.99;
};

/// Gauss hypergeometric function F(a,b;c;z) by its power series, 0 <= z < 1.
///
/// Summation stops once a geometric bound on the remaining tail falls below
/// `epsilon` relative to the partial sum. Arguments above `z_max` raise
/// non_convergence: no connection formulas are implemented.
cplx gauss_2f1(const HypergeomArgs& args, const SeriesOptions& opts = {});

/// Series value together with sum |term_n|, the scale against which the
/// rounding error of the value is measured.
struct SeriesResult {
  cplx value;
  double abs_sum = 0.0;
  int terms = 0;
};

SeriesResult gauss_2f1_series(const HypergeomArgs& args,
                              const SeriesOptions& opts = {});

/// d/dz F(a,b;c;z) = (ab/c) F(a+1,b+1;c+1;z).
cplx gauss_2f1_dz(const HypergeomArgs& args, const SeriesOptions& opts = {});

/// Euler integral representation evaluated by double-exponential quadrature.
/// Requires Re c > Re b > 0. Test oracle only; accuracy is capped near 1e-13
/// by the gamma function.
cplx euler_integral_oracle(const HypergeomArgs& args);

/// Left-hand side of the hypergeometric ODE for a = b = 1/2 - M, c = 1:
///   z(1-z) F'' + (1 - (2a+1) z) F' - a^2 F.
cplx hypergeom_ode_residual(const Mass& mass, double z,
                            const SeriesOptions& opts = {});

/// Lanczos approximation (g = 7, 9 terms) with reflection for Re z < 1/2.
cplx complex_gamma(cplx z);

}  // namespace dskg
