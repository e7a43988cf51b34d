#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace dskg::detail {

struct Extrapolated {
  std::complex<double> value;
  double error = std::numeric_limits<double>::infinity();
};

// Ridders' extrapolation of a difference quotient est(h) whose error
// expands as c_0 h^p0 + c_1 h^(p0+dp) + ... (symmetric stencils: dp = 2).
template <class Est>
Extrapolated ridders(Est&& est, double h0, int p0, int dp, double con = 1.4,
                     int ntab = 12) {
  std::vector<std::vector<std::complex<double>>> a(
      ntab, std::vector<std::complex<double>>(ntab));
  Extrapolated best;
  double h = h0;
  a[0][0] = est(h);
  best.value = a[0][0];
  for (int i = 1; i < ntab; ++i) {
    h /= con;
    a[0][i] = est(h);
    for (int j = 1; j <= i; ++j) {
      const double fac = std::pow(con, p0 + (j - 1) * dp);
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      const double errt = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                   std::abs(a[j][i] - a[j - 1][i - 1]));
      if (errt <= best.error) {
        best.error = errt;
        best.value = a[j][i];
      }
    }
    // Higher orders stopped helping; rounding now dominates.
    if (i >= 4 && std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * best.error) break;
  }
  return best;
}

}  // namespace dskg::detail

namespace dskg::detail {

// Runs the extrapolation from h0, h0/3 and h0/9 and keeps the estimate with
// the smallest error: a too-large first step can stall the tableau.
template <class Est>
Extrapolated ridders_best(Est&& est, double h0, int p0, int dp) {
  Extrapolated best;
  for (double shrink : {1.0, 1.0 / 3.0, 1.0 / 9.0}) {
    const Extrapolated e = ridders(est, h0 * shrink, p0, dp);
    if (e.error < best.error) best = e;
  }
  return best;
}

}  // namespace dskg::detail
