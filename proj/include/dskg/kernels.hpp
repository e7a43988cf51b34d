#pragma once

#include "dskg/hypergeom.hpp"
#include "dskg/mass.hpp"

namespace dskg {

/// Observation radius r, observation time t and subsidiary time b.
/// Admissible when 0 <= b <= t and 0 <= r <= e^{-b} - e^{-t}.
struct KernelPoint {
  double r = 0.0;
  double t = 0.0;
  double b = 0.0;
};

struct AuxValues {
  cplx alpha;
  double beta = 0.0;
  double gamma = 0.0;
};

struct AuxDerivatives {
  cplx alpha_r;
  cplx alpha_rr;
  cplx alpha_t;
  double beta_r = 0.0;
  double beta_rr = 0.0;
  double beta_t = 0.0;
  double gamma_r = 0.0;
  double gamma_rr = 0.0;
  double gamma_t = 0.0;
};

struct K0BoundaryDerivatives {
  cplx k0_r;
  cplx k0_t;
};

struct KernelOptions {
  /// Width, relative to phi(t), of the K0 endpoint zone where the direct
  /// formula (a 0/0 form at z = phi(t)) is replaced by a cubic Hermite blend.
  double k0_blend_eps = 1e-4;
  /// For real or imaginary M, |Im| must stay below this fraction of the sum
  /// of the magnitudes of the contributing terms.
  double realness_tol = 1e-12;
  /// Accept the chronological past as well: |r| <= |e^{-b} - e^{-t}| with
  /// b > t, and b < 0. The formulas are unchanged there.
  bool allow_past = false;
  SeriesOptions series;
};

/// Horizon distance 1 - e^{-t}.
double phi(double t);

AuxValues aux(const KernelPoint& p, const Mass& mass,
              const KernelOptions& opts = {});
AuxDerivatives aux_derivatives(const KernelPoint& p, const Mass& mass,
                               const KernelOptions& opts = {});

// E(r,t;0,b;M) = alpha * beta * F(1/2-M, 1/2-M; 1; gamma) and its partial
// derivatives, each written as a combination of F(k+1/2-M, k+1/2-M; k+1;
// gamma), k = 0,1,2, with explicit coefficients.
cplx kernel_E(const KernelPoint& p, const Mass& mass,
              const KernelOptions& opts = {});
cplx kernel_E_r(const KernelPoint& p, const Mass& mass,
                const KernelOptions& opts = {});
cplx kernel_E_rr(const KernelPoint& p, const Mass& mass,
                 const KernelOptions& opts = {});
cplx kernel_E_t(const KernelPoint& p, const Mass& mass,
                const KernelOptions& opts = {});
cplx kernel_E_tt(const KernelPoint& p, const Mass& mass,
                 const KernelOptions& opts = {});

/// K1(z,t;M) = E(z,t;0,0;M) on 0 <= z <= phi(t).
cplx kernel_K1(double z, double t, const Mass& mass,
               const KernelOptions& opts = {});

/// K0(z,t;M) = -d/db E(z,t;0,b;M) at b = 0, for t > 0, 0 <= z <= phi(t).
/// Uses the closed two-term formula away from the endpoint and blends to the
/// exact endpoint limit within k0_blend_eps * phi(t) of it.
cplx kernel_K0(double z, double t, const Mass& mass,
               const KernelOptions& opts = {});

/// The closed two-term K0 formula without endpoint treatment; requires
/// z < phi(t).
cplx kernel_K0_direct(double z, double t, const Mass& mass,
                      const KernelOptions& opts = {});

/// The same function with the 0/0 removed: the contiguous relation
/// F(-1/2-M, 1/2-M; 1; g) = F(1/2-M, 1/2-M; 1; g) - (1/2-M) g F(1/2-M, 3/2-M; 2; g)
/// cancels the (1-e^{-t})^2 - z^2 denominator, giving
///   4^{-M} e^{tM} rho^{M-1/2} [-F/2 - (1/4-M^2)(1-e^{-2t}+z^2)/rho F(1/2-M,3/2-M;2;g)]
/// with rho = (1+e^{-t})^2 - z^2. Valid on the closed strip.
cplx kernel_K0_regular(double z, double t, const Mass& mass,
                       const KernelOptions& opts = {});

/// lim_{z -> phi(t)} K0(z,t;M).
cplx kernel_K0_endpoint(double t, const Mass& mass);

/// Endpoint limits of K0_r and K0_t.
K0BoundaryDerivatives kernel_K0_boundary_derivatives(double t,
                                                     const Mass& mass);

}  // namespace dskg
