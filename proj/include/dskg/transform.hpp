#pragma once

#include <cstddef>
#include <functional>
#include <unordered_map>

#include "dskg/kernels.hpp"
#include "dskg/mass.hpp"
#include "dskg/quadrature.hpp"

namespace dskg {

/// v(x, s): solution of v_tt = A v with v(x,0) = data, v_t(x,0) = 0.
using InitialField = std::function<double(double x, double s)>;
/// v_f(x, r; b): same problem with data f(x, b) for each subsidiary time b.
using SourceField = std::function<double(double x, double r, double b)>;

/// Counts the samples a transform takes from a field and the largest second
/// argument requested. Not thread-safe; use one probe per evaluation.
class SampleProbe {
 public:
  InitialField wrap(InitialField field);
  SourceField wrap(SourceField field);

  std::size_t count() const { return count_; }
  double max_argument() const { return max_argument_; }
  void reset();

 private:
  std::size_t count_ = 0;
  double max_argument_ = 0.0;
};

/// Maps undamped solutions v into solutions of
///   u_tt - e^{-2t} A u - M^2 u = f,  u(x,0) = phi0, u_t(x,0) = phi1.
///
/// Holds a cache of K0/K1 values at the quadrature nodes of the current t,
/// so repeated evaluation over many x at one t reuses kernel values. The
/// cache does not change results; an instance must not be shared between
/// threads.
class Transformer {
 public:
  explicit Transformer(Mass mass, QuadratureConfig cfg = {},
                       KernelOptions kernel_opts = {});

  /// 2 int_0^{phi(t)} v(x,s) K1(s,t) ds.
  cplx phi1_term(const InitialField& v, double x, double t);
  /// e^{t/2} v(x, phi(t)) + 2 int_0^{phi(t)} v(x,s) K0(s,t) ds.
  cplx phi0_term(const InitialField& v, double x, double t);
  /// 2 int_0^t db int_0^{e^{-b}-e^{-t}} v_f(x,r;b) E(r,t;0,b) dr.
  cplx source_term(const SourceField& v, double x, double t);
  /// Sum of the three terms; empty fields contribute zero.
  cplx full(const SourceField& vf, const InitialField& vphi0,
            const InitialField& vphi1, double x, double t);

  const Mass& mass() const { return mass_; }
  const QuadratureConfig& config() const { return cfg_; }
  std::size_t cache_hits() const { return hits_; }

 private:
  cplx cached_k0(double s, double t);
  cplx cached_k1(double s, double t);
  void select_time(double t);

  Mass mass_;
  QuadratureConfig cfg_;
  KernelOptions kopts_;
  double cache_t_ = -1.0;
  std::unordered_map<double, cplx> k0_cache_;
  std::unordered_map<double, cplx> k1_cache_;
  std::size_t hits_ = 0;
};

cplx transform_phi1(const InitialField& v, double x, double t,
                    const Mass& mass, const QuadratureConfig& cfg = {});
cplx transform_phi0(const InitialField& v, double x, double t,
                    const Mass& mass, const QuadratureConfig& cfg = {});
cplx transform_source(const SourceField& v, double x, double t,
                      const Mass& mass, const QuadratureConfig& cfg = {});
cplx transform_full(const SourceField& vf, const InitialField& vphi0,
                    const InitialField& vphi1, double x, double t,
                    const Mass& mass, const QuadratureConfig& cfg = {});

}  // namespace dskg
