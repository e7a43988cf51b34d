#include "dskg/transform.hpp"

#include <algorithm>
#include <cmath>

namespace dskg {

InitialField SampleProbe::wrap(InitialField field) {
  return [this, field = std::move(field)](double x, double s) {
    ++count_;
    max_argument_ = std::max(max_argument_, s);
    return field(x, s);
  };
}

SourceField SampleProbe::wrap(SourceField field) {
  return [this, field = std::move(field)](double x, double r, double b) {
    ++count_;
    max_argument_ = std::max(max_argument_, r);
    return field(x, r, b);
  };
}

void SampleProbe::reset() {
  count_ = 0;
  max_argument_ = 0.0;
}

Transformer::Transformer(Mass mass, QuadratureConfig cfg,
                         KernelOptions kernel_opts)
    : mass_(mass), cfg_(cfg), kopts_(kernel_opts) {
  cfg_.validate();
}

void Transformer::select_time(double t) {
  if (t != cache_t_) {
    cache_t_ = t;
    k0_cache_.clear();
    k1_cache_.clear();
  }
}

cplx Transformer::cached_k0(double s, double t) {
  select_time(t);
  auto [it, inserted] = k0_cache_.try_emplace(s);
  if (inserted) {
    it->second = kernel_K0(s, t, mass_, kopts_);
  } else {
    ++hits_;
  }
  return it->second;
}

cplx Transformer::cached_k1(double s, double t) {
  select_time(t);
  auto [it, inserted] = k1_cache_.try_emplace(s);
  if (inserted) {
    it->second = kernel_K1(s, t, mass_, kopts_);
  } else {
    ++hits_;
  }
  return it->second;
}

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    raise(ErrorKind::domain, "transform requires finite t >= 0");
  }
}

}  // namespace

cplx Transformer::phi1_term(const InitialField& v, double x, double t) {
  check_time(t);
  if (!v || t == 0.0) return {};
  const double ph = phi(t);
  const auto integrand = [&](double s) -> cplx {
    return v(x, s) * cached_k1(s, t);
  };
  return 2.0 * adaptive_quad(integrand, 0.0, ph, cfg_);
}

cplx Transformer::phi0_term(const InitialField& v, double x, double t) {
  check_time(t);
  if (!v) return {};
  if (t == 0.0) return v(x, 0.0);
  const double ph = phi(t);
  const double z0 = (1.0 - kopts_.k0_blend_eps) * ph;
  const auto integrand = [&](double s) -> cplx {
    return v(x, s) * cached_k0(s, t);
  };
  const cplx integral = adaptive_quad(integrand, 0.0, z0, cfg_) +
                        adaptive_quad(integrand, z0, ph, cfg_);
  return std::exp(0.5 * t) * v(x, ph) + 2.0 * integral;
}

cplx Transformer::source_term(const SourceField& v, double x, double t) {
  check_time(t);
  if (!v || t == 0.0) return {};
  QuadratureConfig inner = cfg_;
  inner.tol *= 0.1;
  const double et = std::exp(-t);
  const auto outer = [&](double b) -> cplx {
    const double reach = std::exp(-b) - et;
    if (!(reach > 0.0)) return {};
    const auto kernel = [&](double r) -> cplx {
      return v(x, r, b) * kernel_E({r, t, b}, mass_, kopts_);
    };
    return adaptive_quad(kernel, 0.0, reach, inner);
  };
  return 2.0 * adaptive_quad(outer, 0.0, t, cfg_);
}

cplx Transformer::full(const SourceField& vf, const InitialField& vphi0,
                       const InitialField& vphi1, double x, double t) {
  return source_term(vf, x, t) + phi0_term(vphi0, x, t) +
         phi1_term(vphi1, x, t);
}

cplx transform_phi1(const InitialField& v, double x, double t,
                    const Mass& mass, const QuadratureConfig& cfg) {
  return Transformer(mass, cfg).phi1_term(v, x, t);
}

cplx transform_phi0(const InitialField& v, double x, double t,
                    const Mass& mass, const QuadratureConfig& cfg) {
  return Transformer(mass, cfg).phi0_term(v, x, t);
}

cplx transform_source(const SourceField& v, double x, double t,
                      const Mass& mass, const QuadratureConfig& cfg) {
  return Transformer(mass, cfg).source_term(v, x, t);
}

cplx transform_full(const SourceField& vf, const InitialField& vphi0,
                    const InitialField& vphi1, double x, double t,
                    const Mass& mass, const QuadratureConfig& cfg) {
  return Transformer(mass, cfg).full(vf, vphi0, vphi1, x, t);
}

}  // namespace dskg
