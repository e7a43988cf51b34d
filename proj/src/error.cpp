#include "dskg/error.hpp"

#include "dskg/mass.hpp"

namespace dskg {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "DomainError";
    case ErrorKind::invalid_params: return "InvalidParams";
    case ErrorKind::non_convergence: return "NonConvergence";
    case ErrorKind::depth_exceeded: return "DepthExceeded";
    case ErrorKind::step_failure: return "StepFailure";
    case ErrorKind::cfl_violation: return "CFLViolation";
    case ErrorKind::boundary_unsupported: return "BoundaryUnsupported";
    case ErrorKind::not_real: return "NotReal";
  }
  return "Error";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

Mass Mass::curved(cplx m) {
  if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
    raise(ErrorKind::invalid_params, "mass must be finite");
  }
  return Mass{m, MassConvention::imaginary_mass};
}

Mass Mass::physical(double m) {
  if (!std::isfinite(m)) {
    raise(ErrorKind::invalid_params, "physical mass must be finite");
  }
  return Mass{cplx{0.0, -m}, MassConvention::real_mass};
}

}  // namespace dskg
