#pragma once

#include <stdexcept>
#include <string>

namespace dskg {

enum class ErrorKind {
  domain,
  invalid_params,
  non_convergence,
  depth_exceeded,
  step_failure,
  cfl_violation,
  boundary_unsupported,
  not_real,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C layer can map
// it onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace dskg
