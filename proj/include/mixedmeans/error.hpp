#pragma once

#include <stdexcept>
#include <string>

namespace mixedmeans {

enum class ErrorKind {
  InvalidInput,
  Domain,
  ToleranceNotMet,
  ZeroConstantTerm,
  SingularParameter,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an adaptive integration exhausts its evaluation budget.
/// Carries the best estimate reached so callers can decide to use it anyway.
class ToleranceNotMet : public Error {
 public:
  ToleranceNotMet(const std::string& what, double best_estimate, double error_estimate)
      : Error(ErrorKind::ToleranceNotMet, what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace mixedmeans
