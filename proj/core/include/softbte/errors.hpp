#pragma once

#include <stdexcept>
#include <string>

namespace softbte {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (maps to CLI exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (negative density, s > t, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two fields or operators built on different velocity grids / layouts.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// Pointwise kernel evaluated on the diagonal u = v.
class SingularPair : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature did not reach its tolerance within the evaluation budget.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Decay fit could not be performed (too few rows, non-decaying data).
class FitDegenerate : public Error {
 public:
  using Error::Error;
};

}  // namespace softbte
