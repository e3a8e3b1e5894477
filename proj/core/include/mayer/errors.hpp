#pragma once

#include <stdexcept>
#include <string>

namespace mayer {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration was asked for a size beyond its guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (r <= 0, a outside a validity window, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A hard-core (+inf) pair entry was used before a finite cutoff was configured.
class UnconfiguredCutoffError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach its tolerance within its budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_estimate)
      : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

// An improper radial integral does not converge (tail not integrable in d dimensions).
class TemperednessError : public Error {
 public:
  using Error::Error;
};

// The short-range condition V(r) >= V(a) > 0 on (0, a] fails.
class NotBasuevError : public Error {
 public:
  NotBasuevError(const std::string& what, double witness_radius)
      : Error(what), witness_radius_(witness_radius) {}

  double witness_radius() const noexcept { return witness_radius_; }

 private:
  double witness_radius_;
};

// A mu(a) bound was requested for a potential it does not apply to.
class MethodMismatchError : public Error {
 public:
  using Error::Error;
};

// No cut radius in the search interval satisfies the criterion.
class NoValidRadiusError : public Error {
 public:
  using Error::Error;
};

}  // namespace mayer
