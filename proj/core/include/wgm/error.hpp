#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wgm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (x <= 0, m > n,
/// point inside the sphere, eps < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two field points coincide where the operation needs them distinct.
class CoincidenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative procedure did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> last_iterate)
      : Error(what), last_iterate_(last_iterate) {}
  explicit ConvergenceError(const std::string& what) : Error(what) {}

  std::complex<double> last_iterate() const { return last_iterate_; }

 private:
  std::complex<double> last_iterate_{};
};

/// Root refinement converged to a point that is not a decaying resonance.
class SpuriousRootError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// Root counting could not establish the order number of a mode.
class LabelingError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// The maximum of a windowed search sits on the window boundary.
class WindowTooSmallError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// Integration step violates the stability bound of the integrator.
class StabilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A run configuration failed schema validation.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace wgm
