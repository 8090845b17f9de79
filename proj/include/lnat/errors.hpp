#ifndef LNAT_ERRORS_HPP
#define LNAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lnat {

// Construction-time validation failures of a domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyDomainError : DomainError {
  using DomainError::DomainError;
};

struct NotFullDimensionalError : DomainError {
  using DomainError::DomainError;
};

struct DimensionMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration would exceed the configured cap.
struct TooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A query point lies outside conv(K).
struct OutOfDomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A refined region (domain + extra box) is empty.
struct InfeasibleRegionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative projection ran out of sweeps; carries the last residual.
struct NonConvergenceError : std::runtime_error {
  NonConvergenceError(const std::string& what, double residual_)
      : std::runtime_error(what), residual(residual_) {}
  double residual;
};

// A generated instance failed its convexity certification.
struct CertificationError : std::runtime_error {
  CertificationError(const std::string& what, std::string witness_)
      : std::runtime_error(what), witness(std::move(witness_)) {}
  std::string witness;
};

// Experiment configuration is invalid (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lnat

#endif
