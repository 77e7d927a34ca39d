#pragma once
// Error types shared by all modules.
#include <stdexcept>
#include <string>

namespace monopole_lab {

/// Evaluation outside the domain of a chart or of a closed-form expression.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Evaluation too close to a singular point of a closed-form solution.
struct SingularityError : DomainError {
  using DomainError::DomainError;
};

/// Invalid index or argument combination (e.g. |m| > j).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Physically inadmissible parameter (e.g. |c| >= 1 for a dyon).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation not supported for the given configuration.
struct UnsupportedError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace monopole_lab
