#pragma once

#include <stdexcept>
#include <string>

namespace attsync {

/// Input outside the mathematical domain of an operation (e.g. a matrix that
/// is not skew-symmetric, an angle beyond pi).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller broke an API contract (dimension mismatch, bad node id, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Some agent reached the axis-angle chart boundary ||x_i|| >= pi.
class SingularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scenario / configuration. The message names the offending field.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace attsync
