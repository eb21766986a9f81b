#pragma once

// Error taxonomy for the holosem library. All library errors derive from
// holosem::Error so callers can catch one base type; the harness maps the
// concrete types onto process exit codes.

#include <stdexcept>
#include <string>

namespace holosem {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid or mismatched vector/matrix/tensor dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: empty structures, zero vectors where a
// direction is required, category mismatches, out-of-range parameters.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Rank-deficient or near-singular role set in dual_basis. Carries the
// 1-norm condition estimate of the Gram matrix that triggered the refusal.
class SingularRolesError : public Error {
 public:
  SingularRolesError(const std::string& message, double condition_estimate)
      : Error(message), condition_estimate_(condition_estimate) {}
  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

// Harness: configuration failed validation (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Harness: file I/O failure (exit code 3).
class IoError : public Error {
 public:
  using Error::Error;
};

// Harness: an internal numeric self-check failed (exit code 4).
class NumericCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace holosem
