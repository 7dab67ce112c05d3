#pragma once

#include <stdexcept>
#include <string>

namespace wfh {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inconsistent or unsupported configuration (arity mismatch, bad sweep file).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise invalid numerical result.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root-finding bracket without a sign change.
class BracketError : public NumericError {
 public:
  using NumericError::NumericError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wfh
