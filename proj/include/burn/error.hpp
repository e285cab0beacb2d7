#pragma once

#include <stdexcept>
#include <string>

namespace burn {

/// Base of every error raised by the library. `kind()` is a stable tag used in
/// the CLI's JSON error lines.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Bad parameters, malformed config, precondition violations.
class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

class DimensionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
  const char* kind() const noexcept override { return "dimension"; }
};

/// Arithmetic left the representable range. Never wraps.
class OverflowError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "overflow"; }
};

/// An activation lies inside N[B_{n-1}].
class InvalidActivation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_activation"; }
};

/// An activation lies outside the grid at its activation time.
class OutsideGrid : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "outside_grid"; }
};

/// An exact engine would exceed its cell budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget"; }
};

}  // namespace burn
