#pragma once

#include <stdexcept>
#include <string>

namespace driftlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Tensor shape / dimension mismatch. Messages name the offending shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition or API contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values or numerically invalid state.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Training produced non-finite losses or gradients.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed checkpoint or other binary artifact.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace driftlab
