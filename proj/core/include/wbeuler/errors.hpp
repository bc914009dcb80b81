#pragma once

#include <stdexcept>
#include <string>

namespace wbeuler {

/// Raised when a density or pressure that must be positive is not.
/// The message carries the location (cell, point) where it was detected.
class NonPhysicalState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration or scheme parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two fields that must share a grid do not.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wbeuler
