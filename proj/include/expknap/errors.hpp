#pragma once

#include <stdexcept>
#include <string>

namespace expknap {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation that needs at least one item was given none.
struct EmptyInstanceError : Error {
  using Error::Error;
};

/// A caller-supplied argument violates an operation's precondition.
struct ArgumentError : Error {
  using Error::Error;
};

/// An instance file could not be parsed or failed validation.
struct InstanceParseError : Error {
  InstanceParseError(const std::string& what, int line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_number(line) {}
  int line_number;
};

/// An instance generator produced no pair of items with distinct
/// buck-per-bang values, so the weight-order frequency is undefined.
struct DegenerateGeneratorError : Error {
  using Error::Error;
};

/// The requested oracle resolution would need an unreasonably large table.
struct CapacityError : Error {
  using Error::Error;
};

}  // namespace expknap
