#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension, or a dimension the operation does not support.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of the called operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace tropical
