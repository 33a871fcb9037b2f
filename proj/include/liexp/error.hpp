#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liexp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands were built over different parameter contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// Two UEA operands belong to different Lie algebras.
class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by the epsilon -> 0 limit when a term keeps a negative power.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(int power)
      : Error("coefficient diverges as eps -> 0 (eps^" + std::to_string(power) + ")"),
        power_(power) {}

  int power() const noexcept { return power_; }

 private:
  int power_;
};

/// Syntax or resolution error in textual input. Offsets are 0-based,
/// line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        message_(what),
        offset_(offset),
        line_(line),
        column_(column) {}

  /// The description without the location suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace liexp
