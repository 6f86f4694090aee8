#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

// Raised when an argument lies outside the mathematical domain of an
// operation (negative t for a Young function, t <= 0 for f**, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a documented precondition of an operation is violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the constant estimator when the chosen Young function does not
// satisfy the growth hypothesis of the inequality being probed.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file or description. Line and column are 1-based; a value of
// 0 means "unknown".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace orlicz
