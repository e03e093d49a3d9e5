#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aeap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed DSL text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid input: unknown entity, bad label, precondition violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured evaluation cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace aeap
