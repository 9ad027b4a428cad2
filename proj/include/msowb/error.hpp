#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msowb {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold (bad dimension, non-edge, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The input is larger than an exhaustive procedure is prepared to handle.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed formula text. Carries the 1-based position of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A vertex variable used where a set variable is expected, or vice versa.
class KindError : public Error {
 public:
  using Error::Error;
};

/// Evaluation could not proceed (unbound variable, unknown label, wrong signature).
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Malformed text in one of the file formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace msowb
