#pragma once

#include <stdexcept>
#include <string>

namespace knotzeta {

/// Base for every error raised by the library. The CLI maps subclasses to
/// exit codes: InputError -> 2, InconsistencyError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Bad user input: malformed text, invalid diagram, violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input"; }
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line, int column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  int line_;
  int column_;
};

class DiagramError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "diagram"; }
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "precondition"; }
};

/// Raised when enumeration would exceed its configured cap.
class LimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "limit"; }
};

/// Two routes that must agree did not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "inconsistency"; }
};

}  // namespace knotzeta
