#pragma once

#include <stdexcept>
#include <string>

namespace ctwkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or out-of-range identifiers.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// An operation was called with arguments violating its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured size limit of an exact solver.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A property that holds by construction was found violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctwkit
