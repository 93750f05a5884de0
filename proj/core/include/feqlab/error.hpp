#pragma once

#include <stdexcept>
#include <string>

namespace feqlab {

/// Base class for every error raised by the library. Messages are stable
/// strings that callers (and the CLI) may match on.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation or substitution hit a zero denominator.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace feqlab
