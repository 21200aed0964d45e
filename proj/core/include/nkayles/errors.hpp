#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nkayles {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Input exceeds a configured size cap of an exponential routine.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Invalid generator family or parameter.
class InvalidSpec : public Error {
public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a library bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace nkayles
