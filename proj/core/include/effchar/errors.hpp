#pragma once

#include <stdexcept>
#include <string>

namespace effchar {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its contract.
class PreconditionError : public Error {
public:
  using Error::Error;
};

// A deliberate scale limit was hit; the message names the limit.
// Callers that can degrade (e.g. the verification sweep) turn this
// into an explicit SKIP, never into a silent partial answer.
class CapExceededError : public Error {
public:
  using Error::Error;
};

// Malformed text input, with a 1-based position.
class ParseError : public Error {
public:
  ParseError(const std::string &what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line), column(column) {}
  int line;
  int column;
};

// A checked mathematical invariant failed.  Either a library defect or a
// falsified expectation; never swallowed.
class InternalError : public Error {
public:
  using Error::Error;
};

// A cross-check that the theory says must hold came out false.
class FalsificationError : public Error {
public:
  using Error::Error;
};

} // namespace effchar
