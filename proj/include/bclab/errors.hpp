#pragma once

#include <stdexcept>
#include <string>

namespace bclab {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Input violates an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A query reaches past the finitely stored part of an infinite construction.
class TruncationExceeded : public Error {
 public:
  explicit TruncationExceeded(const std::string& what)
      : Error("truncation exceeded: " + what) {}
};

// Refusal to allocate an instance above the desk-scale caps.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bclab
