#pragma once

#include <stdexcept>

namespace gbcode {

// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible lengths (variable counts, word sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Value outside an operation's domain (zero polynomial, non-squarefree
// monomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A configurable safety cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (matrix files, bit strings, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// The received word cannot be corrected within the code's radius.
class DecodeFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace gbcode
