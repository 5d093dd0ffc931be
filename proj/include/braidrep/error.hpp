#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidrep {

// Base of all library errors. Computation-level failures and input errors are
// kept as distinct types so callers (the CLI in particular) can map them to
// different exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text or data (polynomials, braid words, JSON documents).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit ParseError(const std::string& what) : Error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An argument outside the domain of an operation: index out of range,
// mismatched strand counts, zero specialization of a unit.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A braid whose permutation image is not the identity was given where a pure
// braid is required.
class NotPureError : public Error {
 public:
  using Error::Error;
};

// Non-generic dynamics: coincident event times or a tangential collinearity.
class DegenerateEventError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidrep
