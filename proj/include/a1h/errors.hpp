#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace a1h {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Two operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero input, wrong ring kind,
/// unknown variable, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterated ideal quotients did not stabilize within the configured cap.
class SaturationCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A section of P^1 does not lift to the blowup under consideration.
class UnliftableSection : public Error {
 public:
  using Error::Error;
};

/// A result failed its own internal consistency check. Indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace a1h
