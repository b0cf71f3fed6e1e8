#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selfdual {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text or JSON that does not parse (bad token, bad character, bad shape).
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  explicit InputError(const std::string& what) : Error(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arguments outside an operation's domain (K > L, dimension mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a connection invariant.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A value is not in the image of a map at the current truncation.
class NotInRange : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (node budget, enumeration guard) was hit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace selfdual
