#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace perminv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: cycle notation, flags, characteristic lists.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands that do not fit together (arity mismatch, bad prime, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was hit. `lower_bound` is the size reached when
/// the computation stopped, so the true size is at least that large.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t lower_bound)
      : Error(what), lower_bound_(lower_bound) {}

  std::uint64_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t lower_bound_;
};

/// Two independent computations of the same quantity disagreed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace perminv
