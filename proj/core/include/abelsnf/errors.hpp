#pragma once

#include <stdexcept>
#include <string>

namespace abelsnf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad syntax, coordinate out of range,
/// modulus mismatch).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The requested computation falls outside the hypotheses under which it is
/// valid, e.g. a prime that divides the group order.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace abelsnf
