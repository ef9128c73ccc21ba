#pragma once

#include <stdexcept>
#include <string>

namespace qcover {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checked 64-bit arithmetic left its range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (coset limit, element cap, enumeration cap) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad word syntax, ragged matrix, non-bijective images.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts a structural guarantee. Signals a bug in a
/// construction, never a user error.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace qcover
