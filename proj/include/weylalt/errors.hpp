#pragma once

#include <stdexcept>
#include <string>

namespace weylalt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector was expected to lie in the rational span of the simple roots.
class NotInRootSpan : public Error {
 public:
  using Error::Error;
};

/// (type, rank) outside the validity window of the type.
class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

/// A Weyl group (or a derived enumeration) is larger than the permitted cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the input is too tall.
class HeightExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (weight specs, rationals, cache files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace weylalt
