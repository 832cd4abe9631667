#pragma once

#include <stdexcept>
#include <string>

namespace fuzzytrack {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration or model parameter is out of its admissible range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A crisp value lies outside the universe of discourse of its variable.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Filter steps were presented out of order or before bootstrap.
class SequencingError : public Error {
 public:
  using Error::Error;
};

/// The aggregated fuzzy set has (numerically) zero area.
class DegenerateAggregate : public Error {
 public:
  using Error::Error;
};

/// Malformed data, e.g. series of mismatched length.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzytrack
