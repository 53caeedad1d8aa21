#pragma once

#include <stdexcept>
#include <string>

namespace compat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input: coordinates beyond the exact-arithmetic
// bound, label sets that are not 1..n, coincident points, non-simple polygons.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotConvexError : public InputError {
 public:
  using InputError::InputError;
};

// Collinear triples or parallel connecting lines where an algorithm needs
// strict general position.
class DegenerateInputError : public InputError {
 public:
  using InputError::InputError;
};

// A label sequence that is not a permutation of the expected label set.
class InvalidWitnessError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised by the exhaustive deciders when n exceeds their enumeration cap.
class OracleCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace compat
