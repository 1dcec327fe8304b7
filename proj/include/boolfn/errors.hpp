#pragma once

#include <stdexcept>
#include <string>

namespace boolfn {

/// Malformed textual input (hex tables, numeric lists).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric parameter outside its admissible interval, e.g. m not in [1, 24].
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operation undefined for the given input (odd m for the bent witness, shift a = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force path refused because the input exceeds its cost guard.
class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two functions or spectra of different dimension combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact accumulator overflowed its 128-bit range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace boolfn
