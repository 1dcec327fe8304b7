#pragma once

#include <compare>
#include <string>

#include "boolfn/wide_int.hpp"

namespace boolfn {

/// Exact fraction with a positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(wide_int numerator, wide_int denominator = 1);  // NOLINT(google-explicit-constructor)

  wide_int numerator() const { return num_; }
  wide_int denominator() const { return den_; }

  /// "n/d", denominator always present ("40/1").
  std::string to_string() const;
  long double to_long_double() const { return static_cast<long double>(num_) / static_cast<long double>(den_); }
  double to_double() const { return static_cast<double>(to_long_double()); }

  friend bool operator==(const Rational&, const Rational&) = default;
  /// Cross-multiplies with overflow checking.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  wide_int num_ = 0;
  wide_int den_ = 1;
};

}  // namespace boolfn
