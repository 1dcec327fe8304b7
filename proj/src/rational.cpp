#include "boolfn/rational.hpp"

#include <stdexcept>

namespace boolfn {

namespace {

wide_int abs_wide(wide_int x) { return x < 0 ? -x : x; }

wide_int gcd_wide(wide_int a, wide_int b) {
  a = abs_wide(a);
  b = abs_wide(b);
  while (b != 0) {
    const wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(wide_int numerator, wide_int denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const wide_int g = gcd_wide(numerator, denominator);
  num_ = g == 0 ? 0 : numerator / g;
  den_ = g == 0 ? 1 : denominator / g;
}

std::string Rational::to_string() const { return boolfn::to_string(num_) + "/" + boolfn::to_string(den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
}

}  // namespace boolfn
