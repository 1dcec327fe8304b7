#pragma once

#include <cstdint>
#include <string>

#include "boolfn/errors.hpp"

namespace boolfn {

// GCC/Clang extension; every exact accumulator in the library uses it.
__extension__ using wide_int = __int128;

inline std::string to_string(wide_int value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the unsigned magnitude so INT128_MIN does not overflow.
  __extension__ unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1 : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

inline wide_int checked_add(wide_int a, wide_int b) {
  wide_int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("128-bit accumulator overflow (add)");
  return out;
}

inline wide_int checked_mul(wide_int a, wide_int b) {
  wide_int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("128-bit accumulator overflow (mul)");
  return out;
}

inline bool fits_int64(wide_int value) {
  return value >= INT64_MIN && value <= INT64_MAX;
}

inline long double to_long_double(wide_int value) { return static_cast<long double>(value); }

}  // namespace boolfn
