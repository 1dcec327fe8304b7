#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolfn {

inline constexpr int kMinDimension = 1;
inline constexpr int kMaxDimension = 24;

/// Throws RangeError unless 1 <= m <= 24.
void check_dimension(int m);

/// Number of points of F_2^m, i.e. the truth table length.
constexpr std::size_t table_size(int m) { return std::size_t{1} << m; }

/// Parity of the F_2 inner product v.x for points encoded as integers.
constexpr int dot_parity(std::uint64_t v, std::uint64_t x) {
  return __builtin_popcountll(v & x) & 1;
}

/// Truth table of g : F_2^m -> F_2.
///
/// Point x = (x_1, ..., x_m) is stored at index i with x_j = bit (j-1) of i.
/// Bits are packed little-endian into 64-bit words; bits past q in the last
/// word are always zero, so word-wise XOR/popcount is exact.
class BooleanFunction {
 public:
  /// The zero function on F_2^m.
  explicit BooleanFunction(int m);

  /// Takes ownership of a packed table; throws if the word count is wrong
  /// or padding bits are set.
  BooleanFunction(int m, std::vector<std::uint64_t> words);

  static BooleanFunction from_predicate(int m, const std::function<bool(std::uint64_t)>& g);

  int m() const { return m_; }
  std::size_t size() const { return table_size(m_); }
  bool operator[](std::size_t index) const { return (words_[index >> 6] >> (index & 63)) & 1U; }
  std::span<const std::uint64_t> words() const { return words_; }

  /// Hamming weight of the table.
  std::size_t weight() const;

  /// Lowercase hex, ceil(q/4) digits, lowest-order digit holds indices 0..3.
  std::string to_hex() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int m_;
  std::vector<std::uint64_t> words_;
};

/// Number of 64-bit words backing a table of dimension m.
constexpr std::size_t word_count(int m) { return (table_size(m) + 63) / 64; }

/// The +-1 exponential f = (-1)^g.
class SignVector {
 public:
  /// Validates that every entry is +1 or -1 and that the length is 2^m.
  SignVector(int m, std::vector<std::int8_t> values);

  int m() const { return m_; }
  std::size_t size() const { return values_.size(); }
  std::int8_t operator[](std::size_t index) const { return values_[index]; }
  std::span<const std::int8_t> values() const { return values_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  int m_;
  std::vector<std::int8_t> values_;
};

/// Parses the hex interchange format. Requires exactly ceil(2^m / 4) digits.
BooleanFunction from_hex(std::string_view hex, int m);

SignVector sign(const BooleanFunction& g);

/// Uniform random function; each truth-table bit is an independent fair coin.
/// The result depends only on (master_seed, stream_index).
BooleanFunction random_uniform(int m, std::uint64_t master_seed, std::uint64_t stream_index);

/// g(x) = v.x + c over F_2.
BooleanFunction affine(std::uint64_t v, bool c, int m);

/// x_1 x_{m/2+1} + ... + x_{m/2} x_m; bent, so every Walsh coefficient is +-2^{m/2}.
BooleanFunction inner_product_bent(int m);

std::size_t hamming_distance(const BooleanFunction& g, const BooleanFunction& h);

}  // namespace boolfn
