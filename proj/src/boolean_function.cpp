#include "boolfn/boolean_function.hpp"

#include <bit>
#include <string>

#include "boolfn/errors.hpp"
#include "boolfn/random.hpp"

namespace boolfn {

namespace {

std::uint64_t tail_mask(int m) {
  const std::size_t q = table_size(m);
  return q >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

void check_dimension(int m) {
  if (m < kMinDimension || m > kMaxDimension) {
    throw RangeError("dimension m=" + std::to_string(m) + " outside [1, 24]");
  }
}

BooleanFunction::BooleanFunction(int m) : m_(m) {
  check_dimension(m);
  words_.assign(word_count(m), 0);
}

BooleanFunction::BooleanFunction(int m, std::vector<std::uint64_t> words) : m_(m), words_(std::move(words)) {
  check_dimension(m);
  if (words_.size() != word_count(m)) {
    throw DimensionMismatch("packed table has " + std::to_string(words_.size()) + " words, expected " +
                            std::to_string(word_count(m)));
  }
  if ((words_.back() & ~tail_mask(m)) != 0) throw FormatError("padding bits set past index q-1");
}

BooleanFunction BooleanFunction::from_predicate(int m, const std::function<bool(std::uint64_t)>& g) {
  BooleanFunction out(m);
  for (std::uint64_t x = 0; x < out.size(); ++x) {
    if (g(x)) out.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  return out;
}

std::size_t BooleanFunction::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string BooleanFunction::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    const std::size_t bit = d * 4;
    const unsigned nibble = static_cast<unsigned>((words_[bit >> 6] >> (bit & 63)) & 0xF);
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

SignVector::SignVector(int m, std::vector<std::int8_t> values) : m_(m), values_(std::move(values)) {
  check_dimension(m);
  if (values_.size() != table_size(m)) throw DimensionMismatch("sign vector length is not 2^m");
  for (auto v : values_) {
    if (v != 1 && v != -1) throw DomainError("sign vector entry is not +1 or -1");
  }
}

BooleanFunction from_hex(std::string_view hex, int m) {
  check_dimension(m);
  const std::size_t q = table_size(m);
  const std::size_t expected = (q + 3) / 4;
  if (hex.size() != expected) {
    throw FormatError("hex table for m=" + std::to_string(m) + " needs " + std::to_string(expected) +
                      " digits, got " + std::to_string(hex.size()));
  }
  std::vector<std::uint64_t> words(word_count(m), 0);
  for (std::size_t d = 0; d < expected; ++d) {
    const int nibble = hex_value(hex[expected - 1 - d]);
    if (nibble < 0) throw FormatError("invalid hex digit '" + std::string(1, hex[expected - 1 - d]) + "'");
    const std::size_t bit = d * 4;
    words[bit >> 6] |= static_cast<std::uint64_t>(nibble) << (bit & 63);
  }
  // m = 1 uses a single digit for two points: the upper two bits must be clear.
  if ((words.back() & ~tail_mask(m)) != 0) throw FormatError("hex digits set bits past index q-1");
  return BooleanFunction(m, std::move(words));
}

SignVector sign(const BooleanFunction& g) {
  std::vector<std::int8_t> values(g.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = g[i] ? std::int8_t{-1} : std::int8_t{1};
  return SignVector(g.m(), std::move(values));
}

BooleanFunction random_uniform(int m, std::uint64_t master_seed, std::uint64_t stream_index) {
  check_dimension(m);
  auto engine = make_stream(master_seed, stream_index, StreamDomain::kFunction);
  std::vector<std::uint64_t> words(word_count(m));
  for (auto& w : words) w = engine();
  words.back() &= tail_mask(m);
  return BooleanFunction(m, std::move(words));
}

BooleanFunction affine(std::uint64_t v, bool c, int m) {
  check_dimension(m);
  if (v >= table_size(m)) throw RangeError("affine slope v must lie in [0, 2^m)");
  return BooleanFunction::from_predicate(m, [&](std::uint64_t x) { return (dot_parity(v, x) != 0) != c; });
}

BooleanFunction inner_product_bent(int m) {
  check_dimension(m);
  if (m % 2 != 0) throw DomainError("inner-product bent function needs even m, got " + std::to_string(m));
  const int half = m / 2;
  const std::uint64_t low_mask = (std::uint64_t{1} << half) - 1;
  return BooleanFunction::from_predicate(m, [&](std::uint64_t x) { return dot_parity(x & low_mask, x >> half) != 0; });
}

std::size_t hamming_distance(const BooleanFunction& g, const BooleanFunction& h) {
  if (g.m() != h.m()) throw DimensionMismatch("hamming_distance: dimensions differ");
  std::size_t total = 0;
  const auto a = g.words();
  const auto b = h.words();
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

}  // namespace boolfn
