#include "boolfn/boolean_function.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "boolfn/errors.hpp"
#include "boolfn/spectra.hpp"
#include "oracles.hpp"

using namespace boolfn;

TEST(FromHex, SingleBitDecodesToProduct) {
  const auto g = from_hex("8", 2);
  EXPECT_EQ(oracle::bits(g), (std::vector<int>{0, 0, 0, 1}));
}

TEST(FromHex, ZeroFunction) {
  const auto g = from_hex("0", 2);
  EXPECT_EQ(g.weight(), 0U);
  EXPECT_EQ(g, BooleanFunction(2));
}

TEST(FromHex, RoundTripsFixedString) {
  EXPECT_EQ(from_hex("ac90f3e1", 5).to_hex(), "ac90f3e1");
  // Lowest-order digit carries indices 0..3.
  const auto g = from_hex("0001", 4);
  EXPECT_TRUE(g[0]);
  EXPECT_FALSE(g[4]);
}

TEST(FromHex, AcceptsUppercaseButEmitsLowercase) { EXPECT_EQ(from_hex("AB", 3).to_hex(), "ab"); }

TEST(FromHex, Errors) {
  EXPECT_THROW(from_hex("00", 2), FormatError);
  EXPECT_THROW(from_hex("", 3), FormatError);
  EXPECT_THROW(from_hex("g", 2), FormatError);
  EXPECT_THROW(from_hex("4", 1), FormatError);  // bit 2 does not exist for q = 2
  EXPECT_THROW(from_hex("0", 0), RangeError);
  EXPECT_THROW(from_hex("0", 25), RangeError);
}

TEST(FromHex, RoundTripProperty) {
  for (int m = 1; m <= 12; ++m) {
    for (std::uint64_t k = 0; k < 20; ++k) {
      const auto g = random_uniform(m, 99, k);
      const auto hex = g.to_hex();
      ASSERT_EQ(hex.size(), (g.size() + 3) / 4);
      ASSERT_EQ(from_hex(hex, m), g) << "m=" << m << " k=" << k;
    }
  }
}

TEST(Sign, Examples) {
  const auto zero = sign(BooleanFunction(2));
  EXPECT_EQ(zero.values().size(), 4U);
  for (auto v : zero.values()) EXPECT_EQ(v, 1);
  const auto f = sign(from_hex("8", 2));
  EXPECT_EQ(std::vector<int>(f.values().begin(), f.values().end()), (std::vector<int>{1, 1, 1, -1}));
}

TEST(Sign, EntriesAreUnitAndCountWeight) {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto g = random_uniform(7, 3, k);
    const auto f = sign(g);
    std::size_t minus = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      ASSERT_EQ(f[i] * f[i], 1);
      ASSERT_EQ(f[i] == 1, !g[i]);
      minus += static_cast<std::size_t>((1 - f[i]) / 2);
    }
    EXPECT_EQ(minus, g.weight());
  }
}

TEST(SignVector, RejectsNonUnitEntries) {
  EXPECT_THROW(SignVector(1, {1, 0}), DomainError);
  EXPECT_THROW(SignVector(2, {1, 1}), DimensionMismatch);
}

TEST(RandomUniform, Deterministic) {
  EXPECT_EQ(random_uniform(2, 42, 7), random_uniform(2, 42, 7));
  EXPECT_EQ(random_uniform(16, 42, 7), random_uniform(16, 42, 7));
  EXPECT_NE(random_uniform(16, 42, 7), random_uniform(16, 42, 8));
  EXPECT_NE(random_uniform(16, 42, 7), random_uniform(16, 43, 7));
}

TEST(RandomUniform, PaddingStaysClear) {
  for (int m = 1; m <= 5; ++m) {
    const auto g = random_uniform(m, 5, 1);
    EXPECT_EQ(g.words()[0] >> g.size(), 0U);
  }
}

TEST(RandomUniform, FirstBitIsFair) {
  constexpr std::uint64_t kN = 100000;
  std::uint64_t ones = 0;
  for (std::uint64_t k = 0; k < kN; ++k) ones += random_uniform(8, 2024, k)[0];
  const double mean = static_cast<double>(ones) / kN;
  const double tolerance = 3 * 0.5 / std::sqrt(static_cast<double>(kN));
  EXPECT_NEAR(mean, 0.5, tolerance);
}

TEST(RandomUniform, SquaredAutocorrelationMeanNearTwoQ) {
  constexpr std::uint64_t kN = 100000;
  long double total = 0;
  for (std::uint64_t k = 0; k < kN; ++k) {
    const auto d = autocorrelation_at(random_uniform(8, 11, k), 37);
    total += static_cast<long double>(d * d);
  }
  EXPECT_NEAR(static_cast<double>(total / kN), 512.0, 0.05 * 512.0);
}

TEST(Affine, Examples) {
  EXPECT_EQ(affine(0, false, 3), BooleanFunction(3));
  EXPECT_EQ(oracle::bits(affine(1, false, 2)), (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(oracle::bits(affine(1, true, 2)), (std::vector<int>{1, 0, 1, 0}));
  EXPECT_THROW(affine(8, false, 3), RangeError);
}

TEST(Affine, NonlinearityIsZero) {
  for (int m = 1; m <= 4; ++m) {
    for (std::uint64_t v = 0; v < table_size(m); ++v) {
      for (bool c : {false, true}) EXPECT_EQ(nonlinearity(affine(v, c, m)), 0) << m << " " << v << " " << c;
    }
  }
}

TEST(InnerProductBent, SmallCases) {
  EXPECT_EQ(inner_product_bent(2), from_hex("8", 2));
  EXPECT_THROW(inner_product_bent(3), DomainError);
  EXPECT_THROW(inner_product_bent(26), RangeError);
}

TEST(InnerProductBent, FlatSpectrumUpTo16) {
  for (int m = 2; m <= 16; m += 2) {
    const auto sp = wht_fast(sign(inner_product_bent(m)));
    const std::int64_t expected = std::int64_t{1} << (m / 2);
    for (auto c : sp.coeffs) ASSERT_EQ(std::abs(c), expected) << "m=" << m;
  }
}

TEST(HammingDistance, Examples) {
  const auto g = random_uniform(6, 1, 1);
  EXPECT_EQ(hamming_distance(g, g), 0U);
  EXPECT_EQ(hamming_distance(BooleanFunction(3), affine(0, true, 3)), 8U);
  EXPECT_EQ(hamming_distance(from_hex("8", 2), BooleanFunction(2)), 1U);
  EXPECT_THROW(hamming_distance(BooleanFunction(2), BooleanFunction(3)), DimensionMismatch);
}

TEST(HammingDistance, MatchesSignCorrelation) {
  for (int m : {1, 3, 6, 7, 10}) {
    for (std::uint64_t k = 0; k < 20; ++k) {
      const auto g = random_uniform(m, 8, k);
      const auto h = random_uniform(m, 9, k);
      const auto fg = sign(g);
      const auto fh = sign(h);
      long long dot = 0;
      for (std::size_t i = 0; i < fg.size(); ++i) dot += fg[i] * fh[i];
      const long long q = static_cast<long long>(g.size());
      EXPECT_EQ(static_cast<long long>(hamming_distance(g, h)), (q - dot) / 2);
      EXPECT_EQ(hamming_distance(g, h), hamming_distance(h, g));
    }
  }
}

TEST(BooleanFunction, PackedConstructorValidates) {
  EXPECT_THROW(BooleanFunction(2, {0x10}), FormatError);
  EXPECT_THROW(BooleanFunction(7, {0}), DimensionMismatch);
  EXPECT_NO_THROW(BooleanFunction(7, {~0ULL, ~0ULL}));
}
