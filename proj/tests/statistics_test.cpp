#include "boolfn/statistics.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <vector>

#include "boolfn/claims.hpp"
#include "boolfn/errors.hpp"
#include "boolfn/parallel.hpp"
#include "boolfn/rational.hpp"

using namespace boolfn;

TEST(Rational, ReducesAndNormalizesSign) {
  EXPECT_EQ(Rational(6, 4).to_string(), "3/2");
  EXPECT_EQ(Rational(-6, -4).to_string(), "3/2");
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(40).to_string(), "40/1");
  EXPECT_EQ(Rational(0, 7).to_string(), "0/1");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}

TEST(WideInt, CheckedArithmetic) {
  const wide_int big = wide_int{1} << 100;
  EXPECT_EQ(to_string(big), "1267650600228229401496703205376");
  EXPECT_EQ(to_string(-big), "-1267650600228229401496703205376");
  EXPECT_THROW(checked_mul(big, big), OverflowError);
  EXPECT_THROW(checked_add(big << 26, big << 26), OverflowError);
  EXPECT_FALSE(fits_int64(big));
  EXPECT_TRUE(fits_int64(wide_int{-5}));
}

TEST(SampleMoments, ExactMeanAndVariance) {
  SampleMoments s;
  for (int x : {2, 4, 4, 4, 5, 5, 7, 9}) s.add(x);
  EXPECT_EQ(s.count(), 8U);
  EXPECT_EQ(s.mean(), Rational(5));
  EXPECT_NEAR(s.variance(), 32.0 / 7.0, 1e-12);
  EXPECT_NEAR(s.half_width(2.0), 2.0 * std::sqrt(32.0 / 7.0 / 8.0), 1e-12);
}

TEST(SampleMoments, EmptyMeanThrows) { EXPECT_THROW(SampleMoments().mean(), std::domain_error); }

TEST(Distributions, KnownValues) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0, 2.0), 0.5);
  EXPECT_NEAR(normal_cdf(std::sqrt(2.0) * 1.959963984540054, 2.0), 0.975, 1e-12);
  EXPECT_EQ(squared_gaussian2_cdf(0.0), 0.0);
  EXPECT_EQ(squared_gaussian2_cdf(-1.0), 0.0);
  // P(Z^2 <= x) with Z ~ N(0,2) equals P(|Z| <= sqrt x).
  for (double x : {0.1, 1.0, 4.0, 20.0}) {
    EXPECT_NEAR(squared_gaussian2_cdf(x), 2.0 * normal_cdf(std::sqrt(x), 2.0) - 1.0, 1e-12);
  }
}

TEST(KsStatistic, SmallSample) {
  const std::vector<double> sorted = {0.1, 0.4, 0.7};
  const double d = ks_statistic(std::span<const double>(sorted), [](double x) { return x; });
  EXPECT_NEAR(d, 0.3, 1e-12);  // 1 - F(0.7)
}

TEST(Quantile, Interpolates) {
  const std::vector<double> sorted = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(quantile(sorted, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile(sorted, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile(sorted, 1.0), 4.0);
}

TEST(BinomialSlack, ClampsProbability) {
  EXPECT_EQ(binomial_slack(1.5, 100), 0.0);
  EXPECT_NEAR(binomial_slack(0.5, 100), 0.15, 1e-12);
}

TEST(Claims, Verdicts) {
  EXPECT_EQ(equality_claim("x", "", 1.0, 1.05, 0.1).verdict, Verdict::kPass);
  EXPECT_EQ(equality_claim("x", "", 1.0, 1.2, 0.1).verdict, Verdict::kFail);
  EXPECT_EQ(bound_claim("x", "", 1.0, 1.05, 0.1).verdict, Verdict::kPass);
  EXPECT_EQ(bound_claim("x", "", 1.0, 1.2, 0.1).verdict, Verdict::kFail);
  EXPECT_EQ(exact_equality_claim("x", "", Rational(8), Rational(8)).verdict, Verdict::kPass);
  EXPECT_EQ(exact_bound_claim("x", "", Rational(8), Rational(9)).verdict, Verdict::kFail);
  const std::vector<Claim> claims = {informational_claim("i", "", 1.0, 2.0, Verdict::kFail),
                                     exact_bound_claim("b", "", Rational(2), Rational(1))};
  EXPECT_FALSE(any_failed(claims));
}

TEST(Parallel, CoversEveryIndexOnceAndPropagatesErrors) {
  for (int threads : {1, 3, 8}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) ++hits[i];
    }, 7);
    for (const auto& h : hits) ASSERT_EQ(h.load(), 1);
  }
  EXPECT_THROW(parallel_for(100, 2, [](std::size_t, std::size_t) { throw std::runtime_error("boom"); }),
               std::runtime_error);
}
