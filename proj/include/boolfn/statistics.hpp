#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "boolfn/rational.hpp"
#include "boolfn/wide_int.hpp"

namespace boolfn {

/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

/// Exact running sum of integer observations plus a Welford variance.
/// Observations must be added in a fixed order for bit-identical output.
class SampleMoments {
 public:
  void add(wide_int x);

  std::uint64_t count() const { return count_; }
  wide_int sum() const { return sum_; }
  Rational mean() const;
  /// Unbiased sample variance; 0 for fewer than two observations.
  double variance() const;
  /// z * sqrt(variance / n).
  double half_width(double z = kZ99) const;

 private:
  std::uint64_t count_ = 0;
  wide_int sum_ = 0;
  long double running_mean_ = 0;
  long double m2_ = 0;
};

/// CDF of Normal(0, variance).
double normal_cdf(double x, double variance);

/// CDF of Z^2 for Z ~ Normal(0, 2): erf(sqrt(x) / 2) for x > 0.
double squared_gaussian2_cdf(double x);

/// Two-sided Kolmogorov-Smirnov statistic sup |F_n - F| of a sorted sample.
template <class Cdf>
double ks_statistic(std::span<const double> sorted, Cdf&& cdf) {
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

/// Linear-interpolation quantile of a sorted sample (type 7).
double quantile(std::span<const double> sorted, double p);

/// 3-sigma binomial slack around a probability bound p (clamped to [0, 1]).
double binomial_slack(double p, std::uint64_t n, double sigmas = 3.0);

}  // namespace boolfn
