#include "boolfn/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace boolfn {

void SampleMoments::add(wide_int x) {
  ++count_;
  sum_ = checked_add(sum_, x);
  const long double value = static_cast<long double>(x);
  const long double delta = value - running_mean_;
  running_mean_ += delta / static_cast<long double>(count_);
  m2_ += delta * (value - running_mean_);
}

Rational SampleMoments::mean() const {
  if (count_ == 0) throw std::domain_error("SampleMoments: mean of empty sample");
  return {sum_, static_cast<wide_int>(count_)};
}

double SampleMoments::variance() const {
  if (count_ < 2) return 0.0;
  return static_cast<double>(m2_ / static_cast<long double>(count_ - 1));
}

double SampleMoments::half_width(double z) const {
  if (count_ == 0) return 0.0;
  return z * std::sqrt(variance() / static_cast<double>(count_));
}

double normal_cdf(double x, double variance) { return 0.5 * std::erfc(-x / std::sqrt(2.0 * variance)); }

double squared_gaussian2_cdf(double x) { return x <= 0.0 ? 0.0 : std::erf(std::sqrt(x) / 2.0); }

double quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::domain_error("quantile of empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * std::clamp(p, 0.0, 1.0);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double binomial_slack(double p, std::uint64_t n, double sigmas) {
  const double clamped = std::clamp(p, 0.0, 1.0);
  return sigmas * std::sqrt(clamped * (1.0 - clamped) / static_cast<double>(n));
}

}  // namespace boolfn
