#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolfn/claims.hpp"
#include "boolfn/parallel.hpp"
#include "boolfn/rational.hpp"
#include "boolfn/statistics.hpp"
#include "boolfn/wide_int.hpp"

namespace boolfn {

/// Common Monte Carlo settings. Sample i always uses stream index i, so the
/// outcome is a function of (m, n_samples, seed) only.
struct SamplingConfig {
  int m = 8;
  std::uint64_t n_samples = 1000;
  std::uint64_t seed = 0;
  int threads = default_thread_count();
};

// ---------------------------------------------------------------- moments

struct ShiftMoment {
  std::uint64_t a;
  SampleMoments moments;
};

struct PairMoment {
  std::uint64_t a;
  std::uint64_t b;
  SampleMoments moments;
};

struct MomentReport {
  int m;
  std::uint64_t n_samples;
  std::uint64_t seed;
  SampleMoments l4;          // ||f^||_4^4
  wide_int theory_l4;        // 3q^2 - 2q
  SampleMoments l4_eighth;   // ||f^||_4^8
  wide_int bound_l4_eighth;  // 64q - 100q^2 + 28q^3 + 9q^4
  std::vector<ShiftMoment> xa;
  wide_int theory_xa;  // 2q
  std::vector<ShiftMoment> xa_squared;
  wide_int bound_xa_squared;  // 12q^2
  std::vector<PairMoment> xa_xb;
  wide_int bound_xa_xb;  // 4q^2 + 32q
  std::vector<Claim> claims;
};

struct MomentConfig : SamplingConfig {
  std::size_t shift_count = 5;
  std::size_t pair_count = 10;
};

/// Requires n_samples >= 1000 and m <= 20. Equality rows bracket theory within
/// a 99% normal half-width; bound rows accept empirical <= bound + half-width.
MomentReport moment_suite(const MomentConfig& config);

/// Deterministic distinct nonzero shifts drawn from the master seed.
std::vector<std::uint64_t> pick_shifts(int m, std::uint64_t seed, std::size_t count);
/// Deterministic distinct unordered pairs {a, b}, a != b, both nonzero.
std::vector<std::pair<std::uint64_t, std::uint64_t>> pick_pairs(int m, std::uint64_t seed, std::size_t count);

// ---------------------------------------------------------------- tails

enum class TailSide { kUpper, kLower };

struct TailRow {
  double parameter;  // kappa, t, or m depending on the suite
  double threshold;
  std::uint64_t hits;
  double empirical_probability;
  std::optional<double> bound;
  double slack = 0.0;
  bool vacuous = false;
  // Lower-tail extras: q^{-eta} and the implied constant (1 - P) q^eta.
  std::optional<double> q_pow_neg_eta;
  std::optional<double> implied_constant;
};

struct TailReport {
  std::string suite;
  int m;
  std::uint64_t n_samples;
  std::uint64_t seed;
  TailSide side;
  std::vector<TailRow> rows;
  std::vector<Claim> claims;
};

/// P(S >= sqrt(2q(kappa + log q))) against 2 exp(-kappa), with slack
/// 3 sigma + 10/N. kappa_list must be positive and ascending.
TailReport upper_tail_suite(const SamplingConfig& config, const std::vector<double>& kappa_list);

/// P(S > (alpha/2 - eta/alpha - alpha^3 log q / q) sqrt(q log q)) for each m
/// in m_values. Report-only: the constant B is existential.
TailReport lower_tail_suite(const SamplingConfig& config, double alpha, double eta, const std::vector<int>& m_values);

/// P(| l4/q^2 - 3 + 2/q | >= t) against 40/(t^2 q), slack 3 sigma.
TailReport deviation_suite(const SamplingConfig& config, const std::vector<double>& t_list);

// ---------------------------------------------------------------- limit laws

struct HistogramBin {
  double lower;
  double upper;
  std::uint64_t count;
};

struct DistributionReport {
  int m;
  std::uint64_t n_samples;
  std::uint64_t seed;
  std::uint64_t a;
  double ks_statistic_gaussian;  // Delta(a)/sqrt(q) vs Normal(0, 2)
  double ks_statistic_ya;        // Y_a vs erf(sqrt(x)/2)
  double mean_normalized_delta;
  double mean_ya;
  double ya_half_width;
  std::vector<std::pair<double, double>> quantiles_normalized_delta;
  std::vector<std::pair<double, double>> quantiles_ya;
  std::vector<HistogramBin> histogram_delta;  // exact, one bin per attained Delta(a)
  std::vector<Claim> claims;
};

inline constexpr double kKsTolerance = 0.05;
inline constexpr int kKsMinDimension = 12;

/// Requires a != 0 and a < 2^m.
DistributionReport distribution_suite(const SamplingConfig& config, std::uint64_t a);

// ---------------------------------------------------------------- scgf

struct ScgfRow {
  double u;
  std::optional<double> phi;  // empty on overflow
  double top_weight = 0.0;    // share of the estimator carried by the largest sample
  std::string warning;
};

struct ScgfReport {
  int m;
  std::uint64_t n_samples;
  std::uint64_t seed;
  std::vector<ScgfRow> rows;
  std::vector<Claim> claims;
};

/// (1/q) log( (1/N) sum_i exp(u sum_{a != 0} Y_a) ) via log-sum-exp.
ScgfReport empirical_scgf(const SamplingConfig& config, const std::vector<double>& u_list);

// ---------------------------------------------------------------- ratios

struct RatioRow {
  int m;
  std::uint64_t n_samples;
  double amplitude_ratio_mean;  // S / (2^{m/2} sqrt(m))
  double amplitude_ratio_min;
  double amplitude_ratio_max;
  double l4_ratio_mean;  // ||f^||_4 / 2^{m/2}
  double l4_ratio_min;
  double l4_ratio_max;
  bool all_above_sqrt_q;
};

struct RatioTable {
  std::uint64_t n_samples;
  std::uint64_t seed;
  std::vector<RatioRow> rows;
  std::vector<Claim> claims;
};

inline constexpr double kL4LimitTolerance = 0.02;

/// m_values within [6, 20].
RatioTable asymptotic_ratio_table(const std::vector<int>& m_values, std::uint64_t n_samples_per_m,
                                  std::uint64_t seed, int threads = default_thread_count());

}  // namespace boolfn
