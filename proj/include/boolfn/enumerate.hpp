#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "boolfn/claims.hpp"
#include "boolfn/parallel.hpp"
#include "boolfn/rational.hpp"
#include "boolfn/wide_int.hpp"

namespace boolfn {

inline constexpr int kEnumerateDefaultMaxDimension = 4;
inline constexpr int kEnumerateOverrideMaxDimension = 5;

using Histogram = std::map<std::int64_t, std::uint64_t>;

/// Partial sums over the truth tables [begin, end) in integer order. Blocks
/// merge associatively, and a state covering [0, k) doubles as a checkpoint.
struct EnumerationState {
  int m = 1;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  Histogram histogram_s;
  Histogram histogram_nl;
  Histogram histogram_l4;
  wide_int sum_l4 = 0;
  wide_int sum_l4_squared = 0;
  std::vector<wide_int> sum_xa;          // indexed by a; slot 0 unused
  std::vector<wide_int> sum_xa_squared;  // indexed by a; slot 0 unused
  std::vector<wide_int> sum_xa_xb;       // one slot per pair in enumeration_pairs(m)

  std::uint64_t count() const { return end - begin; }
};

/// All unordered pairs {a, b} of distinct nonzero shifts, a < b, lexicographic.
std::vector<std::pair<std::uint64_t, std::uint64_t>> enumeration_pairs(int m);

/// Number of Boolean functions in m variables, 2^{2^m}; requires m <= 5.
std::uint64_t function_count(int m);

EnumerationState empty_state(int m, std::uint64_t at);
EnumerationState enumerate_block(int m, std::uint64_t begin, std::uint64_t end);
/// Appends `next`, which must start where `into` ends.
void merge(EnumerationState& into, const EnumerationState& next);

std::string checkpoint_to_json(const EnumerationState& state);
EnumerationState checkpoint_from_json(const std::string& text);

struct ExhaustiveReport {
  int m;
  std::uint64_t function_count;
  Histogram histogram_s;
  Histogram histogram_nl;
  Histogram histogram_l4;
  std::int64_t mu_m;
  std::int64_t covering_radius;
  Rational exact_e_l4;
  Rational exact_e_l4_squared;
  std::vector<std::pair<std::uint64_t, Rational>> exact_e_xa;
  std::vector<std::pair<std::uint64_t, Rational>> exact_e_xa_squared;
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, Rational>> exact_e_xa_xb;
  std::vector<Claim> claims;
};

struct EnumerateOptions {
  bool override_cost = false;
  int threads = default_thread_count();
};

/// Guards m: m <= 4 always, m = 5 only with override_cost (CostGuardError
/// otherwise), m >= 6 never (RangeError).
void check_enumeration_dimension(int m, bool override_cost);

/// Requires `state` to cover every truth table.
ExhaustiveReport finalize(const EnumerationState& state);

ExhaustiveReport exhaustive_report(int m, const EnumerateOptions& options = {});

/// r_m = 2^{m-1} - mu_m / 2.
std::int64_t covering_radius(int m, const EnumerateOptions& options = {});

/// Verdict table: exact equalities for E||f^||_4^4 and E(X_a), exact bounds
/// for E(X_a^2), E(X_a X_b) and E||f^||_4^8, plus mu/r consistency rows.
std::vector<Claim> exact_moment_crosscheck(const ExhaustiveReport& report);
std::vector<Claim> exact_moment_crosscheck(int m, const EnumerateOptions& options = {});

}  // namespace boolfn
