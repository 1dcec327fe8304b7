#include "boolfn/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "boolfn/boolean_function.hpp"
#include "boolfn/errors.hpp"
#include "boolfn/random.hpp"
#include "boolfn/spectra.hpp"

namespace boolfn {

namespace {

constexpr double kMonotoneTolerance = 1e-9;
const std::vector<double> kReportedQuantiles = {0.01, 0.05, 0.25, 0.5, 0.75, 0.95, 0.99};

void check_sampling(const SamplingConfig& config) {
  check_dimension(config.m);
  if (config.n_samples == 0) throw RangeError("n_samples must be positive");
}

std::string fmt(double value) {
  std::ostringstream os;
  os.precision(6);
  os << value;
  return os.str();
}

std::string param(const char* name, double value) { return std::string(name) + "=" + fmt(value); }

void check_ascending(const std::vector<double>& values, const char* name, bool allow_zero) {
  if (values.empty()) throw RangeError(std::string(name) + " list is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0 || (!allow_zero && values[i] == 0.0)) {
      throw RangeError(std::string(name) + " values must be positive");
    }
    if (i > 0 && values[i] <= values[i - 1]) throw RangeError(std::string(name) + " values must be strictly ascending");
  }
}

/// Per-sample integer observations, one slot per (sample, statistic).
template <class T, class Fill>
std::vector<T> sample_table(const SamplingConfig& config, std::size_t width, Fill&& fill) {
  std::vector<T> table(config.n_samples * width);
  parallel_for(config.n_samples, config.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      fill(random_uniform(config.m, config.seed, i), std::span<T>(table.data() + i * width, width));
    }
  });
  return table;
}

/// S for every sample, in stream order.
std::vector<std::int64_t> sample_amplitudes(const SamplingConfig& config) {
  return sample_table<std::int64_t>(config, 1, [](const BooleanFunction& g, std::span<std::int64_t> out) {
    out[0] = spectral_amplitude(wht_fast(sign(g)));
  });
}

/// ||f^||_4^4 for every sample, in stream order.
std::vector<wide_int> sample_l4(const SamplingConfig& config) {
  return sample_table<wide_int>(config, 1, [](const BooleanFunction& g, std::span<wide_int> out) {
    out[0] = l4_fourth(wht_fast(sign(g)));
  });
}

}  // namespace

// ---------------------------------------------------------------- moments

std::vector<std::uint64_t> pick_shifts(int m, std::uint64_t seed, std::size_t count) {
  check_dimension(m);
  const std::uint64_t nonzero = table_size(m) - 1;
  std::vector<std::uint64_t> out;
  if (count >= nonzero) {
    for (std::uint64_t a = 1; a <= nonzero; ++a) out.push_back(a);
    return out;
  }
  auto engine = make_stream(seed, 0, StreamDomain::kShiftPick);
  std::set<std::uint64_t> chosen;
  while (chosen.size() < count) chosen.insert(1 + engine() % nonzero);
  return {chosen.begin(), chosen.end()};
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pick_pairs(int m, std::uint64_t seed, std::size_t count) {
  check_dimension(m);
  const std::uint64_t nonzero = table_size(m) - 1;
  const std::uint64_t available = nonzero * (nonzero - 1) / 2;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (count >= available) {
    for (std::uint64_t a = 1; a <= nonzero; ++a) {
      for (std::uint64_t b = a + 1; b <= nonzero; ++b) out.emplace_back(a, b);
    }
    return out;
  }
  auto engine = make_stream(seed, 1, StreamDomain::kShiftPick);
  std::set<std::pair<std::uint64_t, std::uint64_t>> chosen;
  while (chosen.size() < count) {
    const std::uint64_t a = 1 + engine() % nonzero;
    const std::uint64_t b = 1 + engine() % nonzero;
    if (a != b) chosen.emplace(std::min(a, b), std::max(a, b));
  }
  return {chosen.begin(), chosen.end()};
}

MomentReport moment_suite(const MomentConfig& config) {
  check_sampling(config);
  if (config.n_samples < 1000) throw RangeError("moment_suite needs n_samples >= 1000");
  if (config.m > 20) throw RangeError("moment_suite needs m <= 20");

  const auto shifts = pick_shifts(config.m, config.seed, config.shift_count);
  const auto pairs = pick_pairs(config.m, config.seed, config.pair_count);
  // Layout per sample: l4, l4^2, X_a (each shift), X_a^2 (each shift), X_a X_b (each pair).
  const std::size_t width = 2 + 2 * shifts.size() + pairs.size();

  const auto table =
      sample_table<wide_int>(config, width, [&](const BooleanFunction& g, std::span<wide_int> out) {
        const auto sp = wht_fast(sign(g));
        const auto ac = autocorrelation(sp);
        const wide_int l4 = l4_fourth(sp);
        out[0] = l4;
        out[1] = checked_mul(l4, l4);
        for (std::size_t k = 0; k < shifts.size(); ++k) {
          const wide_int x = ac.squared(shifts[k]);
          out[2 + k] = x;
          out[2 + shifts.size() + k] = checked_mul(x, x);
        }
        for (std::size_t k = 0; k < pairs.size(); ++k) {
          out[2 + 2 * shifts.size() + k] = checked_mul(ac.squared(pairs[k].first), ac.squared(pairs[k].second));
        }
      });

  const wide_int q = static_cast<wide_int>(table_size(config.m));
  MomentReport report{};
  report.m = config.m;
  report.n_samples = config.n_samples;
  report.seed = config.seed;
  report.theory_l4 = 3 * q * q - 2 * q;
  report.bound_l4_eighth = 64 * q - 100 * q * q + 28 * q * q * q + 9 * q * q * q * q;
  report.theory_xa = 2 * q;
  report.bound_xa_squared = 12 * q * q;
  report.bound_xa_xb = 4 * q * q + 32 * q;
  for (auto a : shifts) {
    report.xa.push_back({a, {}});
    report.xa_squared.push_back({a, {}});
  }
  for (auto [a, b] : pairs) report.xa_xb.push_back({a, b, {}});

  for (std::size_t i = 0; i < config.n_samples; ++i) {
    const wide_int* row = table.data() + i * width;
    report.l4.add(row[0]);
    report.l4_eighth.add(row[1]);
    for (std::size_t k = 0; k < shifts.size(); ++k) {
      report.xa[k].moments.add(row[2 + k]);
      report.xa_squared[k].moments.add(row[2 + shifts.size() + k]);
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) report.xa_xb[k].moments.add(row[2 + 2 * shifts.size() + k]);
  }

  auto& claims = report.claims;
  claims.push_back(equality_claim("prop-esp-l4", "E||f^||_4^4", report.theory_l4, report.l4.mean(),
                                  report.l4.half_width()));
  for (const auto& s : report.xa) {
    claims.push_back(equality_claim("prop-esp1", "a=" + std::to_string(s.a), report.theory_xa, s.moments.mean(),
                                    s.moments.half_width()));
  }
  for (const auto& s : report.xa_squared) {
    claims.push_back(bound_claim("prop-esp-xa2", "a=" + std::to_string(s.a), report.bound_xa_squared,
                                 s.moments.mean(), s.moments.half_width()));
  }
  for (const auto& p : report.xa_xb) {
    claims.push_back(bound_claim("prop-esp-xaxb", "a=" + std::to_string(p.a) + ",b=" + std::to_string(p.b),
                                 report.bound_xa_xb, p.moments.mean(), p.moments.half_width()));
  }
  claims.push_back(bound_claim("prop-esp-l8", "E||f^||_4^8", report.bound_l4_eighth, report.l4_eighth.mean(),
                               report.l4_eighth.half_width()));
  return report;
}

// ---------------------------------------------------------------- tails

TailReport upper_tail_suite(const SamplingConfig& config, const std::vector<double>& kappa_list) {
  check_sampling(config);
  check_ascending(kappa_list, "kappa", /*allow_zero=*/true);
  const auto amplitudes = sample_amplitudes(config);
  const auto q = static_cast<long double>(table_size(config.m));
  const auto n = static_cast<double>(config.n_samples);

  TailReport report{"upper-tail", config.m, config.n_samples, config.seed, TailSide::kUpper, {}, {}};
  for (double kappa : kappa_list) {
    const long double threshold_sq = 2.0L * q * (static_cast<long double>(kappa) + std::log(q));
    std::uint64_t hits = 0;
    for (auto s : amplitudes) hits += static_cast<long double>(s) * static_cast<long double>(s) >= threshold_sq;

    TailRow row{};
    row.parameter = kappa;
    row.threshold = static_cast<double>(std::sqrt(threshold_sq));
    row.hits = hits;
    row.empirical_probability = static_cast<double>(hits) / n;
    row.bound = 2.0 * std::exp(-kappa);
    row.slack = binomial_slack(*row.bound, config.n_samples) + 10.0 / n;
    row.vacuous = *row.bound >= 1.0;
    report.rows.push_back(row);

    auto claim = bound_claim("thm-th1", param("kappa", kappa), *row.bound, row.empirical_probability, row.slack);
    if (row.vacuous) claim.verdict = Verdict::kVacuous;
    report.claims.push_back(std::move(claim));
  }
  return report;
}

TailReport lower_tail_suite(const SamplingConfig& config, double alpha, double eta, const std::vector<int>& m_values) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("lower tail needs 0 < alpha < 1");
  if (!(eta > 0.0 && eta < 1.0 - alpha * alpha)) throw DomainError("lower tail needs 0 < eta < 1 - alpha^2");
  if (m_values.empty()) throw RangeError("lower tail needs at least one m");
  for (std::size_t i = 0; i < m_values.size(); ++i) {
    check_dimension(m_values[i]);
    if (i > 0 && m_values[i] <= m_values[i - 1]) throw RangeError("m values must be strictly ascending");
  }
  if (config.n_samples == 0) throw RangeError("n_samples must be positive");

  TailReport report{"lower-tail", m_values.back(), config.n_samples, config.seed, TailSide::kLower, {}, {}};
  const auto n = static_cast<double>(config.n_samples);
  for (int m : m_values) {
    SamplingConfig at_m = config;
    at_m.m = m;
    const double q = static_cast<double>(table_size(m));
    const double log_q = std::log(q);
    const double threshold =
        (alpha / 2.0 - eta / alpha - alpha * alpha * alpha * log_q / q) * std::sqrt(q * log_q);

    TailRow row{};
    row.parameter = m;
    row.threshold = threshold;
    row.q_pow_neg_eta = std::pow(q, -eta);
    if (threshold <= 0.0) {
      // S >= sqrt(q) > 0, so the event is certain.
      row.vacuous = true;
      row.hits = config.n_samples;
    } else {
      const auto amplitudes = sample_amplitudes(at_m);
      row.hits = static_cast<std::uint64_t>(
          std::count_if(amplitudes.begin(), amplitudes.end(), [&](auto s) { return static_cast<double>(s) > threshold; }));
    }
    row.empirical_probability = static_cast<double>(row.hits) / n;
    row.implied_constant = (1.0 - row.empirical_probability) * std::pow(q, eta);
    report.rows.push_back(row);
    report.claims.push_back(informational_claim("thm-minf", "m=" + std::to_string(m), 1.0 - *row.q_pow_neg_eta,
                                                row.empirical_probability,
                                                row.vacuous ? Verdict::kVacuous : Verdict::kInfo));
  }

  bool non_increasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    non_increasing &= (1.0 - report.rows[i].empirical_probability) <= (1.0 - report.rows[i - 1].empirical_probability);
  }
  report.claims.push_back(informational_claim("thm-minf-trend", "failure probability non-increasing in q",
                                              std::monostate{}, non_increasing ? 1.0 : 0.0,
                                              non_increasing ? Verdict::kPass : Verdict::kFail));
  return report;
}

TailReport deviation_suite(const SamplingConfig& config, const std::vector<double>& t_list) {
  check_sampling(config);
  check_ascending(t_list, "t", /*allow_zero=*/false);
  const auto l4 = sample_l4(config);
  const wide_int q = static_cast<wide_int>(table_size(config.m));
  const auto n = static_cast<double>(config.n_samples);

  TailReport report{"deviation", config.m, config.n_samples, config.seed, TailSide::kUpper, {}, {}};
  for (double t : t_list) {
    const long double scaled = static_cast<long double>(t) * static_cast<long double>(q * q);
    std::uint64_t hits = 0;
    for (auto value : l4) {
      wide_int gap = value - 3 * q * q + 2 * q;
      if (gap < 0) gap = -gap;
      hits += static_cast<long double>(gap) >= scaled;
    }
    TailRow row{};
    row.parameter = t;
    row.threshold = t;
    row.hits = hits;
    row.empirical_probability = static_cast<double>(hits) / n;
    row.bound = 40.0 / (t * t * static_cast<double>(q));
    row.slack = binomial_slack(*row.bound, config.n_samples);
    row.vacuous = *row.bound >= 1.0;
    report.rows.push_back(row);

    auto claim = bound_claim("prop-chebyshev", param("t", t), *row.bound, row.empirical_probability, row.slack);
    if (row.vacuous) claim.verdict = Verdict::kVacuous;
    report.claims.push_back(std::move(claim));
  }
  return report;
}

// ---------------------------------------------------------------- limit laws

DistributionReport distribution_suite(const SamplingConfig& config, std::uint64_t a) {
  check_sampling(config);
  if (a == 0) throw DomainError("distribution suite needs a != 0: Delta(0) = q is deterministic");
  if (a >= table_size(config.m)) throw RangeError("shift a must lie in [1, 2^m)");

  const auto deltas = sample_table<std::int64_t>(
      config, 1, [&](const BooleanFunction& g, std::span<std::int64_t> out) { out[0] = autocorrelation_at(g, a); });

  const auto q = static_cast<double>(table_size(config.m));
  const double root_q = std::sqrt(q);
  const auto n = static_cast<double>(config.n_samples);

  DistributionReport report{};
  report.m = config.m;
  report.n_samples = config.n_samples;
  report.seed = config.seed;
  report.a = a;

  std::vector<double> normalized;
  std::vector<double> ya;
  normalized.reserve(deltas.size());
  ya.reserve(deltas.size());
  SampleMoments xa;
  std::map<std::int64_t, std::uint64_t> counts;
  double normalized_sum = 0.0;
  for (auto d : deltas) {
    normalized.push_back(static_cast<double>(d) / root_q);
    normalized_sum += normalized.back();
    ya.push_back(static_cast<double>(d) * static_cast<double>(d) / q);
    xa.add(static_cast<wide_int>(d) * d);
    ++counts[d];
  }
  report.mean_normalized_delta = normalized_sum / n;
  report.mean_ya = static_cast<double>(xa.mean().to_long_double()) / q;
  report.ya_half_width = xa.half_width() / q;

  std::sort(normalized.begin(), normalized.end());
  std::sort(ya.begin(), ya.end());
  report.ks_statistic_gaussian = ks_statistic(normalized, [](double x) { return normal_cdf(x, 2.0); });
  report.ks_statistic_ya = ks_statistic(ya, squared_gaussian2_cdf);
  for (double p : kReportedQuantiles) {
    report.quantiles_normalized_delta.emplace_back(p, quantile(normalized, p));
    report.quantiles_ya.emplace_back(p, quantile(ya, p));
  }
  // Delta(a) = q (mod 4) for a != 0, so width-4 bins centred on the attained values tile the line.
  for (auto [value, count] : counts) {
    report.histogram_delta.push_back({static_cast<double>(value) - 2.0, static_cast<double>(value) + 2.0, count});
  }

  auto& claims = report.claims;
  claims.push_back(equality_claim("prop-gauss-mean", "E Delta(a)/sqrt(q)", 0.0, report.mean_normalized_delta,
                                  3.0 * std::sqrt(2.0 / n)));
  claims.push_back(equality_claim("prop-ya-mean", "E Y_a", 2.0, report.mean_ya, report.ya_half_width));
  if (config.m >= kKsMinDimension) {
    claims.push_back(bound_claim("prop-gauss-limit", "KS vs Normal(0,2)", kKsTolerance, report.ks_statistic_gaussian, 0.0));
    claims.push_back(bound_claim("prop-ya-limit", "KS vs erf(sqrt(x)/2)", kKsTolerance, report.ks_statistic_ya, 0.0));
  } else {
    claims.push_back(informational_claim("prop-gauss-limit", "KS vs Normal(0,2)", kKsTolerance,
                                         report.ks_statistic_gaussian));
    claims.push_back(informational_claim("prop-ya-limit", "KS vs erf(sqrt(x)/2)", kKsTolerance,
                                         report.ks_statistic_ya));
  }
  return report;
}

// ---------------------------------------------------------------- scgf

ScgfReport empirical_scgf(const SamplingConfig& config, const std::vector<double>& u_list) {
  check_sampling(config);
  if (u_list.empty()) throw RangeError("u list is empty");
  for (double u : u_list) {
    if (!std::isfinite(u)) throw RangeError("u values must be finite");
  }
  const auto l4 = sample_l4(config);
  const wide_int q = static_cast<wide_int>(table_size(config.m));
  const auto q_real = static_cast<long double>(q);

  // sum_{a != 0} Y_a = (||f^||_4^4 - q^2) / q.
  std::vector<long double> totals;
  totals.reserve(l4.size());
  for (auto value : l4) totals.push_back(static_cast<long double>(value - q * q) / q_real);

  ScgfReport report{config.m, config.n_samples, config.seed, {}, {}};
  const auto n = static_cast<long double>(config.n_samples);
  for (double u : u_list) {
    ScgfRow row{};
    row.u = u;
    long double peak = -INFINITY;
    for (auto t : totals) peak = std::max(peak, static_cast<long double>(u) * t);
    long double mass = 0.0L;
    for (auto t : totals) mass += std::exp(static_cast<long double>(u) * t - peak);
    const long double phi = (peak + std::log(mass / n)) / q_real;
    row.top_weight = static_cast<double>(1.0L / mass);
    if (std::isfinite(phi)) {
      row.phi = static_cast<double>(phi);
    } else {
      row.warning = "overflow: estimate not finite";
    }
    if (u > 0.0 && row.top_weight > 0.05) row.warning = "estimator dominated by a few samples";
    report.rows.push_back(row);
  }

  for (const auto& row : report.rows) {
    if (row.u == 0.0 && row.phi) report.claims.push_back(equality_claim("scgf-zero", "u=0", 0.0, *row.phi, 0.0));
  }

  std::vector<ScgfRow> sorted;
  std::copy_if(report.rows.begin(), report.rows.end(), std::back_inserter(sorted), [](const auto& r) { return r.phi.has_value(); });
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.u < y.u; });
  if (sorted.size() >= 2) {
    double worst_drop = -INFINITY;
    for (std::size_t k = 1; k < sorted.size(); ++k) worst_drop = std::max(worst_drop, *sorted[k - 1].phi - *sorted[k].phi);
    report.claims.push_back(bound_claim("scgf-monotone", "max decrease over grid", 0.0, worst_drop, kMonotoneTolerance));
  }
  if (sorted.size() >= 3) {
    // Convexity as non-decreasing slopes; works on non-uniform grids.
    double worst = -INFINITY;
    for (std::size_t k = 1; k + 1 < sorted.size(); ++k) {
      const double left = (*sorted[k].phi - *sorted[k - 1].phi) / (sorted[k].u - sorted[k - 1].u);
      const double right = (*sorted[k + 1].phi - *sorted[k].phi) / (sorted[k + 1].u - sorted[k].u);
      worst = std::max(worst, left - right);
    }
    report.claims.push_back(bound_claim("scgf-convex", "max slope decrease over grid", 0.0, worst, kMonotoneTolerance));
  }
  return report;
}

// ---------------------------------------------------------------- ratios

RatioTable asymptotic_ratio_table(const std::vector<int>& m_values, std::uint64_t n_samples_per_m, std::uint64_t seed,
                                  int threads) {
  if (m_values.empty()) throw RangeError("ratio table needs at least one m");
  for (int m : m_values) {
    if (m < 6 || m > 20) throw RangeError("ratio table needs m in [6, 20]");
  }
  if (n_samples_per_m == 0) throw RangeError("n_samples must be positive");

  const double l4_limit = std::pow(3.0, 0.25);
  const double limsup_constant = std::sqrt(2.0 * std::log(2.0));
  const double liminf_stated = std::log(2.0) / 2.0;
  const double liminf_proved = std::sqrt(std::log(2.0)) / 2.0;
  constexpr double kLiminfFloor = 0.34;

  RatioTable table{n_samples_per_m, seed, {}, {}};
  for (int m : m_values) {
    const SamplingConfig config{m, n_samples_per_m, seed, threads};
    const auto stats = sample_table<wide_int>(config, 2, [](const BooleanFunction& g, std::span<wide_int> out) {
      const auto sp = wht_fast(sign(g));
      out[0] = spectral_amplitude(sp);
      out[1] = l4_fourth(sp);
    });
    const wide_int q = static_cast<wide_int>(table_size(m));
    const long double root_q = std::sqrt(static_cast<long double>(q));
    const long double root_m = std::sqrt(static_cast<long double>(m));

    RatioRow row{m, n_samples_per_m, 0, INFINITY, -INFINITY, 0, INFINITY, -INFINITY, true};
    long double amplitude_sum = 0.0L;
    long double l4_sum = 0.0L;
    for (std::size_t i = 0; i < n_samples_per_m; ++i) {
      const wide_int s = stats[2 * i];
      row.all_above_sqrt_q &= s * s >= q;
      const auto amplitude = static_cast<double>(static_cast<long double>(s) / (root_q * root_m));
      const auto l4_ratio =
          static_cast<double>(std::pow(static_cast<long double>(stats[2 * i + 1]) / static_cast<long double>(q * q), 0.25L));
      amplitude_sum += amplitude;
      l4_sum += l4_ratio;
      row.amplitude_ratio_min = std::min(row.amplitude_ratio_min, amplitude);
      row.amplitude_ratio_max = std::max(row.amplitude_ratio_max, amplitude);
      row.l4_ratio_min = std::min(row.l4_ratio_min, l4_ratio);
      row.l4_ratio_max = std::max(row.l4_ratio_max, l4_ratio);
    }
    row.amplitude_ratio_mean = static_cast<double>(amplitude_sum / static_cast<long double>(n_samples_per_m));
    row.l4_ratio_mean = static_cast<double>(l4_sum / static_cast<long double>(n_samples_per_m));
    table.rows.push_back(row);

    const std::string at_m = "m=" + std::to_string(m);
    Claim floor{"lem-sqrt-q-floor", ClaimKind::kBound, at_m + ": min S >= sqrt(q)",
                static_cast<double>(root_q), row.amplitude_ratio_min * static_cast<double>(root_q * root_m),
                0.0, row.all_above_sqrt_q ? Verdict::kPass : Verdict::kFail};
    table.claims.push_back(std::move(floor));

    const double relative = std::fabs(row.l4_ratio_mean - l4_limit) / l4_limit;
    table.claims.push_back(informational_claim("cor-l4-limit", at_m + ": mean ||f^||_4/2^{m/2}", l4_limit,
                                               row.l4_ratio_mean,
                                               relative <= kL4LimitTolerance ? Verdict::kPass : Verdict::kFail));
    table.claims.push_back(informational_claim(
        "cor-th1-limsup", at_m + ": max S/(2^{m/2} sqrt m)", limsup_constant + 0.1, row.amplitude_ratio_max,
        m < 12 ? Verdict::kInfo
               : (row.amplitude_ratio_max <= limsup_constant + 0.1 ? Verdict::kPass : Verdict::kFail)));
    table.claims.push_back(informational_claim("cor-minf-liminf",
                                               at_m + ": min S/(2^{m/2} sqrt m); stated " + fmt(liminf_stated) +
                                                   ", proof chain " + fmt(liminf_proved),
                                               liminf_stated, row.amplitude_ratio_min,
                                               row.amplitude_ratio_min >= kLiminfFloor ? Verdict::kPass : Verdict::kFail));
  }
  return table;
}

}  // namespace boolfn
