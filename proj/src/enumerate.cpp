#include "boolfn/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <span>
#include <string>

#include "json.hpp"

#include "boolfn/boolean_function.hpp"
#include "boolfn/errors.hpp"
#include "boolfn/spectra.hpp"

namespace boolfn {

namespace {

void add_histograms(Histogram& into, const Histogram& from) {
  for (auto [key, count] : from) into[key] += count;
}

void add_sums(std::vector<wide_int>& into, const std::vector<wide_int>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] = checked_add(into[i], from[i]);
}

wide_int parse_wide(const std::string& text) {
  if (text.empty()) throw FormatError("empty integer in checkpoint");
  std::size_t i = 0;
  const bool negative = text[0] == '-';
  if (negative) i = 1;
  if (i == text.size()) throw FormatError("malformed integer in checkpoint: " + text);
  wide_int value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw FormatError("malformed integer in checkpoint: " + text);
    value = checked_add(checked_mul(value, 10), text[i] - '0');
  }
  return negative ? -value : value;
}

nlohmann::json wide_array(const std::vector<wide_int>& values) {
  auto out = nlohmann::json::array();
  for (auto v : values) out.push_back(to_string(v));
  return out;
}

std::vector<wide_int> wide_array_from(const nlohmann::json& j) {
  std::vector<wide_int> out;
  for (const auto& v : j) out.push_back(parse_wide(v.get<std::string>()));
  return out;
}

nlohmann::json histogram_json(const Histogram& h) {
  auto out = nlohmann::json::array();
  for (auto [key, count] : h) out.push_back({key, count});
  return out;
}

Histogram histogram_from(const nlohmann::json& j) {
  Histogram out;
  for (const auto& entry : j) out[entry.at(0).get<std::int64_t>()] = entry.at(1).get<std::uint64_t>();
  return out;
}

std::uint64_t histogram_mass(const Histogram& h) {
  std::uint64_t total = 0;
  for (auto [key, count] : h) total += count;
  return total;
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> enumeration_pairs(int m) {
  const std::uint64_t q = table_size(m);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t a = 1; a < q; ++a) {
    for (std::uint64_t b = a + 1; b < q; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::uint64_t function_count(int m) {
  if (m < 1 || m > kEnumerateOverrideMaxDimension) throw RangeError("function_count needs 1 <= m <= 5");
  return std::uint64_t{1} << table_size(m);
}

void check_enumeration_dimension(int m, bool override_cost) {
  if (m < 1 || m > kEnumerateOverrideMaxDimension) {
    throw RangeError("enumeration supports 1 <= m <= 5, got m=" + std::to_string(m));
  }
  if (m > kEnumerateDefaultMaxDimension && !override_cost) {
    throw CostGuardError("enumerating m=5 means 2^32 truth tables (hours of compute); pass the cost override to run it");
  }
}

EnumerationState empty_state(int m, std::uint64_t at) {
  EnumerationState state;
  state.m = m;
  state.begin = at;
  state.end = at;
  state.sum_xa.assign(table_size(m), 0);
  state.sum_xa_squared.assign(table_size(m), 0);
  state.sum_xa_xb.assign(enumeration_pairs(m).size(), 0);
  return state;
}

EnumerationState enumerate_block(int m, std::uint64_t begin, std::uint64_t end) {
  check_enumeration_dimension(m, /*override_cost=*/true);
  if (begin > end || end > function_count(m)) throw RangeError("enumeration block outside [0, 2^{2^m})");

  const std::size_t q = table_size(m);
  const auto pairs = enumeration_pairs(m);
  const std::int64_t half_q = static_cast<std::int64_t>(q / 2);
  EnumerationState state = empty_state(m, begin);

  std::array<std::int32_t, 32> walsh{};
  std::array<std::int64_t, 32> power{};
  std::array<std::int64_t, 32> squared{};
  for (std::uint64_t table = begin; table < end; ++table) {
    for (std::size_t x = 0; x < q; ++x) walsh[x] = ((table >> x) & 1U) ? -1 : 1;
    walsh_butterfly(std::span<std::int32_t>(walsh.data(), q));

    std::int64_t amplitude = 0;
    wide_int fourth = 0;
    for (std::size_t v = 0; v < q; ++v) {
      const std::int64_t c = walsh[v];
      amplitude = std::max<std::int64_t>(amplitude, std::abs(c));
      power[v] = c * c;
      fourth += static_cast<wide_int>(power[v]) * power[v];
    }
    const wide_int l4 = fourth / static_cast<wide_int>(q);

    // Autocorrelation through the power spectrum: delta = WHT(f^^2) / q.
    walsh_butterfly(std::span<std::int64_t>(power.data(), q));
    for (std::size_t a = 0; a < q; ++a) {
      const std::int64_t delta = power[a] / static_cast<std::int64_t>(q);
      squared[a] = delta * delta;
    }

    ++state.histogram_s[amplitude];
    ++state.histogram_nl[half_q - amplitude / 2];
    ++state.histogram_l4[static_cast<std::int64_t>(l4)];
    state.sum_l4 += l4;
    state.sum_l4_squared += l4 * l4;
    for (std::size_t a = 1; a < q; ++a) {
      state.sum_xa[a] += squared[a];
      state.sum_xa_squared[a] += static_cast<wide_int>(squared[a]) * squared[a];
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      state.sum_xa_xb[k] += static_cast<wide_int>(squared[pairs[k].first]) * squared[pairs[k].second];
    }
  }
  state.end = end;
  return state;
}

void merge(EnumerationState& into, const EnumerationState& next) {
  if (into.m != next.m) throw DimensionMismatch("merge: enumeration states of different m");
  if (into.end != next.begin) throw RangeError("merge: blocks are not contiguous");
  add_histograms(into.histogram_s, next.histogram_s);
  add_histograms(into.histogram_nl, next.histogram_nl);
  add_histograms(into.histogram_l4, next.histogram_l4);
  into.sum_l4 = checked_add(into.sum_l4, next.sum_l4);
  into.sum_l4_squared = checked_add(into.sum_l4_squared, next.sum_l4_squared);
  add_sums(into.sum_xa, next.sum_xa);
  add_sums(into.sum_xa_squared, next.sum_xa_squared);
  add_sums(into.sum_xa_xb, next.sum_xa_xb);
  into.end = next.end;
}

std::string checkpoint_to_json(const EnumerationState& state) {
  nlohmann::json j;
  j["m"] = state.m;
  j["begin"] = state.begin;
  j["end"] = state.end;
  j["histogram_s"] = histogram_json(state.histogram_s);
  j["histogram_nl"] = histogram_json(state.histogram_nl);
  j["histogram_l4"] = histogram_json(state.histogram_l4);
  j["sum_l4"] = to_string(state.sum_l4);
  j["sum_l4_squared"] = to_string(state.sum_l4_squared);
  j["sum_xa"] = wide_array(state.sum_xa);
  j["sum_xa_squared"] = wide_array(state.sum_xa_squared);
  j["sum_xa_xb"] = wide_array(state.sum_xa_xb);
  return j.dump();
}

EnumerationState checkpoint_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    check_enumeration_dimension(j.at("m").get<int>(), /*override_cost=*/true);
    EnumerationState state = empty_state(j.at("m").get<int>(), j.at("begin").get<std::uint64_t>());
    state.end = j.at("end").get<std::uint64_t>();
    state.histogram_s = histogram_from(j.at("histogram_s"));
    state.histogram_nl = histogram_from(j.at("histogram_nl"));
    state.histogram_l4 = histogram_from(j.at("histogram_l4"));
    state.sum_l4 = parse_wide(j.at("sum_l4").get<std::string>());
    state.sum_l4_squared = parse_wide(j.at("sum_l4_squared").get<std::string>());
    state.sum_xa = wide_array_from(j.at("sum_xa"));
    state.sum_xa_squared = wide_array_from(j.at("sum_xa_squared"));
    state.sum_xa_xb = wide_array_from(j.at("sum_xa_xb"));
    if (state.sum_xa.size() != table_size(state.m) || state.sum_xa_squared.size() != table_size(state.m) ||
        state.sum_xa_xb.size() != enumeration_pairs(state.m).size()) {
      throw FormatError("checkpoint arrays do not match m");
    }
    return state;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed checkpoint: ") + e.what());
  }
}

ExhaustiveReport finalize(const EnumerationState& state) {
  const std::uint64_t total = function_count(state.m);
  if (state.begin != 0 || state.end != total) throw RangeError("finalize: enumeration incomplete");
  const auto denominator = static_cast<wide_int>(total);
  const std::int64_t half_q = static_cast<std::int64_t>(table_size(state.m) / 2);

  ExhaustiveReport report{};
  report.m = state.m;
  report.function_count = total;
  report.histogram_s = state.histogram_s;
  report.histogram_nl = state.histogram_nl;
  report.histogram_l4 = state.histogram_l4;
  report.mu_m = state.histogram_s.begin()->first;
  report.covering_radius = half_q - report.mu_m / 2;
  report.exact_e_l4 = Rational(state.sum_l4, denominator);
  report.exact_e_l4_squared = Rational(state.sum_l4_squared, denominator);
  for (std::size_t a = 1; a < state.sum_xa.size(); ++a) {
    report.exact_e_xa.emplace_back(a, Rational(state.sum_xa[a], denominator));
    report.exact_e_xa_squared.emplace_back(a, Rational(state.sum_xa_squared[a], denominator));
  }
  const auto pairs = enumeration_pairs(state.m);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    report.exact_e_xa_xb.emplace_back(pairs[k], Rational(state.sum_xa_xb[k], denominator));
  }
  report.claims = exact_moment_crosscheck(report);
  return report;
}

ExhaustiveReport exhaustive_report(int m, const EnumerateOptions& options) {
  check_enumeration_dimension(m, options.override_cost);
  const std::uint64_t total = function_count(m);
  const auto workers = static_cast<std::uint64_t>(std::max(1, options.threads));
  const std::uint64_t block = (total + workers - 1) / workers;
  const std::uint64_t blocks = (total + block - 1) / block;

  std::vector<EnumerationState> partial(blocks);
  parallel_for(
      blocks, options.threads,
      [&](std::size_t first, std::size_t last) {
        for (std::size_t b = first; b < last; ++b) {
          partial[b] = enumerate_block(m, b * block, std::min(total, (b + 1) * block));
        }
      },
      1);

  EnumerationState state = empty_state(m, 0);
  for (const auto& p : partial) merge(state, p);
  return finalize(state);
}

std::int64_t covering_radius(int m, const EnumerateOptions& options) {
  return exhaustive_report(m, options).covering_radius;
}

std::vector<Claim> exact_moment_crosscheck(const ExhaustiveReport& report) {
  const wide_int q = static_cast<wide_int>(table_size(report.m));
  std::vector<Claim> claims;

  const std::uint64_t mass = report.function_count;
  const bool masses_ok = histogram_mass(report.histogram_s) == mass && histogram_mass(report.histogram_nl) == mass &&
                         histogram_mass(report.histogram_l4) == mass;
  claims.push_back(exact_equality_claim("histogram-mass", "counts sum to 2^{2^m}", Rational(mass),
                                        Rational(masses_ok ? mass : histogram_mass(report.histogram_s))));

  claims.push_back(exact_equality_claim("prop-esp-l4", "E||f^||_4^4 = 3q^2 - 2q", Rational(3 * q * q - 2 * q),
                                        report.exact_e_l4));
  for (const auto& [a, value] : report.exact_e_xa) {
    claims.push_back(exact_equality_claim("prop-esp1", "a=" + std::to_string(a), Rational(2 * q), value));
  }
  for (const auto& [a, value] : report.exact_e_xa_squared) {
    claims.push_back(exact_bound_claim("prop-esp-xa2", "a=" + std::to_string(a), Rational(12 * q * q), value));
  }
  for (const auto& [pair, value] : report.exact_e_xa_xb) {
    claims.push_back(exact_bound_claim("prop-esp-xaxb",
                                       "a=" + std::to_string(pair.first) + ",b=" + std::to_string(pair.second),
                                       Rational(4 * q * q + 32 * q), value));
  }
  claims.push_back(exact_bound_claim("prop-esp-l8", "E||f^||_4^8",
                                     Rational(64 * q - 100 * q * q + 28 * q * q * q + 9 * q * q * q * q),
                                     report.exact_e_l4_squared));

  const std::int64_t max_nl = report.histogram_nl.rbegin()->first;
  claims.push_back(exact_equality_claim("def-covering-radius", "r_m = max nl", Rational(max_nl),
                                        Rational(report.covering_radius)));

  // nl = 2^{m-1} - S/2 maps histogram_s onto histogram_nl bin for bin.
  Histogram image;
  for (auto [s, count] : report.histogram_s) image[static_cast<std::int64_t>(q / 2) - s / 2] += count;
  claims.push_back(exact_equality_claim("prop-nl-spectral", "histogram_nl is the image of histogram_s",
                                        Rational(1), Rational(image == report.histogram_nl ? 1 : 0)));

  const wide_int mu = report.mu_m;
  if (report.m % 2 == 0) {
    claims.push_back(exact_equality_claim("mu-even-closed-form", "mu_m = 2^{m/2}",
                                          Rational(wide_int{1} << (report.m / 2)), Rational(mu)));
  } else {
    const bool bracket = mu * mu >= q && mu * mu <= 2 * q;
    claims.push_back(informational_claim("mu-odd-bracket", "2^{m/2} <= mu_m <= 2^{(m+1)/2}", std::monostate{},
                                         mu, bracket ? Verdict::kPass : Verdict::kFail));
  }
  return claims;
}

std::vector<Claim> exact_moment_crosscheck(int m, const EnumerateOptions& options) {
  return exhaustive_report(m, options).claims;
}

}  // namespace boolfn
