#include "boolfn/report.hpp"

#include <cmath>
#include <sstream>

#include "boolfn/spectra.hpp"

namespace boolfn {

namespace {

using nlohmann::json;

json wide_json(wide_int value) {
  if (fits_int64(value)) return static_cast<std::int64_t>(value);
  return to_string(value);
}

json real_json(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

json envelope(const char* mode, const std::string& suite, int m) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["mode"] = mode;
  j["suite"] = suite;
  j["m"] = m;
  return j;
}

json claims_json(const std::vector<Claim>& claims) {
  auto out = json::array();
  for (const auto& c : claims) out.push_back(to_json(c));
  return out;
}

json exact_histogram(const Histogram& h) {
  auto out = json::array();
  for (auto [value, count] : h) out.push_back({{"lower", value}, {"upper", value}, {"count", count}});
  return out;
}

json moments_json(const SampleMoments& s) {
  return {{"n", s.count()},
          {"sum", wide_json(s.sum())},
          {"mean", s.mean().to_string()},
          {"mean_value", real_json(s.mean().to_double())},
          {"half_width_99", real_json(s.half_width())}};
}

json tail_row_json(const TailRow& row, TailSide side) {
  json j;
  j["parameter"] = row.parameter;
  j["threshold"] = real_json(row.threshold);
  j["hits"] = row.hits;
  j["empirical_probability"] = row.empirical_probability;
  j["theoretical_bound"] = row.bound ? real_json(*row.bound) : json(nullptr);
  j["slack"] = row.slack;
  j["vacuous"] = row.vacuous;
  if (side == TailSide::kLower) {
    j["failure_probability"] = 1.0 - row.empirical_probability;
    j["q_pow_neg_eta"] = row.q_pow_neg_eta ? real_json(*row.q_pow_neg_eta) : json(nullptr);
    j["implied_constant"] = row.implied_constant ? real_json(*row.implied_constant) : json(nullptr);
  }
  return j;
}

std::string csv_cell(const json& value) {
  std::string text;
  if (value.is_null()) return "";
  if (value.is_string()) {
    text = value.get<std::string>();
  } else {
    text = value.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

json to_json(const Quantity& q) {
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(wide_int v) const { return wide_json(v); }
    json operator()(double v) const { return real_json(v); }
    json operator()(const Rational& v) const { return v.to_string(); }
  };
  return std::visit(Visitor{}, q);
}

json to_json(const Claim& claim) {
  return {{"claim_id", claim.claim_id},
          {"kind", std::string(to_string(claim.kind))},
          {"parameter", claim.parameter},
          {"theory", to_json(claim.theory)},
          {"empirical", to_json(claim.empirical)},
          {"slack", claim.slack ? real_json(*claim.slack) : json(nullptr)},
          {"verdict", std::string(to_string(claim.verdict))}};
}

json analyze_report(const BooleanFunction& g, bool full) {
  const auto f = sign(g);
  const auto sp = wht_fast(f);
  const auto ac = autocorrelation(sp);
  const auto summary = summarize(g);
  const wide_int q = static_cast<wide_int>(g.size());
  const wide_int s = summary.spectral_amplitude;

  json j = envelope("analyze", "analyze", g.m());
  j["hex"] = g.to_hex();
  j["weight"] = g.weight();
  j["spectral_amplitude"] = summary.spectral_amplitude;
  j["nonlinearity"] = summary.nonlinearity;
  j["l4_fourth"] = wide_json(summary.l4_fourth);
  j["sum_of_squares"] = wide_json(summary.sum_of_squares);
  j["bent"] = s * s == q;
  if (full) {
    j["walsh_spectrum"] = sp.coeffs;
    j["autocorrelation"] = ac.delta;
  }

  std::vector<Claim> claims;
  claims.push_back(exact_equality_claim("parseval", "sum_v f^(v)^2 = q^2", Rational(q * q), Rational(sp.parseval_sum())));
  if (g.m() <= kBruteforceNonlinearityMaxDimension) {
    claims.push_back(exact_equality_claim("prop-nl-spectral", "2^{m-1} - S/2 = min affine distance",
                                          Rational(nonlinearity_bruteforce(g)), Rational(summary.nonlinearity)));
  }
  claims.push_back(exact_equality_claim("lem-sum-of-squares", "l4 = q^2 + sum_{a!=0} X_a",
                                        Rational(q * q + summary.sum_of_squares), Rational(summary.l4_fourth)));
  claims.push_back(exact_bound_claim("l4-upper", "l4 <= S^2 q", Rational(s * s * q), Rational(summary.l4_fourth)));
  claims.push_back(exact_bound_claim("l4-lower", "q^2 <= l4", Rational(summary.l4_fourth), Rational(q * q)));
  j["paper_claims"] = claims_json(claims);
  return j;
}

json to_json(const MomentReport& r) {
  json j = envelope("ensemble", "moments", r.m);
  j["seed"] = r.seed;
  j["n_samples"] = r.n_samples;
  j["theory_l4"] = wide_json(r.theory_l4);
  j["empirical_mean_l4"] = moments_json(r.l4);
  j["theory_Xa"] = wide_json(r.theory_xa);
  j["bound_EXa2"] = wide_json(r.bound_xa_squared);
  j["bound_EXaXb"] = wide_json(r.bound_xa_xb);
  j["bound_l4_eighth"] = wide_json(r.bound_l4_eighth);
  j["empirical_l4_eighth"] = moments_json(r.l4_eighth);
  auto xa = json::array();
  for (const auto& s : r.xa) xa.push_back({{"a", s.a}, {"stat", moments_json(s.moments)}});
  j["empirical_mean_Xa"] = xa;
  auto xa2 = json::array();
  for (const auto& s : r.xa_squared) xa2.push_back({{"a", s.a}, {"stat", moments_json(s.moments)}});
  j["empirical_EXa2"] = xa2;
  auto xaxb = json::array();
  for (const auto& p : r.xa_xb) xaxb.push_back({{"a", p.a}, {"b", p.b}, {"stat", moments_json(p.moments)}});
  j["empirical_EXaXb"] = xaxb;
  j["paper_claims"] = claims_json(r.claims);
  return j;
}

json to_json(const TailReport& r) {
  json j = envelope("ensemble", r.suite, r.m);
  j["seed"] = r.seed;
  j["n_samples"] = r.n_samples;
  j["side"] = r.side == TailSide::kUpper ? "upper" : "lower";
  auto rows = json::array();
  for (const auto& row : r.rows) rows.push_back(tail_row_json(row, r.side));
  j["rows"] = rows;
  j["paper_claims"] = claims_json(r.claims);
  return j;
}

json to_json(const DistributionReport& r) {
  json j = envelope("ensemble", "dist", r.m);
  j["seed"] = r.seed;
  j["n_samples"] = r.n_samples;
  j["a"] = r.a;
  j["ks_statistic_gaussian"] = real_json(r.ks_statistic_gaussian);
  j["ks_statistic_ya"] = real_json(r.ks_statistic_ya);
  j["ks_tolerance"] = kKsTolerance;
  j["mean_normalized_delta"] = real_json(r.mean_normalized_delta);
  j["mean_ya"] = real_json(r.mean_ya);
  auto quantiles = [](const auto& pairs) {
    auto out = json::array();
    for (auto [p, v] : pairs) out.push_back({{"p", p}, {"value", v}});
    return out;
  };
  j["quantiles_normalized_delta"] = quantiles(r.quantiles_normalized_delta);
  j["quantiles_ya"] = quantiles(r.quantiles_ya);
  auto hist = json::array();
  for (const auto& bin : r.histogram_delta) hist.push_back({{"lower", bin.lower}, {"upper", bin.upper}, {"count", bin.count}});
  j["histogram_delta"] = hist;
  j["paper_claims"] = claims_json(r.claims);
  return j;
}

json to_json(const ScgfReport& r) {
  json j = envelope("ensemble", "scgf", r.m);
  j["seed"] = r.seed;
  j["n_samples"] = r.n_samples;
  auto rows = json::array();
  for (const auto& row : r.rows) {
    json item = {{"u", row.u}, {"phi", row.phi ? real_json(*row.phi) : json(nullptr)}, {"top_weight", row.top_weight}};
    if (!row.warning.empty()) item["warning"] = row.warning;
    rows.push_back(item);
  }
  j["rows"] = rows;
  j["paper_claims"] = claims_json(r.claims);
  return j;
}

json to_json(const RatioTable& r) {
  json j = envelope("ensemble", "ratios", r.rows.empty() ? 0 : r.rows.back().m);
  j["seed"] = r.seed;
  j["n_samples"] = r.n_samples;
  auto m_range = json::array();
  auto rows = json::array();
  for (const auto& row : r.rows) {
    m_range.push_back(row.m);
    rows.push_back({{"m", row.m},
                    {"amplitude_ratio", {{"mean", row.amplitude_ratio_mean}, {"min", row.amplitude_ratio_min}, {"max", row.amplitude_ratio_max}}},
                    {"l4_ratio", {{"mean", row.l4_ratio_mean}, {"min", row.l4_ratio_min}, {"max", row.l4_ratio_max}}},
                    {"all_above_sqrt_q", row.all_above_sqrt_q}});
  }
  j["m_range"] = m_range;
  j["rows"] = rows;
  j["paper_claims"] = claims_json(r.claims);
  return j;
}

json to_json(const ExhaustiveReport& r) {
  json j = envelope("exhaustive", "enumerate", r.m);
  j["function_count"] = r.function_count;
  j["mu_m"] = r.mu_m;
  j["covering_radius"] = r.covering_radius;
  j["exact_E_l4"] = r.exact_e_l4.to_string();
  j["exact_E_l4sq"] = r.exact_e_l4_squared.to_string();
  json xa = json::object();
  for (const auto& [a, v] : r.exact_e_xa) xa[std::to_string(a)] = v.to_string();
  j["exact_E_Xa"] = xa;
  json xa2 = json::object();
  for (const auto& [a, v] : r.exact_e_xa_squared) xa2[std::to_string(a)] = v.to_string();
  j["exact_E_Xa2"] = xa2;
  auto xaxb = json::array();
  for (const auto& [pair, v] : r.exact_e_xa_xb) xaxb.push_back({{"a", pair.first}, {"b", pair.second}, {"value", v.to_string()}});
  j["exact_E_XaXb"] = xaxb;
  j["histogram_S"] = exact_histogram(r.histogram_s);
  j["histogram_nl"] = exact_histogram(r.histogram_nl);
  j["histogram_l4"] = exact_histogram(r.histogram_l4);
  j["paper_claims"] = claims_json(r.claims);
  return j;
}

std::string render(const json& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return report.dump(2) + "\n";
  std::ostringstream os;
  os << kCsvHeader << "\n";
  const std::string mode = report.value("mode", "");
  const std::string suite = report.value("suite", "");
  const std::string m = report.contains("m") ? report["m"].dump() : "";
  for (const auto& c : report.value("paper_claims", json::array())) {
    os << csv_cell(mode) << ',' << csv_cell(suite) << ',' << m << ',' << csv_cell(c["claim_id"]) << ','
       << csv_cell(c["kind"]) << ',' << csv_cell(c["parameter"]) << ',' << csv_cell(c["theory"]) << ','
       << csv_cell(c["empirical"]) << ',' << csv_cell(c["slack"]) << ',' << csv_cell(c["verdict"]) << "\n";
  }
  return os.str();
}

bool report_failed(const json& report) {
  for (const auto& c : report.value("paper_claims", json::array())) {
    if (c.value("kind", "") != "informational" && c.value("verdict", "") == "FAIL") return true;
  }
  return false;
}

}  // namespace boolfn
