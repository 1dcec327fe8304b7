#include "boolfn/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "boolfn/boolean_function.hpp"
#include "boolfn/ensemble.hpp"
#include "boolfn/enumerate.hpp"
#include "boolfn/errors.hpp"
#include "boolfn/report.hpp"

namespace boolfn::cli {

namespace {

const std::set<std::string> kSuites = {"moments", "upper-tail", "lower-tail", "deviation", "dist", "scgf", "ratios"};

/// Every field of a run, validated before any computation starts.
struct RunConfig {
  std::string suite;
  int m = 8;
  std::string hex;
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 10000;
  std::string format = "json";
  std::string out_path;
  std::string kappa = "0.5,1,2,4";
  double alpha = 0.8;
  double eta = 0.3;
  std::string t = "0.5,1";
  std::string u = "-0.4,-0.2,0,0.1";
  std::uint64_t a = 1;
  std::string m_range = "6..12";
  bool full = false;
  int threads = default_thread_count();
  bool override_cost = false;
};

std::string one_line(std::string text) {
  for (auto& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

/// Buffer-then-flush: to a temp file renamed into place, or to `out`.
void emit(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << payload << std::flush;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    file << payload;
    if (!file.flush()) throw std::runtime_error("failed writing " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

nlohmann::json run_sample(const RunConfig& c) {
  SamplingConfig base{c.m, c.n_samples, c.seed, c.threads};
  if (c.suite == "moments") {
    MomentConfig config;
    static_cast<SamplingConfig&>(config) = base;
    return to_json(moment_suite(config));
  }
  if (c.suite == "upper-tail") return to_json(upper_tail_suite(base, parse_real_list(c.kappa)));
  if (c.suite == "lower-tail") return to_json(lower_tail_suite(base, c.alpha, c.eta, parse_m_range(c.m_range)));
  if (c.suite == "deviation") return to_json(deviation_suite(base, parse_real_list(c.t)));
  if (c.suite == "dist") return to_json(distribution_suite(base, c.a));
  if (c.suite == "scgf") return to_json(empirical_scgf(base, parse_real_list(c.u)));
  return to_json(asymptotic_ratio_table(parse_m_range(c.m_range), c.n_samples, c.seed, c.threads));
}

/// Cheap structural checks for the sample suites; the suites re-check their
/// own preconditions before sampling.
void validate_sample(const RunConfig& c) {
  if (!kSuites.contains(c.suite)) throw FormatError("unknown suite '" + c.suite + "'");
  if (c.suite != "ratios" && c.suite != "lower-tail") check_dimension(c.m);
  if (c.n_samples == 0) throw RangeError("--n must be positive");
  if (c.suite == "upper-tail") parse_real_list(c.kappa);
  if (c.suite == "deviation") parse_real_list(c.t);
  if (c.suite == "scgf") parse_real_list(c.u);
  if (c.suite == "lower-tail" || c.suite == "ratios") parse_m_range(c.m_range);
  if (c.suite == "moments" && (c.n_samples < 1000 || c.m > 20)) throw RangeError("moments needs --n >= 1000 and --m <= 20");
  if (c.suite == "dist" && (c.a == 0 || c.a >= table_size(c.m))) throw RangeError("--a must lie in [1, 2^m)");
  if (c.suite == "lower-tail" && !(c.alpha > 0 && c.alpha < 1 && c.eta > 0 && c.eta < 1 - c.alpha * c.alpha)) {
    throw DomainError("lower-tail needs 0 < alpha < 1 and 0 < eta < 1 - alpha^2");
  }
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const double value = std::stod(item, &used);
      if (used != item.size()) throw FormatError("");
      values.push_back(value);
    } catch (const std::exception&) {
      throw FormatError("malformed number '" + item + "' in list '" + text + "'");
    }
  }
  if (values.empty()) throw FormatError("empty list");
  return values;
}

std::vector<int> parse_m_range(const std::string& text) {
  auto parse_int = [&](const std::string& item) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw FormatError("");
      return value;
    } catch (const std::exception&) {
      throw FormatError("malformed m range '" + text + "'");
    }
  };
  std::vector<int> values;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw FormatError("empty m range '" + text + "'");
    for (int m = lo; m <= hi; ++m) values.push_back(m);
    return values;
  }
  std::stringstream stream(text);
  for (std::string item; std::getline(stream, item, ',');) values.push_back(parse_int(item));
  if (values.empty()) throw FormatError("empty m range");
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Spectral analysis of Boolean functions", "boolfn"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "worker threads")->envname("BOOLFN_THREADS")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", c.out_path, "write the report to FILE instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "spectral summary of one truth table");
  analyze->add_option("--m", c.m, "dimension")->required();
  analyze->add_option("--hex", c.hex, "truth table, lowercase hex")->required();
  analyze->add_flag("--full", c.full, "include Walsh spectrum and autocorrelation");
  add_common(analyze);

  auto* sample = app.add_subcommand("sample", "Monte Carlo suites");
  sample->add_option("suite", c.suite, "moments | upper-tail | lower-tail | deviation | dist | scgf | ratios")->required();
  sample->add_option("--m", c.m, "dimension");
  sample->add_option("--n", c.n_samples, "number of sampled functions (per m for ratios/lower-tail)");
  sample->add_option("--seed", c.seed, "master seed");
  sample->add_option("--kappa", c.kappa, "upper-tail kappa list");
  sample->add_option("--alpha", c.alpha, "lower-tail alpha");
  sample->add_option("--eta", c.eta, "lower-tail eta");
  sample->add_option("--t", c.t, "deviation t list");
  sample->add_option("--u", c.u, "scgf u list");
  sample->add_option("--a", c.a, "shift for the distribution suite");
  sample->add_option("--m-range", c.m_range, "lo..hi or comma list");
  add_common(sample);

  auto* enumerate = app.add_subcommand("enumerate", "exhaustive oracle over all functions");
  enumerate->add_option("--m", c.m, "dimension")->required();
  enumerate->add_flag("--override-cost", c.override_cost, "allow m = 5 (2^32 functions)");
  add_common(enumerate);

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "boolfn: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    const OutputFormat format = c.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    nlohmann::json report;
    if (analyze->parsed()) {
      report = analyze_report(from_hex(c.hex, c.m), c.full);
    } else if (sample->parsed()) {
      validate_sample(c);
      report = run_sample(c);
    } else {
      check_enumeration_dimension(c.m, c.override_cost);
      if (c.override_cost && c.m > kEnumerateDefaultMaxDimension) {
        err << "boolfn: warning: enumerating m=" << c.m << " visits 2^32 functions and may take hours\n";
      }
      report = to_json(exhaustive_report(c.m, {c.override_cost, c.threads}));
    }
    emit(render(report, format), c.out_path, out);
    return report_failed(report) ? kExitClaimFailure : kExitOk;
  } catch (const CostGuardError& e) {
    err << "boolfn: " << one_line(e.what()) << "\n";
    return kExitCostGuard;
  } catch (const std::exception& e) {
    err << "boolfn: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }
}

}  // namespace boolfn::cli
