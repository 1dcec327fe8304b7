#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "boolfn/boolean_function.hpp"
#include "boolfn/claims.hpp"
#include "boolfn/ensemble.hpp"
#include "boolfn/enumerate.hpp"

namespace boolfn {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { kJson, kCsv };

/// Column set shared by every CSV report.
inline constexpr const char* kCsvHeader = "mode,suite,m,claim_id,kind,parameter,theory,empirical,slack,verdict";

nlohmann::json to_json(const Quantity& q);
nlohmann::json to_json(const Claim& claim);

/// Single-function report: summary, verdict rows, optionally the full spectra.
nlohmann::json analyze_report(const BooleanFunction& g, bool full);

nlohmann::json to_json(const MomentReport& report);
nlohmann::json to_json(const TailReport& report);
nlohmann::json to_json(const DistributionReport& report);
nlohmann::json to_json(const ScgfReport& report);
nlohmann::json to_json(const RatioTable& report);
nlohmann::json to_json(const ExhaustiveReport& report);

/// Pretty JSON, or one CSV row per entry of "paper_claims".
std::string render(const nlohmann::json& report, OutputFormat format);

/// True if any non-informational row in "paper_claims" has verdict FAIL.
bool report_failed(const nlohmann::json& report);

}  // namespace boolfn
