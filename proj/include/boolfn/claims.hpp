#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "boolfn/rational.hpp"
#include "boolfn/wide_int.hpp"

namespace boolfn {

enum class ClaimKind { kEquality, kBound, kInformational };
enum class Verdict { kPass, kFail, kInfo, kVacuous };

/// A reported number: absent, exact integer, floating value, or exact fraction.
using Quantity = std::variant<std::monostate, wide_int, double, Rational>;

long double as_long_double(const Quantity& q);

/// One row of a verdict table. Bound claims read "empirical <= theory + slack";
/// equality claims read "|empirical - theory| <= slack".
struct Claim {
  std::string claim_id;
  ClaimKind kind = ClaimKind::kInformational;
  std::string parameter;
  Quantity theory;
  Quantity empirical;
  std::optional<double> slack;
  Verdict verdict = Verdict::kInfo;
};

std::string_view to_string(ClaimKind kind);
std::string_view to_string(Verdict verdict);

Claim equality_claim(std::string id, std::string parameter, Quantity theory, Quantity empirical, double slack);
Claim bound_claim(std::string id, std::string parameter, Quantity bound, Quantity empirical, double slack);
/// Exact rational comparisons, zero slack.
Claim exact_equality_claim(std::string id, std::string parameter, const Rational& theory, const Rational& empirical);
Claim exact_bound_claim(std::string id, std::string parameter, const Rational& bound, const Rational& empirical);
/// Report-only row; `verdict` may carry an advisory PASS/FAIL that never
/// counts as a failure.
Claim informational_claim(std::string id, std::string parameter, Quantity theory, Quantity empirical,
                          Verdict verdict = Verdict::kInfo);

/// True if any equality or bound row failed; informational rows never count.
bool any_failed(const std::vector<Claim>& claims);

}  // namespace boolfn
