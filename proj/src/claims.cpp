#include "boolfn/claims.hpp"

#include <cmath>

namespace boolfn {

long double as_long_double(const Quantity& q) {
  struct Visitor {
    long double operator()(std::monostate) const { return NAN; }
    long double operator()(wide_int v) const { return static_cast<long double>(v); }
    long double operator()(double v) const { return v; }
    long double operator()(const Rational& v) const { return v.to_long_double(); }
  };
  return std::visit(Visitor{}, q);
}

std::string_view to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::kEquality:
      return "equality";
    case ClaimKind::kBound:
      return "bound";
    case ClaimKind::kInformational:
      return "informational";
  }
  return "informational";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kInfo:
      return "INFO";
    case Verdict::kVacuous:
      return "VACUOUS";
  }
  return "INFO";
}

Claim equality_claim(std::string id, std::string parameter, Quantity theory, Quantity empirical, double slack) {
  const long double gap = std::fabs(as_long_double(empirical) - as_long_double(theory));
  const Verdict verdict = gap <= static_cast<long double>(slack) ? Verdict::kPass : Verdict::kFail;
  return {std::move(id), ClaimKind::kEquality, std::move(parameter), std::move(theory), std::move(empirical), slack,
          verdict};
}

Claim bound_claim(std::string id, std::string parameter, Quantity bound, Quantity empirical, double slack) {
  const bool ok = as_long_double(empirical) <= as_long_double(bound) + static_cast<long double>(slack);
  return {std::move(id),         ClaimKind::kBound, std::move(parameter), std::move(bound),
          std::move(empirical), slack,             ok ? Verdict::kPass : Verdict::kFail};
}

Claim exact_equality_claim(std::string id, std::string parameter, const Rational& theory, const Rational& empirical) {
  return {std::move(id), ClaimKind::kEquality, std::move(parameter), theory, empirical, 0.0,
          theory == empirical ? Verdict::kPass : Verdict::kFail};
}

Claim exact_bound_claim(std::string id, std::string parameter, const Rational& bound, const Rational& empirical) {
  return {std::move(id), ClaimKind::kBound, std::move(parameter), bound, empirical, 0.0,
          empirical <= bound ? Verdict::kPass : Verdict::kFail};
}

Claim informational_claim(std::string id, std::string parameter, Quantity theory, Quantity empirical,
                          Verdict verdict) {
  return {std::move(id), ClaimKind::kInformational, std::move(parameter), std::move(theory), std::move(empirical),
          std::nullopt, verdict};
}

bool any_failed(const std::vector<Claim>& claims) {
  for (const auto& c : claims) {
    if (c.kind != ClaimKind::kInformational && c.verdict == Verdict::kFail) return true;
  }
  return false;
}

}  // namespace boolfn
