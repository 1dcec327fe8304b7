#include "boolfn/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "boolfn/enumerate.hpp"

using namespace boolfn;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Quantity, JsonEncoding) {
  EXPECT_TRUE(to_json(Quantity{}).is_null());
  EXPECT_EQ(to_json(Quantity{wide_int{42}}), json(42));
  EXPECT_EQ(to_json(Quantity{wide_int{1} << 80}), json("1208925819614629174706176"));
  EXPECT_EQ(to_json(Quantity{0.5}), json(0.5));
  EXPECT_TRUE(to_json(Quantity{std::numeric_limits<double>::infinity()}).is_null());
  EXPECT_EQ(to_json(Quantity{Rational(3, 6)}), json("1/2"));
}

TEST(Analyze, BentTwoFields) {
  const auto j = analyze_report(from_hex("8", 2), false);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["mode"], "analyze");
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["hex"], "8");
  EXPECT_EQ(j["spectral_amplitude"], 2);
  EXPECT_EQ(j["nonlinearity"], 1);
  EXPECT_EQ(j["l4_fourth"], 16);
  EXPECT_EQ(j["sum_of_squares"], 0);
  EXPECT_EQ(j["bent"], true);
  EXPECT_FALSE(j.contains("walsh_spectrum"));
  EXPECT_FALSE(report_failed(j));
}

TEST(Analyze, FullAddsSpectra) {
  const auto j = analyze_report(from_hex("8", 2), true);
  EXPECT_EQ(j["walsh_spectrum"], json({2, 2, 2, -2}));
  EXPECT_EQ(j["autocorrelation"], json({4, 0, 0, 0}));
}

TEST(Analyze, ClaimsAllPassOnRandomFunctions) {
  for (int m : {1, 5, 10, 12}) {
    const auto j = analyze_report(random_uniform(m, 2, 0), false);
    for (const auto& c : j["paper_claims"]) EXPECT_EQ(c["verdict"], "PASS") << c.dump();
  }
}

TEST(Exhaustive, SchemaAtTwo) {
  const auto j = to_json(exhaustive_report(2, {false, 1}));
  EXPECT_EQ(j["mode"], "exhaustive");
  EXPECT_EQ(j["exact_E_l4"], "40/1");
  EXPECT_EQ(j["mu_m"], 2);
  EXPECT_EQ(j["covering_radius"], 1);
  EXPECT_EQ(j["function_count"], 16);
  EXPECT_EQ(j["exact_E_Xa"]["1"], "8/1");
  ASSERT_EQ(j["histogram_S"].size(), 2U);
  EXPECT_EQ(j["histogram_S"][0]["lower"], 2);
  EXPECT_EQ(j["histogram_S"][0]["count"], 8);
  EXPECT_FALSE(report_failed(j));
}

TEST(Render, CsvColumnsAndQuoting) {
  const auto j = analyze_report(from_hex("8", 2), false);
  const auto rows = lines(render(j, OutputFormat::kCsv));
  ASSERT_EQ(rows.size(), 1 + j["paper_claims"].size());
  EXPECT_EQ(rows[0], kCsvHeader);
  EXPECT_EQ(rows[1].rfind("analyze,analyze,2,parseval,equality,", 0), 0U) << rows[1];
  EXPECT_NE(rows[1].find(",16/1,16/1,0.0,PASS"), std::string::npos) << rows[1];

  json synthetic = {{"mode", "ensemble"}, {"suite", "x"}, {"m", 3}, {"paper_claims", json::array()}};
  synthetic["paper_claims"].push_back(to_json(bound_claim("id", "a=1,b=2", 1.0, 0.5, 0.1)));
  const auto row = lines(render(synthetic, OutputFormat::kCsv))[1];
  EXPECT_NE(row.find(",\"a=1,b=2\","), std::string::npos) << row;
}

TEST(Render, JsonEndsWithNewline) {
  const auto text = render(analyze_report(from_hex("8", 2), false), OutputFormat::kJson);
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(json::parse(text)["nonlinearity"], 1);
}

TEST(ReportFailed, IgnoresInformationalRows) {
  json j = {{"paper_claims", json::array()}};
  j["paper_claims"].push_back(to_json(informational_claim("i", "", 1.0, 2.0, Verdict::kFail)));
  EXPECT_FALSE(report_failed(j));
  j["paper_claims"].push_back(to_json(bound_claim("b", "", 1.0, 2.0, 0.0)));
  EXPECT_TRUE(report_failed(j));
}
