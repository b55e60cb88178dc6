#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "apery/report_io.hpp"

using namespace apery;
using nlohmann::json;

namespace {

BatchSummary sample_batch() {
  Ranges r;
  r.prime_lo = 5;
  r.prime_hi = 13;
  r.n_lo = 1;
  r.n_hi = 6;
  r.m_list = {1, 3};
  return run_batch("all", r);
}

}  // namespace

TEST_CASE("parse_format") {
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("text") == OutputFormat::text);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("JSON report schema") {
  auto summary = sample_batch();
  std::string text = format_reports(summary.reports, OutputFormat::json);
  json parsed = json::parse(text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == summary.reports.size());
  for (const auto& entry : parsed) {
    CHECK(entry.contains("check"));
    CHECK(entry.at("check").is_string());
    CHECK(entry.at("params").is_object());
    for (const auto& [key, value] : entry.at("params").items()) {
      CHECK(!key.empty());
      CHECK(value.is_string());
    }
    CHECK(entry.at("modulus").is_string());
    CHECK(entry.at("lhs").is_string());
    CHECK(entry.at("rhs").is_string());
    const auto& dv = entry.at("diff_valuation");
    CHECK((dv.is_number_integer() || dv == json("inf")));
    CHECK(entry.at("pass").is_boolean());
    CHECK(entry.at("pass").get<bool>());
  }
}

TEST_CASE("JSON output round-trips byte for byte") {
  auto summary = sample_batch();
  std::string text = format_reports(summary.reports, OutputFormat::json);
  std::string again = json::parse(text).dump(2) + "\n";
  CHECK(text == again);
}

TEST_CASE("big integers serialize as decimal strings") {
  AperyTable table(25);
  std::string text = format_apery_table(table, OutputFormat::json);
  json parsed = json::parse(text);
  REQUIRE(parsed.size() == 26);
  CHECK(parsed.at(0) == "1");
  CHECK(parsed.at(3) == "1445");
  CHECK(parsed.at(25).get<std::string>() == table.at(25).get_str());
  CHECK(table.at(25) > Int("9223372036854775807"));  // would overflow int64
}

TEST_CASE("CSV and text report formats") {
  auto summary = sample_batch();
  std::string csv = format_reports(summary.reports, OutputFormat::csv);
  CHECK(csv.rfind("check,params,modulus,lhs,rhs,diff_valuation,pass\n", 0) == 0);
  CHECK(csv.find("thm1,m=1;p=5,125,") != std::string::npos);

  std::string text = format_reports(summary.reports, OutputFormat::text);
  CHECK(text.find("[PASS] thm1 m=1 p=5") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);
  // exact checks print no modulus
  CHECK(text.find("(exact)") != std::string::npos);
}

TEST_CASE("cm table formats") {
  std::vector<ReductionResult> rows;
  for (long m : {1, 3, 5, 7}) rows.push_back(reduce_odd_power(m));

  std::string csv = format_cm_table(rows, OutputFormat::csv);
  CHECK(csv ==
        "m,numerator,denominator\n"
        "1,1,1\n"
        "3,-1,3\n"
        "5,-13,27\n"
        "7,5,9\n");

  std::string text = format_cm_table(rows, OutputFormat::text);
  CHECK(text.find("c_3 = -1/3") != std::string::npos);
  CHECK(text.find("c_1 = 1\n") != std::string::npos);

  json parsed = json::parse(format_cm_table(rows, OutputFormat::json));
  REQUIRE(parsed.size() == 4);
  CHECK(parsed.at(2).at("m") == 5);
  CHECK(parsed.at(2).at("numerator") == "-13");
  CHECK(parsed.at(2).at("denominator") == "27");
}

TEST_CASE("diff_valuation serializes as inf for exact equality") {
  Ranges r;
  r.n_lo = 1;
  r.n_hi = 3;
  auto summary = run_batch("guo-zeng", r);
  json parsed = json::parse(format_reports(summary.reports, OutputFormat::json));
  for (const auto& entry : parsed) {
    CHECK(entry.at("diff_valuation") == json("inf"));
    CHECK(entry.at("modulus") == "0");
  }
}
