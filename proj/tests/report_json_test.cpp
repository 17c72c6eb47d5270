#include <gtest/gtest.h>

#include <json.hpp>

#include "rampi/report_json.hpp"

namespace rampi {
namespace {

using nlohmann::json;

const std::vector<std::string> kReportKeys{"spec",     "method",    "terms_used",    "working_precision_bits",
                                           "lhs",      "rhs",       "abs_error",     "rel_error",
                                           "digits_agreed", "tail_bound", "pass", "elapsed_ms"};

void expectReportSchema(const json& j) {
  ASSERT_TRUE(j.is_object());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys.size(), kReportKeys.size());
  for (const auto& k : kReportKeys) EXPECT_TRUE(j.contains(k)) << k;
  const json& spec = j["spec"];
  EXPECT_TRUE(spec["alpha"].is_string());
  EXPECT_TRUE(spec["a"].is_number_integer());
  EXPECT_TRUE(spec["b"].is_number_integer());
  EXPECT_TRUE(spec["c"].is_number_integer());
  EXPECT_TRUE(j["method"].is_string());
  EXPECT_TRUE(j["terms_used"].is_number_integer());
  EXPECT_TRUE(j["working_precision_bits"].is_number_integer());
  for (const char* k : {"lhs", "rhs", "abs_error", "rel_error"}) EXPECT_TRUE(j[k].is_string()) << k;
  EXPECT_TRUE(j["digits_agreed"].is_number_integer());
  EXPECT_TRUE(j["tail_bound"].is_null() || j["tail_bound"].is_string());
  EXPECT_TRUE(j["pass"].is_boolean());
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
}

TEST(ReportJson, AcceleratedSchema) {
  const VerificationReport r = verifySpec(buildSpec({1, 2}, 0, 0, 1), 20);
  const json j = json::parse(toJson(r));
  expectReportSchema(j);
  EXPECT_EQ(j["spec"]["alpha"], "1/2");
  EXPECT_EQ(j["method"], "levin-u");
  EXPECT_TRUE(j["tail_bound"].is_null());
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["lhs"].get<std::string>().substr(0, 22), "1.27323954473516268615");
}

TEST(ReportJson, RigorousSchema) {
  VerifyOptions o;
  o.mode = SumMode::rigorous;
  const json j = json::parse(toJson(verifySpec(buildSpec({1, 3}, -1, -1, 0), 4, o)));
  expectReportSchema(j);
  EXPECT_EQ(j["method"], "direct-exact");
  EXPECT_TRUE(j["tail_bound"].is_string());
}

TEST(ReportJson, ArrayOfReports) {
  std::vector<VerificationReport> reports{verifySpec(buildSpec({1, 2}, 0, 0, 1), 10),
                                          verifySpec(buildSpec({1, 2}, 0, 0, 2), 10)};
  const json j = json::parse(toJson(std::span<const VerificationReport>(reports)));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  for (const auto& r : j) expectReportSchema(r);
  EXPECT_EQ(j[1]["spec"]["c"], 2);
}

TEST(CatalogJson, Entries) {
  const json j = json::parse(catalogToJson());
  ASSERT_EQ(j["entries"].size(), 10u);
  ASSERT_EQ(j["families"].size(), 8u);
  const json& quarter = j["entries"][6];
  EXPECT_EQ(quarter["id"], "ex-a14-k0");
  EXPECT_EQ(quarter["rhs_display"], "8√2/(3π)");
  EXPECT_EQ(quarter["presentation"]["scale"], "3/16");
  EXPECT_EQ(quarter["presentation"]["head"], "1");
  EXPECT_EQ(quarter["sine"]["kind"], "simple-surd");
  EXPECT_TRUE(j["entries"][0]["presentation"].is_null());
}

}  // namespace
}  // namespace rampi
