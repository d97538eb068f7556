#include "godeaux/report.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

namespace godeaux {
namespace {

TEST(Report, StatusIsStringEquality) {
  VerificationReport r("demo");
  r.add("a", "first", "ref", "1", "1");
  r.add("b", "second", "ref", "1/2", "2/4");
  EXPECT_TRUE(r.checks()[0].passed());
  EXPECT_FALSE(r.checks()[1].passed());
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_FALSE(r.all_passed());
  EXPECT_THROW(r.add("a", "dup", "ref", "x", "x"), std::invalid_argument);
}

TEST(Report, EmptyReportIsNotPassing) { EXPECT_FALSE(VerificationReport("x").all_passed()); }

TEST(Report, JsonSchema) {
  VerificationReport r("sc");
  r.set_config("max_degree", "12");
  r.add("relation-total", "total", "census", "54", "54");
  auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["scenario"], "sc");
  EXPECT_EQ(j["config"]["max_degree"], "12");
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  for (const char* key : {"id", "description", "paper_ref", "status", "expected", "actual"})
    EXPECT_TRUE(j["checks"][0].contains(key)) << key;
  EXPECT_TRUE(j["timing_ms"].is_null());
  EXPECT_EQ(j["version"], version());
  EXPECT_EQ(to_json(r), to_json(r));
}

TEST(Report, MergePrefixesIds) {
  VerificationReport all("all"), part("z5");
  part.add("q-invariant", "", "", "invariant", "invariant");
  part.note("hello");
  all.merge(part);
  EXPECT_EQ(all.checks()[0].id, "z5/q-invariant");
  EXPECT_EQ(all.notes()[0], "z5: hello");
}

TEST(Report, Table) {
  VerificationReport r("demo");
  r.add("ok", "", "", "1", "1");
  r.add("bad", "", "", "1", "2");
  auto t = to_table(r);
  EXPECT_NE(t.find("PASS ok"), std::string::npos);
  EXPECT_NE(t.find("FAIL bad"), std::string::npos);
  EXPECT_NE(t.find("actual 2"), std::string::npos);
  EXPECT_NE(t.find("1/2 checks passed"), std::string::npos);
}

}  // namespace
}  // namespace godeaux
