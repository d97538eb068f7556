#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace godeaux::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("godeaux_cli_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, VerifyScJson) {
  auto dir = temp_dir("sc");
  auto path = (dir / "out.json").string();
  auto r = call({"verify", "--scenario", "sc", "--max-degree", "12", "--format", "json", "--report", path});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(slurp(path));
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["id"] == "relation-census") {
      found = true;
      EXPECT_EQ(c["expected"], "{6:6,7:12,8:18,9:12,10:6}");
      EXPECT_EQ(c["status"], "pass");
    }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyZ3AtOnes) {
  auto r = call({"verify", "--scenario", "z3", "--alpha", "1", "--beta", "1", "--gamma", "1", "--max-degree", "8"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"verify", "--scenario", "z9"}).code, 2);
  EXPECT_EQ(call({"verify", "--max-degree", "0"}).code, 2);
  EXPECT_EQ(call({"verify", "--scenario", "z3", "--alpha", "x"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  auto r = call({"hilbert", "--ring", "missing.ring"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing.ring"), std::string::npos);
}

TEST(Cli, HilbertPresets) {
  auto r = call({"hilbert", "--preset", "z3", "--max-degree", "6"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("   6     5     5     5"), std::string::npos) << r.out;
  auto inv = call({"hilbert", "--preset", "z5-invariants", "--max-degree", "4", "--format", "json"});
  ASSERT_EQ(inv.code, 0);
  auto j = nlohmann::json::parse(inv.out);
  std::vector<std::size_t> col;
  for (const auto& row : j["rows"]) col.push_back(row[0]);
  EXPECT_EQ(col, (std::vector<std::size_t>{1, 0, 2, 4, 7}));
}

TEST(Cli, HilbertRingFile) {
  auto dir = temp_dir("ring");
  std::ofstream(dir / "x.ring") << "torsion_order 2\nx 1 1\ny 1 0\n";
  std::ofstream(dir / "x.poly") << "x^2 - y^2\n";
  auto r = call({"hilbert", "--ring", (dir / "x.ring").string(), "--relations", (dir / "x.poly").string(),
                 "--max-degree", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][2], (std::vector<std::size_t>{1, 1}));  // y^2 ~ x^2, and x*y
}

TEST(Cli, ScBuildTruncated) {
  auto dir = temp_dir("sc8");
  auto r = call({"sc-build", "--max-degree", "8", "--out-dir", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(slurp(dir / "presentation.json"));
  EXPECT_EQ(j["warning"], "census may be truncated");
  std::string gens = slurp(dir / "generators.txt");
  EXPECT_EQ(std::count(gens.begin(), gens.end(), '\n'), 13);
  for (const auto& c : j["comparison"]) EXPECT_TRUE(c["in_computed_subring"].get<bool>());
  EXPECT_NE(r.out.find("listed generator 13 in computed subring: true"), std::string::npos);
}

TEST(Cli, ReportsAreByteIdentical) {
  auto a = call({"verify", "--scenario", "z5", "--format", "json"});
  auto b = call({"verify", "--scenario", "z5", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace godeaux::cli
