#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cliff/cli.hpp"

namespace cliff {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cliff");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SimplifyPrintsThePseudoscalar) {
  const auto r = run({"simplify", "g(0)*g(1)*g(2)*g(3)"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "g5\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, SimplifyFormats) {
  EXPECT_EQ(run({"simplify", "g(0)*g5", "--format", "latex"}).out, "\\gamma^{[123]}\n");
  EXPECT_EQ(run({"simplify", "g(1)*g(1)", "--format", "json"}).out, "{\"scalar\":\"-1\"}\n");
  EXPECT_EQ(run({"simplify", "g(0)", "--format", "tex"}).code, kExitUsage);
}

TEST(Cli, MalformedExpressionIsPositioned) {
  const auto r = run({"simplify", "g(0)*"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("offset 5"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("\n       ^\n"), std::string::npos) << r.err;
}

TEST(Cli, VerifyAllExitsZero) {
  const auto r = run({"verify", "--all"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("21/21 identities passed"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS trivector-trivector [standard] 4096 cases"), std::string::npos);
}

TEST(Cli, VerifySingleIdentityAndRepresentation) {
  const auto r = run({"verify", "--identity", "four-blade", "--rep", "chiral"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "PASS four-blade [chiral] 256 cases\n1/1 identities passed, 256 cases\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "--identity", "no-such-thing"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--rep", "majorana"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--all", "--identity", "vector-vector"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"table", "--left-grade", "5"}).code, kExitUsage);
}

TEST(Cli, VerifyWritesJson) {
  const auto path = std::filesystem::temp_directory_path() / "cliff_cli_test_report.json";
  const auto r = run({"verify", "--identity", "vector-vector", "--json", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  ASSERT_EQ(doc.size(), 1U);
  EXPECT_EQ(doc[0]["identity"], "vector-vector");
  EXPECT_EQ(doc[0]["cases_checked"], 16);
  EXPECT_EQ(doc[0]["passed"], true);
  EXPECT_TRUE(doc[0]["counterexamples"].empty());
  std::filesystem::remove(path);
}

TEST(Cli, TableFiltersByGrade) {
  const auto r = run({"table", "--left-grade", "4", "--right-grade", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "g5 * g5 = -1\n");
  const auto j = run({"table", "--left-grade", "1", "--format", "json"});
  const auto rows = nlohmann::json::parse(j.out);
  EXPECT_EQ(rows.size(), 4U * 16U);
  EXPECT_EQ(rows[0]["left"], "g(0)");
  EXPECT_EQ(rows[0]["right"], "1");
  EXPECT_EQ(run({"table"}).out.find("g(0,1) * g(0,1) = 1\n") != std::string::npos, true);
}

} // namespace
} // namespace cliff
