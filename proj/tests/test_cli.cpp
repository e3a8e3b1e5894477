#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = mayer::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, IdentitySmall) {
  const CliResult r = run({"identity", "--n", "2", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("agree"), std::string::npos);
}

TEST(Cli, IdentityFourJson) {
  const CliResult r = run({"identity", "--n", "4", "--seed", "42", "--tol", "1e-5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["agree"].get<bool>());
  EXPECT_EQ(j["routes"].size(), 4u);
  EXPECT_LT(j["worst"]["rel_diff"].get<double>(), 1e-5);
}

TEST(Cli, IdentityDeterministic) {
  const CliResult a = run({"identity", "--n", "6", "--seed", "9", "--format", "json"});
  const CliResult b = run({"identity", "--n", "6", "--seed", "9", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, IdentityImpossibleToleranceFails) {
  const CliResult r = run({"identity", "--n", "3", "--beta", "2.7", "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("disagree"), std::string::npos);
}

TEST(Cli, IdentitySizeGuard) {
  const CliResult r = run({"identity", "--n", "9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, IdentityMatrixFile) {
  const std::string path = testing::TempDir() + "matrix.json";
  std::ofstream(path) << R"({"n": 3, "entries": [[1, 2, 0.5], [2, 3, 1.0]], "hard_core_pairs": [[1, 3]]})";
  const CliResult r = run({"identity", "--matrix", path});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, CriterionLJ) {
  const CliResult r = run({"criterion", "--potential", "lj", "--method", "yuhjtman", "--interval", "0.6:0.7", "--tol",
                     "1e-4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["a"].get<double>(), 0.6397, 1e-4);
  EXPECT_TRUE(j["holds"].get<bool>());
}

TEST(Cli, CriterionFailsAtLowerEnd) {
  const CliResult r = run({"criterion", "--method", "yuhjtman", "--interval", "0.65:0.7"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("0.65"), std::string::npos);
}

TEST(Cli, CriterionRepulsive) {
  const CliResult r = run({"criterion", "--potential", R"({"kind":"inverse-power","C":1,"p":12})", "--interval",
                     "0.2:1.5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["a"].get<double>(), 1.5);
}

TEST(Cli, CriterionMethodMismatch) {
  const CliResult r = run({"criterion", "--potential", R"({"kind":"inverse-power","C":1,"p":12})", "--method",
                     "yuhjtman"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, BoundsSmallCut) {
  const CliResult r = run({"bounds", "--potential", "lj", "--a", "0.3637", "--b-lower", "8.61", "--b-upper", "8.61",
                     "--bbar-factor", "1.001", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["C_hat"]["total"]["value"].get<double>(), 12382);
  EXPECT_GT(j["radii"]["R_star"].get<double>(), j["radii"]["R_mps"].get<double>());
}

TEST(Cli, BoundsOptimalCutHatDominates) {
  const CliResult r = run({"bounds", "--a", "0.6397", "--b-upper", "8.61", "--bbar-factor", "1.001", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("bound,integral", 0), 0u);
}

TEST(Cli, BoundsSearchesForA) {
  const CliResult r = run({"bounds", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["a"].get<double>(), 0.6397, 1e-4);
}

TEST(Cli, BoundsNonBasuevCut) {
  const CliResult r = run({"bounds", "--a", "0.95"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("V(a)"), std::string::npos);
}

TEST(Cli, BoundsNeedsStabilityForAttractivePotentials) {
  const CliResult r = run({"bounds", "--potential", R"({"kind":"inverse-power","C":-1,"p":6})", "--a", "1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, BoundsZeroPotential) {
  const CliResult r = run({"bounds", "--potential", "zero", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("inf"), std::string::npos);
}

TEST(Cli, ReproduceJson) {
  const CliResult r = run({"reproduce", "--section", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  int flags = 0;
  for (const auto& row : j) {
    EXPECT_TRUE(row.contains("computed") && row.contains("paper") && row.contains("rel_diff"));
    EXPECT_NE(row["status"], "FAIL");
    if (row["status"] == "FLAG") ++flags;
  }
  EXPECT_EQ(flags, 3);
}

TEST(Cli, ReproduceTableAndOutFile) {
  const std::string path = testing::TempDir() + "repro.txt";
  const CliResult r = run({"reproduce", "--section", "5.2", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("h(8.61)"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"bounds", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"criterion", "--interval", "0.7"}).code, 2);
  EXPECT_EQ(run({"reproduce", "--section", "4"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
