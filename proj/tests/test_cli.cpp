#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bohr/cli.hpp"
#include "bohr/serialize.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bohr");
  std::ostringstream out, err;
  const int code = bohr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliRadius, Examples) {
  auto r = run({"radius", "rpm", "--p", "2", "--m", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.789990624"), std::string::npos) << r.out;
  r = run({"radius", "harmonic-r0"});
  EXPECT_NE(r.out.find("0.655794203"), std::string::npos);
  r = run({"radius", "rho", "--exponent-p", "2"});
  EXPECT_NE(r.out.find("0.786151378"), std::string::npos);
  r = run({"radius", "rp-a0", "--exponent-p", "inf", "--a0", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 0.5\n"), std::string::npos) << r.out;
}

TEST(CliRadius, JsonRoundTrips) {
  const auto r = run({"--format", "json", "radius", "A-upper", "--exponent-p", "1"});
  ASSERT_EQ(r.code, 0);
  const auto back = bohr::radius_result_from_json(json::parse(r.out));
  EXPECT_NEAR(back.value, 0.67404, 5e-5);
}

TEST(CliRadius, UsageErrors) {
  EXPECT_EQ(run({"radius", "nowhere"}).code, bohr::cli::kExitUsage);
  EXPECT_EQ(run({"radius", "rpm", "--p", "2"}).code, bohr::cli::kExitUsage);
  EXPECT_EQ(run({"radius", "rpm", "--p", "2", "--m", "3"}).code, bohr::cli::kExitUsage);
  EXPECT_EQ(run({"radius", "A", "--exponent-p", "3"}).code, bohr::cli::kExitUsage);
  EXPECT_EQ(run({}).code, bohr::cli::kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "table"}).code, bohr::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliTable, RowsAndConstants) {
  const auto r = run({"--format", "csv", "table"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("p,m,solved,closed_form,extremal_a\n", 0), 0u);
  EXPECT_NE(r.out.find("1,0,0.333333333,0.333333333,"), std::string::npos);
  EXPECT_NE(r.out.find("2,1,0.789990624,0.789990624,"), std::string::npos);
  EXPECT_NE(r.out.find("0.674032028"), std::string::npos);
  EXPECT_NE(r.out.find("0.822555726"), std::string::npos);
  const auto j = json::parse(run({"--format", "json", "table"}).out);
  EXPECT_EQ(j.at("radii").size(), 27u);
  EXPECT_EQ(j.at("constants").at("A_1").get<double>(), 0.6);
}

TEST(CliExtremal, AnalyticCurveCrossesAtRadius) {
  const auto r = run({"--format", "json", "extremal", "analytic", "--p", "2", "--m", "1"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j.at("parameters").at("a").get<double>(), 0.717045, 1e-6);
  EXPECT_NEAR(j.at("radius").get<double>(), 0.789991, 1e-6);
  double last_below = 0.0, first_above = 1.0;
  for (const auto& pt : j.at("curve")) {
    const double x = pt[0].get<double>(), v = pt[1].get<double>();
    if (v <= 1.0) last_below = std::max(last_below, x);
    else first_above = std::min(first_above, x);
  }
  EXPECT_LE(last_below, 0.789991);
  EXPECT_GT(first_above, 0.789991);
  EXPECT_LT(first_above - last_below, 0.011);
}

TEST(CliExtremal, LogAndPairFamilies) {
  auto r = run({"extremal", "abu", "--mu", "1.5708"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("|a_1| = 0.63661977"), std::string::npos) << r.out;
  r = run({"--format", "json", "extremal", "pair", "--a", "10"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json::parse(r.out).at("radius").get<double>(), 0.049876, 1e-6);
  r = run({"--format", "csv", "extremal", "phi", "--p", "2"});
  EXPECT_EQ(r.out.rfind("r,majorant\n", 0), 0u);
}

TEST(CliHarmonic, BoundAndKernel) {
  auto r = run({"--format", "json", "harmonic", "bound", "--exponent-p", "1", "--r", "0.3333333333333333"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(json::parse(r.out).at("coeff_sum_bound").get<double>(), 0.5, 1e-12);
  r = run({"--format", "json", "harmonic", "kernel", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  const auto s = bohr::power_series_from_json(json::parse(r.out));
  EXPECT_NEAR(s[1].real(), 1.27324, 1e-5);
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(run({"verify", "lemmas", "--p-max", "8"}).code, 0);
  const auto bad = run({"--samples", "50", "verify", "analytic", "--p", "2", "--m", "1", "--r-override", "0.81"});
  EXPECT_EQ(bad.code, bohr::cli::kExitClaimFailure);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_NE(bad.out.find("counterexample"), std::string::npos);
  EXPECT_EQ(run({"verify", "lemmas", "--p-max", "40"}).code, bohr::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "sharpness", "--p", "2", "--m", "1", "--delta", "0.5"}).code, bohr::cli::kExitUsage);
}

TEST(CliVerify, JsonReportsRoundTrip) {
  const auto r = run({"--format", "json", "--samples", "40", "verify", "pairs"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j.at("summary").at("failed").get<int>(), 0);
  for (const auto& rep : j.at("reports")) {
    const auto back = bohr::verification_report_from_json(rep);
    EXPECT_EQ(bohr::to_json(back).at("claim_id"), rep.at("claim_id"));
  }
}

TEST(CliVerify, AllSuitesPass) {
  const auto r = run({"verify", "all", "--samples", "200", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(CliOutput, WritesFileAndIsDeterministic) {
  const auto path = std::filesystem::temp_directory_path() / "bohr_cli_output_test.csv";
  ASSERT_EQ(run({"--format", "csv", "--output", path.string(), "--samples", "30", "verify", "wiener"}).code, 0);
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  EXPECT_EQ(first.str().rfind("claim_id,passed,samples,worst_slack,tolerance,expect_violation\n", 0), 0u);
  const auto again = run({"--format", "csv", "--samples", "30", "verify", "wiener"});
  EXPECT_EQ(again.out, first.str());
  std::filesystem::remove(path);
}
