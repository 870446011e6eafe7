#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace paircorr::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  return cells;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Theory, CdfGridEndsAtOne) {
  const auto r = run({"theory", "--n", "2", "--grid", "5", "--what", "cdf"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0].rfind("# meta ", 0), 0u);
  EXPECT_EQ(rows[1], "lambda,cdf");
  EXPECT_EQ(split(rows[2])[0], "0");
  EXPECT_EQ(split(rows[4])[0], "1");
  EXPECT_EQ(split(rows[6])[0], "2");
  EXPECT_DOUBLE_EQ(std::stod(split(rows[6])[1]), 1.0);
}

TEST(Theory, ThreeDimensionalPdfAtOne) {
  const auto r = run({"theory", "--n", "3", "--grid", "3", "--what", "pdf"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out)[3], "1,0.9375");
}

TEST(Theory, HugeDimensionSwitchesToLogDomain) {
  const auto r = run({"theory", "--n", "1001", "--grid", "101", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["meta"]["flags"]["eval_mode"], "log_domain");
  ASSERT_EQ(doc["rows"].size(), 101u);
  for (const auto& row : doc["rows"]) {
    ASSERT_TRUE(row["pdf"].is_number());
    ASSERT_TRUE(row["cdf"].is_number());
    EXPECT_TRUE(std::isfinite(row["pdf"].get<double>()));
  }
}

TEST(Pairs, ExactOneDimensionalExample) {
  const auto r = run({"pairs", "--n", "1", "--R", "1.5", "--kind", "integer", "--mode",
                      "exact", "--bins", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1], R"(# summary {"total_pairs":3,"mode":"exact"})");
  EXPECT_EQ(rows[2], "bin_left,bin_right,count,relative_frequency,theory_pdf_at_midpoint");
  EXPECT_EQ(split(rows[3])[2], "2");
  EXPECT_EQ(split(rows[4])[2], "1");
  const auto gof = nlohmann::json::parse(r.err);
  EXPECT_EQ(gof["gof"]["kind"], "ks");
}

TEST(Pairs, ByteIdenticalAcrossWorkers) {
  const std::vector<std::string> base{"pairs", "--n", "2", "--R", "80", "--samples",
                                      "200000", "--seed", "9"};
  auto with = [&](const char* w) {
    auto args = base;
    args.insert(args.end(), {"--workers", w});
    return run(args);
  };
  const auto one = with("1");
  const auto four = with("4");
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.err, four.err);
  EXPECT_EQ(one.out, with("1").out);
}

TEST(Pairs, JsonDocument) {
  const auto r = run({"pairs", "--n", "2", "--R", "30", "--samples", "50000",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["meta"]["command"], "pairs");
  EXPECT_EQ(doc["meta"]["seed"], 42);
  EXPECT_EQ(doc["histogram"]["total_pairs"], 50000);
  EXPECT_TRUE(doc["gof"]["pass"].get<bool>());
}

TEST(Pairs, FailingKsExitsOne) {
  const auto r = run({"pairs", "--n", "2", "--R", "30", "--samples", "50000",
                      "--threshold", "1e-9"});
  EXPECT_EQ(r.code, 1);
}

TEST(Pairs, OutFileWritesSideGofReport) {
  const auto dir = std::filesystem::temp_directory_path() / "paircorr_cli_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "fig.csv";
  const auto r = run({"pairs", "--n", "2", "--R", "40", "--samples", "20000", "--out",
                      csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(lines(slurp(csv))[2],
            "bin_left,bin_right,count,relative_frequency,theory_pdf_at_midpoint");
  const auto gof = nlohmann::json::parse(slurp(csv.string() + ".gof.json"));
  EXPECT_EQ(gof["gof"]["sample_size"], 20000);
  EXPECT_EQ(gof["meta"]["command"], "pairs");
  std::filesystem::remove_all(dir);
}

TEST(Pairs, EnvironmentOverridesPointCap) {
  ::setenv("PAIRCORR_BUDGET_POINTS", "10", 1);
  const auto capped = run({"pairs", "--n", "2", "--R", "3", "--mode", "exact"});
  ::unsetenv("PAIRCORR_BUDGET_POINTS");
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.err.find("sampled mode"), std::string::npos);
  EXPECT_EQ(run({"pairs", "--n", "2", "--R", "3", "--mode", "exact", "--threshold", "1"}).code,
            0);
}

TEST(Points, CountAndList) {
  auto r = run({"points", "--n", "2", "--R", "10", "--count-only"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out)[1], "317");
  r = run({"points", "--n", "2", "--R", "1", "--kind", "primitive"});
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1], "-1 0");
}

TEST(Mc, ByteIdenticalAcrossWorkersAndPasses) {
  const std::vector<std::string> base{"mc", "--what", "region", "--n", "2",
                                      "--lambda", "1", "--samples", "100000"};
  auto one = base, three = base;
  one.insert(one.end(), {"--workers", "1"});
  three.insert(three.end(), {"--workers", "3"});
  const auto a = run(one);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run(three).out);
}

TEST(Mc, JsonFields) {
  const auto r = run({"mc", "--what", "measure", "--n", "3", "--angle", "1.0471975511965976",
                      "--samples", "100000", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(doc["analytic_value"].get<double>(), 0.25);
  EXPECT_TRUE(doc.contains("sigma_distance"));
  EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(Checks, VolumeReport) {
  const auto r = run({"checks", "--which", "volume", "--n", "2", "--lambda", "1",
                      "--samples", "200000"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_LT(doc["checks"][0]["report"]["sigma_distance"].get<double>(), 3.0);
  EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(Checks, EquidistributionRadial) {
  const auto r = run({"checks", "--which", "equidist", "--n", "2", "--r", "200",
                      "--lambda", "2"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["checks"][0]["name"], "radial");
  EXPECT_NEAR(doc["checks"][0]["value"].get<double>(), 1.0, 0.01);
}

TEST(Checks, AllOnTrivialBudgetsAttemptsEverything) {
  const auto r = run({"checks", "--which", "all", "--R", "10", "--pair-R", "5",
                      "--samples", "10000", "--max-points", "10", "--max-enumeration",
                      "100"});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["pass"].get<bool>());
  ASSERT_EQ(doc["checks"].size(), 7u);
  int errors = 0;
  for (const auto& c : doc["checks"]) {
    EXPECT_TRUE(c.contains("pass"));
    if (c.contains("error")) ++errors;
  }
  EXPECT_GE(errors, 1);
}

TEST(Usage, ErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"theory"}).code, 2);
  EXPECT_EQ(run({"theory", "--n", "2", "--grid", "1"}).code, 2);
  EXPECT_EQ(run({"pairs", "--n", "2", "--R", "5", "--kind", "rational"}).code, 2);
  EXPECT_EQ(run({"pairs", "--n", "2", "--R", "5", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"mc", "--what", "region", "--n", "2", "--samples", "10"}).code, 2);
}

TEST(Usage, VersionAndHelp) {
  EXPECT_EQ(run({"--help"}).code, 0);
  const auto v = run({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(kVersion), std::string::npos);
}

}  // namespace
}  // namespace paircorr::cli
