#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "isocert/cli/cli.hpp"
#include "isocert/cli/reports.hpp"

namespace fs = std::filesystem;
using namespace isocert::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(::testing::TempDir()) / ("isocert_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, BadFlagIsUsageError) {
  const auto r = run_cli({"solve", "--S", "8", "--bogus"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("isocert"), std::string::npos);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"certify", "nope"}).code, kExitUsage);
}

TEST(Cli, InvalidValueIsUsageError) {
  const auto dir = scratch("badvalue");
  EXPECT_EQ(run_cli({"--out", dir.string(), "mollifier", "--delta", "-1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--out", dir.string(), "solve", "--S", "abc"}).code, kExitUsage);
}

TEST(Cli, VerifyIdentitiesAllPass) {
  const auto dir = scratch("identities");
  const auto r = run_cli({"--out", dir.string(), "--format", "json", "verify-identities", "--which", "all"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(slurp(dir / "verify-identities.json"));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 13u);
  for (const auto& rec : j) {
    EXPECT_TRUE(rec["pass"].get<bool>()) << rec["name"];
    EXPECT_EQ(rec["schema_version"], kSchemaVersion);
  }
  EXPECT_EQ(json::parse(r.out), j);
}

TEST(Cli, SolveReportsEvenlySpacedTuple) {
  const auto dir = scratch("solve");
  const auto r = run_cli({"--out", dir.string(), "solve", "--system", "I", "--S", "12", "--A3", "0"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(slurp(dir / "solve.json"));
  bool found = false;
  for (const auto& rec : j) {
    const auto& lam = rec["lambdas"];
    const double gap = lam[1][0].get<double>() - lam[0][0].get<double>();
    if (std::abs(gap - 1.5491933384829668) < 1e-9 &&
        std::abs(lam[3][0].get<double>() - lam[2][0].get<double>() - 1.5491933384829668) < 1e-9)
      found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Cli, DiscrepancyExitCode) {
  const auto dir = scratch("examples");
  const auto r = run_cli({"--out", dir.string(), "examples", "--check", "clifford-torus-1", "--theorem", "2"});
  EXPECT_EQ(r.code, kExitDocumentedDiscrepancy);
  const auto j = json::parse(slurp(dir / "examples.json"));
  bool flagged = false;
  for (const auto& rec : j)
    if (rec.value("verdict", "") == "documented-discrepancy") flagged = true;
  EXPECT_TRUE(flagged);
  EXPECT_EQ(run_cli({"--out", dir.string(), "examples", "--check", "clifford-torus-2", "--theorem", "2"}).code,
            kExitOk);
}

TEST(Cli, ExamplesList) {
  const auto r = run_cli({"--out", scratch("list").string(), "examples", "--list"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("isoparametric-g4"), std::string::npos);
}

TEST(Cli, MollifierCsv) {
  const auto dir = scratch("csv");
  const auto r = run_cli({"--out", dir.string(), "mollifier", "--delta", "0.1", "--samples", "100", "--emit", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir / "mollifier.csv").substr(0, 16), "t,h,dh,d2h,abs_t");
}

TEST(Cli, ConfigFileAndOverride) {
  const auto dir = scratch("config");
  const auto cfg = dir / "run.toml";
  std::ofstream(cfg) << "delta = 0.2\nsamples = 50\n";
  EXPECT_EQ(run_cli({"--out", dir.string(), "--config", cfg.string(), "mollifier"}).code, kExitOk);
  auto j = json::parse(slurp(dir / "mollifier.json"));
  EXPECT_DOUBLE_EQ(j[0]["parameters"]["delta"].get<double>(), 0.2);
  EXPECT_EQ(run_cli({"--out", dir.string(), "--config", cfg.string(), "mollifier", "--delta", "0.3"}).code, kExitOk);
  j = json::parse(slurp(dir / "mollifier.json"));
  EXPECT_DOUBLE_EQ(j[0]["parameters"]["delta"].get<double>(), 0.3);

  const auto bad = dir / "bad.toml";
  std::ofstream(bad) << "delta = 0.2\nwidth = 3\n";
  EXPECT_EQ(run_cli({"--out", dir.string(), "--config", bad.string(), "mollifier"}).code, kExitUsage);
}

TEST(Cli, CertifyReportsAreThreadIndependent) {
  const auto a = scratch("thr1"), b = scratch("thr3");
  ASSERT_EQ(run_cli({"--out", a.string(), "--threads", "1", "certify", "okumura"}).code, kExitOk);
  ASSERT_EQ(run_cli({"--out", b.string(), "--threads", "3", "certify", "okumura"}).code, kExitOk);
  EXPECT_EQ(slurp(a / "certify-okumura.json"), slurp(b / "certify-okumura.json"));
}

TEST(Cli, PipelineSummary) {
  const auto dir = scratch("pipeline");
  const auto r = run_cli({"--out", dir.string(), "pipeline", "--S", "8", "--A3", "1", "--eps0", "0.1", "--delta1",
                          "0.05", "--li-samples", "2000", "--k-samples", "10000", "--samples", "2000"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(slurp(dir / "pipeline.json"));
  ASSERT_FALSE(j.empty());
  EXPECT_EQ(j[0]["kind"], "pipeline-summary");
  EXPECT_TRUE(j[0]["pass"].get<bool>());
  EXPECT_EQ(j[0]["ingredients"].size(), 9u);
  for (const auto& in : j[0]["ingredients"]) EXPECT_EQ(in["verdict"], "passed") << in["name"];
}
