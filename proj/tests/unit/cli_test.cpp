#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "builders.hpp"
#include "feqlab/cli/cli.hpp"
#include "feqlab/cli/json_io.hpp"
#include "feqlab/cli/manifest.hpp"

namespace feqlab::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_) {
      ::setenv(name_, old_->c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliRun, TableNumbersJson) {
  const CliRun r = run_cli({"table", "numbers", "--n-max", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "table");
  EXPECT_EQ(j["numbers"][3]["numerator"], nlohmann::json::array({1, 4, 1}));
  EXPECT_EQ(j["numbers"][3]["den_power"], 3);
}

TEST(CliRun, ConfigErrorsExitTwo) {
  EXPECT_EQ(run_cli({"table", "--n-max", "-1"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"table", "--format", "xml"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"padic", "--p", "4"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"padic", "--p", "3", "--q", "2"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"verify", "--q-samples", "-1"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"verify", "--w-max", "0"}).code, kExitConfig);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(run_cli({}).code, kExitConfig);
}

TEST(CliRun, HelpAndVersionExitZero) {
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  const CliRun v = run_cli({"--version"});
  EXPECT_EQ(v.code, kExitOk);
}

TEST(CliRun, ZeroThreadBudgetIsAConfigError) {
  ScopedEnv env("FEQ_LAB_THREADS", "0");
  EXPECT_THROW(thread_budget(), Error);
  EXPECT_EQ(run_cli({"table", "numbers", "--n-max", "1"}).code, kExitConfig);
}

TEST(CliRun, ThreadBudgetCapsConcurrency) {
  ScopedEnv env("FEQ_LAB_THREADS", "1");
  EXPECT_EQ(thread_budget(), 1u);
}

TEST(Padic, SmallRun) {
  PadicConfig c;
  c.q = BigRational(4);
  c.precision = 2;
  c.n_max = 1;
  const CommandResult r = cmd_padic(c, Format::kJson, 1);
  ASSERT_EQ(r.exit_code, kExitOk);
  const auto j = nlohmann::json::parse(r.report);
  EXPECT_EQ(j["records"][0]["N_stabilized"], 1);
  EXPECT_EQ(j["records"][1]["value"], 1);
  EXPECT_EQ(j["records"][1]["match"], true);
}

TEST(Padic, LevelCapOverflowIsAConfigError) {
  PadicConfig c;
  c.p = 101;
  c.precision = 8;
  EXPECT_THROW(cmd_padic(c, Format::kJson, 1), ConfigError);
}

TEST(Verify, DeterministicAcrossThreadCounts) {
  VerifyConfig c;
  c.n_max = 3;
  c.w_max = 3;
  c.order = 4;
  c.manifest = default_manifest_path();
  const CommandResult a = cmd_verify(c, Format::kJson, 1);
  const CommandResult b = cmd_verify(c, Format::kJson, 4);
  EXPECT_EQ(a.exit_code, kExitOk);
  EXPECT_EQ(a.report, b.report);
  const auto j = nlohmann::json::parse(a.report);
  EXPECT_EQ(j["summary"]["mismatches"], 0);
  EXPECT_EQ(j["summary"]["aggregates"]["THEOREM1"], "HOLDS_AT_Q1_ONLY");
  EXPECT_EQ(j["summary"]["aggregates"]["CORRECTED_SHIFT"], "HOLDS_ALL_Q");
}

TEST(Verify, CsvHasOneRowPerRecord) {
  VerifyConfig c;
  c.suite = Suite::kCorrected;
  c.n_max = 2;
  c.w_max = 3;
  c.manifest = default_manifest_path();
  const CommandResult csv = cmd_verify(c, Format::kCsv, 1);
  const auto j = nlohmann::json::parse(cmd_verify(c, Format::kJson, 1).report);
  std::istringstream in(csv.report);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "id,n,m,w,w1,w2,T,mode,q,status,expected,match,hypothesis_met,witness_order,witness");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, j["summary"]["records"].get<std::size_t>());
}

TEST(Verify, ContradictingManifestExitsOne) {
  std::ifstream src(default_manifest_path());
  std::stringstream text;
  text << src.rdbuf();
  std::string edited = text.str();
  const std::string from = R"("CORRECTED_MULT":     {"SYMBOLIC_Q": "HOLDS")";
  const auto at = edited.find(from);
  ASSERT_NE(at, std::string::npos);
  edited.replace(at, from.size(), R"("CORRECTED_MULT":     {"SYMBOLIC_Q": "FAILS")");
  VerifyConfig c;
  c.suite = Suite::kCorrected;
  c.n_max = 1;
  c.w_max = 3;
  c.manifest = write_temp("feqlab_bad_expected.json", edited);
  const CommandResult r = cmd_verify(c, Format::kJson, 1);
  EXPECT_EQ(r.exit_code, kExitMismatch);
  EXPECT_GT(nlohmann::json::parse(r.report)["summary"]["mismatches"].get<int>(), 0);
}

TEST(Manifest, RejectsMalformedFiles) {
  EXPECT_THROW(ExpectedStatus::load("/nonexistent/expected.json"), Error);
  EXPECT_THROW(ExpectedStatus::load(write_temp("feqlab_m1.json", "{")), Error);
  EXPECT_THROW(ExpectedStatus::load(write_temp("feqlab_m2.json", R"({"identities": {}})")), Error);
  VerifyConfig c;
  c.manifest = write_temp("feqlab_m3.json", "[]");
  EXPECT_THROW(cmd_verify(c, Format::kJson, 1), ConfigError);
}

TEST(Manifest, DefaultFileEncodesEqualWeights) {
  const ExpectedStatus m = ExpectedStatus::load(default_manifest_path());
  const Params equal{{"n", 1}, {"w1", 3}, {"w2", 3}};
  const Params distinct{{"n", 1}, {"w1", 3}, {"w2", 1}};
  EXPECT_TRUE(m.is_degenerate(IdentityId::kTheorem1, equal));
  EXPECT_FALSE(m.is_degenerate(IdentityId::kTheorem1, distinct));
  EXPECT_EQ(m.expected(IdentityId::kTheorem1, EvalMode::symbolic(), equal), Status::kHolds);
  EXPECT_EQ(m.expected(IdentityId::kTheorem1, EvalMode::symbolic(), distinct), Status::kFails);
  EXPECT_FALSE(m.expected(IdentityId::kTheorem1, EvalMode::at(BigRational(2)), distinct).has_value());
}

TEST(JsonIo, Encodings) {
  EXPECT_EQ(to_json(BigInt(-7)), -7);
  EXPECT_EQ(to_json(BigInt("123456789012345678901234567890")), "123456789012345678901234567890");
  EXPECT_EQ(to_json(BigRational::parse("-3/4")), "-3/4");
  EXPECT_EQ(to_json(testing::P({1, 0, 2})), Json::array({1, 0, 2}));
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

}  // namespace
}  // namespace feqlab::cli
