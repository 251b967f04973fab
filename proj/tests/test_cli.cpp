#include <gtest/gtest.h>

#include <json.hpp>

#include "process.hpp"

using hss::fixture::quoted;
using hss::fixture::run_command;

namespace {

const std::string kCli = HSS_CLI_PATH;
const std::string kSamples = HSS_SAMPLES_DIR;

hss::fixture::ProcessResult cli(const std::string& args) { return run_command(quoted(kCli) + " " + args); }

std::string sample(const char* name) { return quoted(kSamples + "/" + name); }

}  // namespace

TEST(Cli, PageReport) {
  const auto r = cli("page --input " + sample("square.json") + " --word '' --position 1,1");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["word"], "");
  EXPECT_EQ(doc["dims"]["2"], 1);
}

TEST(Cli, FinalWordGivesLimit) {
  const auto page = cli("page --input " + sample("square.json") + " --word 12121^e2^e --position 4,-2");
  const auto limit = cli("limit --input " + sample("square.json"));
  ASSERT_EQ(page.exit_code, 0);
  ASSERT_EQ(limit.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(page.out)["dims"], nlohmann::json::parse(limit.out)["dims"]);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("page --input " + sample("square.json") + " --word 1e --position 0,0").exit_code, 2);
  EXPECT_EQ(cli("page --input " + sample("square.json") + " --word 1 --position 0").exit_code, 2);
  EXPECT_EQ(cli("page --input /nonexistent.json --word 1 --position 0,0").exit_code, 2);
  EXPECT_EQ(cli("plan --normal 4,6 --j1 1").exit_code, 2);
  EXPECT_EQ(cli("plan --normal 3,5").exit_code, 2);
  EXPECT_EQ(cli("draw-b --word 1 --n 3").exit_code, 2);
  EXPECT_EQ(cli("bogus").exit_code, 2);
  EXPECT_EQ(cli("--help").exit_code, 0);
}

TEST(Cli, AdmissibilityDiagnosticNamesCondition) {
  const auto r = run_command(quoted(kCli) + " page --input " + sample("square.json") +
                             " --word 1e --position 0,0 2>&1 >/dev/null", false);
  EXPECT_NE(r.out.find("condition 3"), std::string::npos);
}

TEST(Cli, PlanWorkedExamples) {
  auto r = cli("plan --normal 3,5 --j1 1");
  ASSERT_EQ(r.exit_code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["omega"], "12121^e2^e");
  EXPECT_EQ(doc["trace"], nlohmann::json({2, 1, 2, 1}));
  r = cli("plan --normal 3,5 --j1 2");
  doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["omega"], "12112^e1^e");
}

TEST(Cli, OtherSubcommands) {
  const auto sq = sample("square.json");
  EXPECT_EQ(cli("diff --input " + sq + " --word '' --position 0,0 --j 1").exit_code, 0);
  EXPECT_EQ(cli("saturate --input " + sq + " --word 1 --position 0,0 --j 2").exit_code, 0);
  const auto ext = cli("extend --input " + sq + " --word '' --position 0,0 --j 1");
  ASSERT_EQ(ext.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(ext.out)["word"], "1^e");
  EXPECT_EQ(cli("draw-b --word 123 --n 3 --format svg").exit_code, 0);
}

TEST(Cli, VerifyEnumeratedAndFault) {
  const auto ok = cli("verify --trials 0");
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_NE(ok.out.find("PASS word calculus lemmas"), std::string::npos);
  const auto bad = cli("verify --trials 1 --seed 3 --inject-fault");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("first_failure"), std::string::npos);
}
