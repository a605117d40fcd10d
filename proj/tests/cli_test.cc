/*
 * Copyright 2026 The agenteval Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "agenteval/cli.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "agenteval/types.h"
#include "gtest/gtest.h"

namespace agenteval::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("agenteval_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path Write(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p;
  }

  static std::string Read(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
  }

  // Runs the installed binary; returns its exit status.
  static int Run(const std::string& args) {
    const std::string cmd = std::string(AGENTEVAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

constexpr const char* kHealthy =
    "{\"type\":\"step\",\"step_index\":1,\"step_name\":\"a\",\"confidence\":0.9}\n"
    "{\"type\":\"step\",\"step_index\":2,\"step_name\":\"b\",\"confidence\":0.9}\n";
constexpr const char* kFailing =
    "{\"type\":\"step\",\"step_index\":1,\"step_name\":\"a\",\"confidence\":0.2}\n"
    "{\"type\":\"step\",\"step_index\":2,\"step_name\":\"b\",\"confidence\":0.9}\n";

TEST_F(CliTest, EvaluateExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(CmdEvaluate({Write("ok.jsonl", kHealthy), {}, {}, false, false}, out, err), kPassed);
  EXPECT_EQ(CmdEvaluate({Write("bad.jsonl", kFailing), {}, {}, false, false}, out, err), kGateFailed);
  EXPECT_NE(err.str().find("gate failed: cascade"), std::string::npos);
  EXPECT_EQ(CmdEvaluate({dir_ / "missing.jsonl", {}, {}, false, false}, out, err), kInputError);
  EXPECT_EQ(CmdEvaluate({Write("empty.jsonl", ""), {}, {}, false, false}, out, err), kInputError);
  const auto config = Write("c.json", "{\"alpha\":0.9}");
  EXPECT_EQ(CmdEvaluate({dir_ / "ok.jsonl", config, {}, false, false}, out, err), kInputError);
}

TEST_F(CliTest, StrictTurnsDiagnosticsIntoInputErrors) {
  const auto p = Write("mixed.jsonl", std::string(kHealthy) + "{broken\n");
  std::ostringstream out, err;
  EXPECT_EQ(CmdEvaluate({p, {}, {}, false, false}, out, err), kPassed);
  EXPECT_EQ(CmdEvaluate({p, {}, {}, true, false}, out, err), kInputError);
}

TEST_F(CliTest, ConfigThresholdChangesVerdict) {
  const auto trace = Write("ok.jsonl", kHealthy);
  const auto strict = Write("c.json", "{\"dimension_thresholds\":{\"cascade\":0.95}}");
  std::ostringstream out, err;
  EXPECT_EQ(CmdEvaluate({trace, strict, {}, false, false}, out, err), kGateFailed);
}

TEST_F(CliTest, ReportWrittenToFile) {
  const auto report = dir_ / "report.json";
  std::ostringstream out, err;
  ASSERT_EQ(CmdEvaluate({Write("ok.jsonl", kHealthy), {}, report, false, false}, out, err), kPassed);
  EXPECT_TRUE(out.str().empty());
  const auto j = Json::parse(Read(report));
  EXPECT_EQ(j["passed"], true);
  EXPECT_FALSE(fs::exists(dir_ / "report.json.tmp"));
}

TEST_F(CliTest, SimulateIsByteIdentical) {
  std::ostringstream a, b, err;
  ASSERT_EQ(CmdSimulate({"fm3", "", 42, true, {}}, a, err), kPassed);
  ASSERT_EQ(CmdSimulate({"fm3", "", 42, true, {}}, b, err), kPassed);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(CmdSimulate({"fm4", "", 42, true, {}}, a, err), kInputError);
  EXPECT_EQ(CmdSimulate({"fm1", "bogus", 42, true, {}}, a, err), kInputError);
}

TEST_F(CliTest, BinaryExitCodesAndDeterminism) {
  const auto trace = dir_ / "fm2.jsonl";
  ASSERT_EQ(Run("simulate --scenario fm2 --seed 42 --output " + trace.string()), 0);
  ASSERT_EQ(Run("simulate --scenario fm2 --seed 42 --output " + (dir_ / "again.jsonl").string()), 0);
  EXPECT_EQ(Read(trace), Read(dir_ / "again.jsonl"));
  EXPECT_EQ(Run("evaluate --input " + trace.string() + " --output " + (dir_ / "r1.json").string()), 1);
  EXPECT_EQ(Run("evaluate --input " + trace.string() + " --output " + (dir_ / "r2.json").string()), 1);
  EXPECT_EQ(Read(dir_ / "r1.json"), Read(dir_ / "r2.json"));
  EXPECT_EQ(Run("evaluate --input " + Write("ok.jsonl", kHealthy).string()), 0);
  EXPECT_EQ(Run("evaluate"), 2);
  EXPECT_EQ(Run("frobnicate"), 2);
  EXPECT_EQ(Run("evaluate --input " + (dir_ / "nope.jsonl").string()), 2);
}

}  // namespace
}  // namespace agenteval::cli
