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

// Command-line entry points. Exit codes:
//   0  every present dimension passed its gate
//   1  at least one dimension failed its gate
//   2  input, config or usage error

#ifndef AGENTEVAL_CLI_H_
#define AGENTEVAL_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace agenteval::cli {

enum ExitCode : int { kPassed = 0, kGateFailed = 1, kInputError = 2 };

struct EvaluateArgs {
  std::filesystem::path input;  // "-" reads standard input
  std::optional<std::filesystem::path> config;
  std::optional<std::filesystem::path> output;  // unset writes to `out`
  bool strict = false;   // any unparseable line is an input error
  bool timings = false;  // include wall-clock latencies in the report
};

int CmdEvaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err);

struct SimulateArgs {
  std::string scenario;
  std::string variant;
  std::uint64_t seed = 42;
  bool noise = true;
  std::optional<std::filesystem::path> output;
};

int CmdSimulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomically(const std::filesystem::path& path,
                         const std::string& content);

// Full command line: `agenteval evaluate ...` or `agenteval simulate ...`.
int Main(int argc, char** argv);

}  // namespace agenteval::cli

#endif  // AGENTEVAL_CLI_H_
