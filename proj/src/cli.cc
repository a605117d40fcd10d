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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "agenteval/config.h"
#include "agenteval/errors.h"
#include "agenteval/evaluator.h"
#include "agenteval/report.h"
#include "agenteval/simulator.h"
#include "agenteval/trace_io.h"

namespace agenteval::cli {
namespace {

void Emit(const std::optional<std::filesystem::path>& path,
          const std::string& content, std::ostream& out) {
  if (path && path->string() != "-") {
    WriteFileAtomically(*path, content);
  } else {
    out << content;
    out.flush();
  }
}

}  // namespace

void WriteFileAtomically(const std::filesystem::path& path,
                         const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move report into place at " + path.string());
  }
}

int CmdEvaluate(const EvaluateArgs& args, std::ostream& out, std::ostream& err) {
  EvalConfig config;
  try {
    if (args.config) config = LoadConfig(*args.config);
  } catch (const ConfigError& e) {
    err << "agenteval: config error: " << e.what() << "\n";
    return kInputError;
  }

  EvalReport report;
  try {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (args.input.string() != "-") {
      file.open(args.input, std::ios::binary);
      if (!file) {
        err << "agenteval: cannot open input " << args.input.string() << "\n";
        return kInputError;
      }
      in = &file;
    }
    report = EvaluateStream(*in, config);
  } catch (const Error& e) {
    err << "agenteval: " << e.what() << "\n";
    return kInputError;
  }

  for (const auto& d : report.diagnostics) {
    err << "agenteval: " << d.message << "\n";
  }
  if (args.strict && !report.diagnostics.empty()) {
    err << "agenteval: " << report.diagnostics.size()
        << " diagnostic(s) with --strict\n";
    return kInputError;
  }

  try {
    Emit(args.output, SerializeReport(report, config, {args.timings}), out);
  } catch (const Error& e) {
    err << "agenteval: " << e.what() << "\n";
    return kInputError;
  }

  for (const auto& r : report.results) {
    if (!r.passed) {
      err << "agenteval: gate failed: " << ToString(r.dimension) << " score "
          << r.score << " < threshold " << r.threshold << "\n";
    }
  }
  return report.passed ? kPassed : kGateFailed;
}

int CmdSimulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  const auto scenario = sim::ScenarioFromString(args.scenario);
  if (!scenario) {
    err << "agenteval: unknown scenario '" << args.scenario
        << "' (expected fm1, fm2, fm3 or fm5)\n";
    return kInputError;
  }
  try {
    sim::ScenarioSpec spec;
    spec.scenario = *scenario;
    spec.seed = args.seed;
    spec.variant = args.variant;
    spec.noise = args.noise;
    std::ostringstream buf;
    WriteTrace(buf, sim::Generate(spec));
    Emit(args.output, buf.str(), out);
  } catch (const Error& e) {
    err << "agenteval: " << e.what() << "\n";
    return kInputError;
  }
  return kPassed;
}

int Main(int argc, char** argv) {
  CLI::App app{"Continuous evaluation and CI gating for agentic AI traces"};
  app.require_subcommand(1);

  EvaluateArgs eval_args;
  std::string input, config, output;
  auto* evaluate = app.add_subcommand("evaluate", "Score a trace and gate on the result");
  evaluate->add_option("--input", input, "Trace file (JSON lines), '-' for stdin")
      ->required();
  evaluate->add_option("--config", config, "JSON config file");
  evaluate->add_option("--output", output, "Report path (default: stdout)");
  evaluate->add_flag("--strict", eval_args.strict,
                     "Treat any unparseable line as an input error");
  evaluate->add_flag("--timings", eval_args.timings,
                     "Record wall-clock latencies in the report");

  SimulateArgs sim_args;
  std::string sim_output;
  bool noiseless = false;
  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic failure-mode trace");
  simulate->add_option("--scenario", sim_args.scenario, "fm1, fm2, fm3 or fm5")
      ->required();
  simulate->add_option("--variant", sim_args.variant,
                       "fm1: healthy|low1|low2|multi, fm5: causal|proxy_first|proxy_second");
  simulate->add_option("--seed", sim_args.seed, "Random seed")
      ->capture_default_str();
  simulate->add_option("--output", sim_output, "Trace path (default: stdout)");
  simulate->add_flag("--noiseless", noiseless, "fm5: no noise on claimed weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (evaluate->parsed()) {
    eval_args.input = input;
    if (!config.empty()) eval_args.config = config;
    if (!output.empty()) eval_args.output = output;
    return CmdEvaluate(eval_args, std::cout, std::cerr);
  }
  sim_args.noise = !noiseless;
  if (!sim_output.empty()) sim_args.output = sim_output;
  return CmdSimulate(sim_args, std::cout, std::cerr);
}

}  // namespace agenteval::cli
