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


// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "agenteval/cli.h"
#include "agenteval/numerics.h"
#include "agenteval/simulator.h"
#include "agenteval/types.h"

namespace {

namespace fs = std::filesystem;
using agenteval::Json;
using Clock = std::chrono::steady_clock;

// Collects failed expectations for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void Near(double got, double want, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: got %.6f want %.6f (tol %.1e)", what.c_str(), got,
                  want, tol);
    Expect(std::abs(got - want) <= tol, buf);
  }
  const std::vector<std::string>& failures() const { return failures_; }
  int checks() const { return checks_; }

 private:
  std::vector<std::string> failures_;
  int checks_ = 0;
};

fs::path WorkDir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "agenteval_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string ReadFile(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

struct Run {
  int simulate_exit = -1;
  int evaluate_exit = -1;
  std::string report_text;
  Json report;
  double seconds = 0.0;
};

std::string SpecName(const agenteval::cli::SimulateArgs& s) {
  return s.scenario + (s.variant.empty() ? "" : "_" + s.variant) + "_" +
         std::to_string(s.seed) + (s.noise ? "" : "_noiseless");
}

// simulate -> trace file -> evaluate -> report, all in process.
Run SimulateAndEvaluate(agenteval::cli::SimulateArgs sim) {
  Run run;
  const auto trace = WorkDir() / (SpecName(sim) + ".jsonl");
  sim.output = trace;
  std::ostringstream out, err;
  const auto start = Clock::now();
  run.simulate_exit = agenteval::cli::CmdSimulate(sim, out, err);
  agenteval::cli::EvaluateArgs eval;
  eval.input = trace;
  run.evaluate_exit = agenteval::cli::CmdEvaluate(eval, out, err);
  run.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  run.report_text = out.str();
  run.report = Json::parse(run.report_text, nullptr, false);
  return run;
}

agenteval::cli::SimulateArgs Spec(std::string scenario, std::string variant = "",
                                  bool noise = true) {
  agenteval::cli::SimulateArgs s;
  s.scenario = std::move(scenario);
  s.variant = std::move(variant);
  s.seed = 42;
  s.noise = noise;
  return s;
}

int RunBinary(const std::string& args) {
  const std::string cmd = std::string(AGENTEVAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Copy of one dimension's report entry; missing keys read as null.
Json Dim(const Run& run, const char* name) {
  if (!run.report.is_object() || !run.report["dimensions"].contains(name)) return Json::object();
  return run.report["dimensions"][name];
}

double Num(const Json& j, const char* key) {
  return j.contains(key) && j[key].is_number() ? j[key].get<double>() : NAN;
}

// --- AC1 ---------------------------------------------------------------
void Ac1(Checker& c) {
  const auto run = SimulateAndEvaluate(Spec("fm3"));
  c.Expect(run.simulate_exit == 0, "simulate exit 0");
  auto dist = Dim(run, "distribution");
  auto windows = dist["metadata"]["windows"];
  c.Expect(windows.size() == 5, "five checkpoint windows");
  if (windows.size() != 5) return;
  const double diversity[] = {0.200, 0.200, 0.080, 0.080, 0.030};
  std::optional<int> first_below;
  for (int w = 0; w < 5; ++w) {
    const auto& win = windows[w];
    const std::string tag = "W" + std::to_string(w + 1);
    c.Expect(Num(win, "diversity") == diversity[w], tag + " diversity exactly " +
                                                          std::to_string(diversity[w]));
    const double acc = Num(win, "mean_quality");
    c.Expect(acc >= 0.86 - 1e-12 && acc <= 0.88 + 1e-12, tag + " accuracy in [0.86, 0.88]");
    if (!first_below && Num(win, "score") < 0.6) first_below = w + 1;
  }
  c.Expect(Num(windows[4], "repeat_rate") == 1.0, "W5 repeat_rate exactly 1.000");
  c.Expect(Num(windows[0], "entropy") >= 0.95 - 0.03, "W1 entropy >= 0.95 (-0.03)");
  c.Expect(Num(windows[1], "entropy") >= 0.95 - 0.03, "W2 entropy >= 0.95 (-0.03)");
  c.Expect(Num(windows[4], "entropy") <= 0.90 + 0.03, "W5 entropy <= 0.90 (+0.03)");
  c.Expect(first_below && *first_below >= 3 && *first_below <= 5,
           "score first falls below 0.6 in W3..W5");
  c.Expect(dist["passed"] == false && run.evaluate_exit == 1, "distribution gate fails, exit 1");
  c.Expect(run.seconds < 5.0, "runtime < 5 s");
}

// --- AC2 ---------------------------------------------------------------
void Ac2(Checker& c) {
  const auto run = SimulateAndEvaluate(Spec("fm2"));
  c.Expect(run.simulate_exit == 0, "simulate exit 0");
  auto windows = Dim(run, "tool")["metadata"]["windows"];
  c.Expect(windows.size() == 4, "four stages");
  if (windows.size() != 4) return;
  const double prr[] = {0.040, 0.220, 0.400, 0.580};
  const bool silent[] = {false, true, true, true};
  const double score[] = {0.940, 0.650, 0.320, 0.110};
  for (int s = 0; s < 4; ++s) {
    const auto& w = windows[s];
    const std::string tag = "stage " + std::to_string(s + 1);
    c.Expect(Num(w, "prr") == prr[s], tag + " PRR exactly " + std::to_string(prr[s]));
    c.Expect(w["silent_degradation"] == silent[s], tag + " silent_degradation flag");
    c.Near(Num(w, "score"), score[s], 0.05, tag + " score");
    const double rho = Num(w, "rho_lq");
    const double identity = agenteval::Clamp01(1.0 - Num(w, "prr") * (1.0 + std::max(rho, 0.0)));
    c.Near(Num(w, "score"), identity, 1e-12, tag + " score identity");
  }
  c.Expect(run.seconds < 5.0, "runtime < 5 s");
}

// --- AC3 ---------------------------------------------------------------
void Ac3(Checker& c) {
  const char* variants[] = {"healthy", "low1", "low2", "multi"};
  const double mean[] = {0.906, 0.762, 0.764, 0.650};
  const double cis[] = {0.000, 0.875, 0.887, 0.738};
  const bool flag[] = {false, true, true, true};
  // mean - lambda * CIS on the pinned confidences, lambda = 0.5.
  const double literal[] = {0.906, 0.3245, 0.764 - 0.5 * (2.66 / 3.0), 0.65 - 0.5 * 0.7375};
  for (int v = 0; v < 4; ++v) {
    const auto run = SimulateAndEvaluate(Spec("fm1", variants[v]));
    auto md = Dim(run, "cascade")["metadata"];
    const std::string tag = variants[v];
    c.Near(Num(md, "mean_confidence"), mean[v], 5e-4 + 1e-12, tag + " mean confidence (3 dp)");
    c.Near(Num(md, "cis"), cis[v], 5e-4 + 1e-12, tag + " CIS (3 dp)");
    c.Expect(md["propagation_failure"] == flag[v], tag + " propagation flag");
    c.Near(Num(md, "score"), literal[v], 5e-5, tag + " score (4 dp)");
    if (flag[v]) {
      c.Expect(std::abs(Num(md, "mean_confidence") - Num(md, "score") - 0.300) > 1e-3,
               tag + " mean - score != 0.300");
    }
  }
}

// --- AC4 ---------------------------------------------------------------
void Ac4(Checker& c) {
  const auto causal = SimulateAndEvaluate(Spec("fm5", "causal", false));
  const auto proxy_first = SimulateAndEvaluate(Spec("fm5", "proxy_first"));
  const auto proxy_second = SimulateAndEvaluate(Spec("fm5", "proxy_second"));
  auto mc = Dim(causal, "explanation")["metadata"];
  auto m1 = Dim(proxy_first, "explanation")["metadata"];
  auto m2 = Dim(proxy_second, "explanation")["metadata"];
  c.Near(Num(mc, "acs"), 1.0, 1e-12, "causal ACS");
  c.Expect(mc["decoupled"] == false, "causal not decoupled");
  c.Expect(Num(m1, "acs") < 0.5, "proxy_first ACS < 0.5");
  c.Expect(Num(m1, "top_impact") < 0.05, "proxy_first top_impact < 0.05");
  c.Expect(m1["decoupled"] == true, "proxy_first decoupled");
  c.Expect(m2["decoupled"] == false, "proxy_second not decoupled");
  const double d = Num(mc, "probe_value");
  c.Expect(Num(m1, "probe_value") == d && Num(m2, "probe_value") == d,
           "probe decision value identical across cases");
  c.Expect(Num(mc, "decision_value") == Num(m1, "decision_value") &&
               Num(m1, "decision_value") == Num(m2, "decision_value"),
           "recorded decision value identical across cases");
}

// --- AC5 ---------------------------------------------------------------
double MaxDrift(const std::vector<double>& series) {
  double drift = 0.0;
  for (double v : series) drift = std::max(drift, std::abs(v - series.front()));
  return drift;
}

// Share of steps after the first that clear tau_u.
double StepPassRate(Json md, double tau) {
  const auto conf = md["step_confidences"];
  if (!conf.is_array() || conf.size() < 2) return NAN;
  double pass = 0.0;
  for (std::size_t i = 1; i < conf.size(); ++i) pass += conf[i].get<double>() >= tau ? 1.0 : 0.0;
  return pass / static_cast<double>(conf.size() - 1);
}

void Ac5(Checker& c) {
  constexpr double kTolerance = 0.03 + 1e-9;
  {
    const auto healthy = SimulateAndEvaluate(Spec("fm1", "healthy"));
    const auto low1 = SimulateAndEvaluate(Spec("fm1", "low1"));
    const double base = StepPassRate(Dim(healthy, "cascade")["metadata"], 0.5);
    const double now = StepPassRate(Dim(low1, "cascade")["metadata"], 0.5);
    c.Expect(std::abs(now - base) <= kTolerance, "FM-1 step pass rate within 0.03 of baseline");
    c.Expect(Dim(low1, "cascade")["passed"] == false, "FM-1 cascade gate fails");
  }
  {
    const auto run = SimulateAndEvaluate(Spec("fm2"));
    std::vector<double> acc;
    auto windows = Dim(run, "tool")["metadata"]["windows"];
    for (const auto& w : windows) acc.push_back(Num(w, "external_accuracy"));
    c.Expect(!acc.empty() && MaxDrift(acc) <= kTolerance, "FM-2 accuracy within 0.03 of baseline");
    c.Expect(Dim(run, "tool")["passed"] == false, "FM-2 tool gate fails");
  }
  {
    const auto run = SimulateAndEvaluate(Spec("fm3"));
    std::vector<double> acc;
    auto windows = Dim(run, "distribution")["metadata"]["windows"];
    for (const auto& w : windows) acc.push_back(Num(w, "mean_quality"));
    c.Expect(!acc.empty() && MaxDrift(acc) <= kTolerance, "FM-3 accuracy within 0.03 of baseline");
    c.Expect(Dim(run, "distribution")["passed"] == false, "FM-3 distribution gate fails");
  }
  {
    const auto causal = SimulateAndEvaluate(Spec("fm5", "causal"));
    const auto proxy = SimulateAndEvaluate(Spec("fm5", "proxy_first"));
    const double base = Num(Dim(causal, "explanation")["metadata"], "probe_value");
    const double now = Num(Dim(proxy, "explanation")["metadata"], "probe_value");
    c.Expect(std::abs(now - base) <= kTolerance, "FM-5 decision within 0.03 of baseline");
    c.Expect(Dim(proxy, "explanation")["passed"] == false, "FM-5 explanation gate fails");
  }
}

// --- AC6 ---------------------------------------------------------------
std::vector<double> Series(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(gen);
  return v;
}

void Ac6(Checker& c) {
  using namespace agenteval::numerics;
  constexpr int kCases = 1000;
  std::mt19937_64 gen(2026);
  int bad_entropy = 0, bad_pearson = 0, bad_spearman = 0, bad_ranks = 0, bad_cosine = 0;
  for (int t = 0; t < kCases; ++t) {
    const std::size_t k = 2 + gen() % 30;
    std::vector<std::int64_t> counts(k);
    for (auto& x : counts) x = static_cast<std::int64_t>(gen() % 10);
    counts[0] += 1;
    const double h = NormalizedEntropy(counts);
    std::vector<std::int64_t> uniform(k, 3), point(k, 0);
    point[gen() % k] = 4;
    if (h < 0 || h > 1 || std::abs(NormalizedEntropy(uniform) - 1) > 1e-12 ||
        NormalizedEntropy(point) != 0)
      ++bad_entropy;

    const std::size_t n = 3 + gen() % 25;
    const auto x = Series(gen, n), y = Series(gen, n);
    auto ax = x, mx = x;
    for (double& v : ax) v = 2.5 * v - 7.0;
    for (double& v : mx) v = std::exp(v);
    const double r = Pearson(x, y), s = Spearman(x, y);
    if (r < -1 || r > 1 || std::abs(r - Pearson(y, x)) > 1e-12 || std::abs(Pearson(ax, y) - r) > 1e-9)
      ++bad_pearson;
    if (s < -1 || s > 1 || std::abs(s - Spearman(y, x)) > 1e-12 || std::abs(Spearman(mx, y) - s) > 1e-12)
      ++bad_spearman;
    if (std::abs(s - Pearson(AverageRanks(x), AverageRanks(y))) > 1e-12) ++bad_ranks;
    const double cs = CosineSimilarity(x, y);
    if (cs < -1 || cs > 1 || std::abs(cs - CosineSimilarity(y, x)) > 1e-12) ++bad_cosine;
  }
  c.Expect(bad_entropy == 0, "entropy bounds, uniform -> 1, point mass -> 0");
  c.Expect(bad_pearson == 0, "pearson symmetry, range, affine invariance");
  c.Expect(bad_spearman == 0, "spearman symmetry, range, monotone invariance");
  c.Expect(bad_ranks == 0, "spearman = pearson of ranks on tie-free data");
  c.Expect(bad_cosine == 0, "cosine bounds and symmetry");

  const std::vector<std::int64_t> e = {2, 1, 1};
  c.Near(NormalizedEntropy(e), 0.946394630357186, 1e-12, "entropy(2,1,1) oracle");
  const std::vector<double> a = {1, 2, 3, 4}, b = {2, 1, 4, 3};
  c.Near(Pearson(a, b), 0.6, 1e-12, "pearson oracle");
  const std::vector<double> w = {0.55, 0.35, 0.05}, d = {0.04, 0.45, 0.36};
  c.Near(Spearman(w, d), -0.5, 1e-12, "spearman oracle");
  const std::vector<double> u = {1, 2}, v = {2, 1};
  c.Near(CosineSimilarity(u, v), 0.8, 1e-12, "cosine oracle");
}

// --- AC7 ---------------------------------------------------------------
std::vector<agenteval::cli::SimulateArgs> AcceptanceSpecs() {
  return {Spec("fm3"),          Spec("fm2"),
          Spec("fm1", "healthy"), Spec("fm1", "low1"),
          Spec("fm1", "low2"),  Spec("fm1", "multi"),
          Spec("fm5", "causal", false), Spec("fm5", "causal"),
          Spec("fm5", "proxy_first"), Spec("fm5", "proxy_second")};
}

void Ac7(Checker& c) {
  for (const auto& spec : AcceptanceSpecs()) {
    const auto name = SpecName(spec);
    const auto a = SimulateAndEvaluate(spec);
    const auto b = SimulateAndEvaluate(spec);
    c.Expect(!a.report_text.empty() && a.report_text == b.report_text,
             name + " in-process reports identical");

    std::string sim = "simulate --scenario " + spec.scenario + " --seed " + std::to_string(spec.seed);
    if (!spec.variant.empty()) sim += " --variant " + spec.variant;
    if (!spec.noise) sim += " --noiseless";
    std::string reports[2];
    for (int i = 0; i < 2; ++i) {
      const auto trace = WorkDir() / (name + "_proc" + std::to_string(i) + ".jsonl");
      const auto report = WorkDir() / (name + "_proc" + std::to_string(i) + ".json");
      RunBinary(sim + " --output " + trace.string());
      RunBinary("evaluate --input " + trace.string() + " --output " + report.string());
      reports[i] = ReadFile(report);
    }
    c.Expect(!reports[0].empty() && reports[0] == reports[1], name + " reports identical across processes");
    c.Expect(reports[0] == a.report_text, name + " process report matches in-process report");
  }
}

// --- AC8 ---------------------------------------------------------------
void Ac8(Checker& c) {
  const auto healthy = WorkDir() / "gate_healthy.jsonl";
  const auto collapsing = WorkDir() / "gate_collapsing.jsonl";
  const auto malformed = WorkDir() / "gate_malformed.jsonl";
  RunBinary("simulate --scenario fm1 --variant healthy --output " + healthy.string());
  RunBinary("simulate --scenario fm3 --seed 42 --output " + collapsing.string());
  std::ofstream(malformed) << "{\"type\":\"step\",\"step_index\":1,\n not json at all\n";
  c.Expect(RunBinary("evaluate --input " + healthy.string()) == 0, "healthy trace exits 0");
  c.Expect(RunBinary("evaluate --input " + collapsing.string()) == 1, "collapsing trace exits 1");
  c.Expect(RunBinary("evaluate --input " + malformed.string()) == 2, "malformed file exits 2");
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Checker&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "FM-3 distribution collapse", Ac1},
      {"AC2", "FM-2 tool silent degradation", Ac2},
      {"AC3", "FM-1 cascade uncertainty", Ac3},
      {"AC4", "FM-5 explanation decoupling", Ac4},
      {"AC5", "detection matrix", Ac5},
      {"AC6", "numerics properties", Ac6},
      {"AC7", "determinism", Ac7},
      {"AC8", "gate exit codes", Ac8},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    try {
      cr.fn(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.failures().empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.title << " ("
              << c.checks() << " checks)\n";
    for (const auto& f : c.failures()) std::cout << "       - " << f << "\n";
    if (!ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  fs::remove_all(WorkDir());
  return failed == 0 ? 0 : 1;
}
