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

#include "agenteval/simulator.h"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "agenteval/errors.h"
#include "agenteval/rng.h"

namespace agenteval::sim {
namespace {

// Stream ids keep scenarios and windows on disjoint random sequences.
constexpr std::uint64_t kFm3Stream = 0x300;
constexpr std::uint64_t kFm2Stream = 0x200;
constexpr std::uint64_t kFm5Stream = 0x500;

std::string CategoryName(int k) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "cat_%02d", k);
  return buf;
}

// Amplitude of the per-bucket quality wobble around the stage accuracy.
constexpr double kQualityWobble = 0.01;

// Returns the unit-norm centred version of `v`, or all zeros if v is flat.
std::vector<double> CentredUnit(std::vector<double> v) {
  const double mean =
      std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  double norm = 0.0;
  for (double& x : v) {
    x -= mean;
    norm += x * x;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double& x : v) x /= norm;
  }
  return v;
}

// Unit vector d with mean 0 and Pearson(latency, d) == rho: rho times the
// centred latency direction plus an orthogonal seeded noise direction.
std::vector<double> CorrelatedDirection(const std::vector<double>& latency,
                                        double rho, Rng& rng) {
  const auto x = CentredUnit(latency);
  std::vector<double> e(latency.size());
  for (double& v : e) v = rng.Uniform() - 0.5;
  e = CentredUnit(std::move(e));
  double dot = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) dot += e[i] * x[i];
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= dot * x[i];
  e = CentredUnit(std::move(e));

  const double ortho = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  std::vector<double> d(latency.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = rho * x[i] + ortho * e[i];
  return d;
}

struct Fm5Variant {
  std::string_view name;
  std::array<std::string_view, 3> ranking;
  std::array<double, 3> claimed;
};

constexpr std::string_view kVelocity = "transaction_velocity";
constexpr std::string_view kDeviceAge = "device_age_days";
constexpr std::string_view kGeography = "geography_risk_score";

constexpr std::array<Fm5Variant, 3> kFm5Table = {{
    {"causal", {kVelocity, kDeviceAge, kGeography}, {0.46, 0.30, 0.12}},
    {"proxy_first", {kGeography, kVelocity, kDeviceAge}, {0.44, 0.31, 0.17}},
    {"proxy_second", {kVelocity, kGeography, kDeviceAge}, {0.43, 0.29, 0.18}},
}};

// Half-width of the uniform noise on claimed weights. Smaller than half of
// the smallest gap between adjacent claimed weights, so rankings survive.
constexpr double kClaimNoise = 0.02;

}  // namespace

std::string_view ToString(Scenario scenario) {
  switch (scenario) {
    case Scenario::kFm1:
      return "fm1";
    case Scenario::kFm2:
      return "fm2";
    case Scenario::kFm3:
      return "fm3";
    case Scenario::kFm5:
      return "fm5";
  }
  return "fm3";
}

std::optional<Scenario> ScenarioFromString(std::string_view name) {
  for (Scenario s : {Scenario::kFm1, Scenario::kFm2, Scenario::kFm3, Scenario::kFm5}) {
    if (ToString(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<OutputEvent> GenerateFm3(std::uint64_t seed) {
  std::vector<OutputEvent> out;
  out.reserve(kFm3Windows * kFm3WindowSize);
  for (int w = 0; w < kFm3Windows; ++w) {
    Rng rng(seed, kFm3Stream + static_cast<std::uint64_t>(w));
    const int k = kFm3Categories[w];
    const int forced = w == kFm3Windows - 1 ? kFm3ForcedTail : 0;

    std::vector<double> weights(static_cast<std::size_t>(k), 1.0);
    if (kFm3TopWeight[w] > 0.0) {
      weights[0] = kFm3TopWeight[w];
      for (int i = 1; i < k; ++i) weights[i] = (1.0 - kFm3TopWeight[w]) / (k - 1);
    }

    // One output per category first so every category is present, then
    // weighted draws, shuffled together; the forced tail goes last.
    std::vector<int> picks;
    for (int c = 0; c < k; ++c) picks.push_back(c);
    while (static_cast<int>(picks.size()) < kFm3WindowSize - forced) {
      picks.push_back(static_cast<int>(rng.Categorical(weights)));
    }
    rng.Shuffle(picks);
    picks.insert(picks.end(), static_cast<std::size_t>(forced), 0);

    for (int i = 0; i < kFm3WindowSize; ++i) {
      OutputEvent e;
      e.category = CategoryName(picks[i]);
      e.session_id = "w" + std::to_string(w + 1) + "-s" + std::to_string(i / 10);
      e.timestamp = static_cast<Tick>(w) * kFm3WindowSize + i;
      e.quality_signal = kFm3Accuracy[w];
      out.push_back(std::move(e));
    }
  }
  return out;
}

double Fm2TargetCorrelation(int stage) {
  const double prr = static_cast<double>(kFm2PartialCalls.at(stage)) / kFm2CallsPerStage;
  return (1.0 - kFm2TargetScores.at(stage)) / prr - 1.0;
}

Fm2Trace GenerateFm2(std::uint64_t seed) {
  static constexpr std::array<std::string_view, 3> kTools = {
      "profile_service", "feature_store", "risk_api"};
  constexpr int kPerBucket = kFm2CallsPerStage / kFm2Buckets;

  Fm2Trace out;
  for (int stage = 0; stage < kFm2Stages; ++stage) {
    Rng rng(seed, kFm2Stream + static_cast<std::uint64_t>(stage));

    std::vector<ToolCallState> states(kFm2CallsPerStage, ToolCallState::kSuccess);
    std::vector<int> order(kFm2CallsPerStage);
    std::iota(order.begin(), order.end(), 0);
    rng.Shuffle(order);
    int pos = 0;
    for (int i = 0; i < kFm2PartialCalls[stage]; ++i) {
      states[order[pos++]] = ToolCallState::kPartial;
    }
    for (int i = 0; i < kFm2FailedCalls[stage]; ++i) {
      states[order[pos++]] = ToolCallState::kFailed;
    }

    // Bucket p95 latency drifts upward with the degradation stage.
    const double base_latency = 80.0 + 60.0 * stage;
    std::vector<double> bucket_latency(kFm2Buckets);
    for (double& l : bucket_latency) l = base_latency * (1.0 + 0.8 * rng.Uniform());
    const auto direction =
        CorrelatedDirection(bucket_latency, Fm2TargetCorrelation(stage), rng);

    for (int b = 0; b < kFm2Buckets; ++b) {
      const double quality = kFm2Accuracy[stage] - kQualityWobble * direction[b];
      // With 5 calls per bucket the nearest-rank p95 is the bucket maximum.
      const auto peak = static_cast<int>(rng.Below(kPerBucket));
      for (int k = 0; k < kPerBucket; ++k) {
        const int i = b * kPerBucket + k;
        ToolCallRecord c;
        c.tool_name = std::string(kTools[static_cast<std::size_t>(i) % kTools.size()]);
        c.state = states[i];
        c.latency_ms = k == peak ? bucket_latency[b]
                                 : bucket_latency[b] * (0.4 + 0.5 * rng.Uniform());
        c.timestamp = static_cast<Tick>(stage) * kFm2CallsPerStage + i;
        c.quality_signal = quality;
        out.calls.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<StepResult> GenerateFm1(std::string_view variant) {
  std::array<double, 5> conf{};
  if (variant == "healthy") {
    conf = {0.90, 0.91, 0.89, 0.92, 0.91};
  } else if (variant == "low1") {
    conf = {0.31, 0.87, 0.88, 0.90, 0.85};
  } else if (variant == "low2") {
    conf = {0.88, 0.28, 0.86, 0.91, 0.89};
  } else if (variant == "multi") {
    conf = {0.30, 0.88, 0.29, 0.90, 0.88};
  } else {
    throw ValidationError("unknown fm1 variant '" + std::string(variant) +
                          "' (expected healthy, low1, low2 or multi)");
  }
  std::vector<StepResult> steps;
  for (std::size_t i = 0; i < conf.size(); ++i) {
    StepResult s;
    s.step_index = static_cast<std::int64_t>(i + 1);
    s.step_name = std::string(kFm1StepNames[i]);
    s.confidence = conf[i];
    steps.push_back(std::move(s));
  }
  if (variant == "low1") steps.back().ground_truth_correctness = kFm1Low1GroundTruth;
  return steps;
}

Fm5Case GenerateFm5(std::string_view variant, std::uint64_t seed, bool noise) {
  const Fm5Variant* spec = nullptr;
  for (const auto& v : kFm5Table) {
    if (v.name == variant) spec = &v;
  }
  if (spec == nullptr) {
    throw ValidationError("unknown fm5 variant '" + std::string(variant) +
                          "' (expected causal, proxy_first or proxy_second)");
  }

  Fm5Case out;
  out.probe.weights = {{std::string(kVelocity), 0.55},
                       {std::string(kDeviceAge), 0.35},
                       {std::string(kGeography), 0.05}};
  out.probe.intercept = 0.0;

  auto& a = out.attribution;
  a.feature_values = {{std::string(kVelocity), 0.82},
                      {std::string(kDeviceAge), 0.60},
                      {std::string(kGeography), 0.72}};
  Rng rng(seed, kFm5Stream);
  for (std::size_t i = 0; i < spec->ranking.size(); ++i) {
    const std::string name(spec->ranking[i]);
    a.feature_names.push_back(name);
    double w = spec->claimed[i];
    if (noise) w += kClaimNoise * (2.0 * rng.Uniform() - 1.0);
    a.claimed_weights.push_back(w);
    a.baseline_values[name] = 0.0;
  }
  a.probe = out.probe;
  a.decision_value = LinearProbe(out.probe).Predict(a.feature_values);
  return out;
}

std::vector<TraceRecord> Generate(const ScenarioSpec& spec) {
  if (!spec.variant.empty() &&
      (spec.scenario == Scenario::kFm2 || spec.scenario == Scenario::kFm3)) {
    throw ValidationError(std::string(ToString(spec.scenario)) +
                          " takes no variant");
  }
  std::vector<TraceRecord> out;
  switch (spec.scenario) {
    case Scenario::kFm1:
      if (spec.variant.empty()) throw ValidationError("fm1 needs a variant");
      for (auto& s : GenerateFm1(spec.variant)) out.emplace_back(std::move(s));
      break;
    case Scenario::kFm2:
      for (auto& c : GenerateFm2(spec.seed).calls) out.emplace_back(std::move(c));
      break;
    case Scenario::kFm3:
      for (auto& e : GenerateFm3(spec.seed)) out.emplace_back(std::move(e));
      break;
    case Scenario::kFm5:
      if (spec.variant.empty()) throw ValidationError("fm5 needs a variant");
      out.emplace_back(GenerateFm5(spec.variant, spec.seed, spec.noise).attribution);
      break;
  }
  return out;
}

}  // namespace agenteval::sim
