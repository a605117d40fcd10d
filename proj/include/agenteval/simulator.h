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

// Seeded synthetic traces that reproduce four production failure modes:
//
//   fm1  cascade error: a 5-step pipeline with an injected low-confidence
//        step (deterministic, variants healthy/low1/low2/multi)
//   fm2  tool silent degradation: 4 stages x 50 tool calls with a rising
//        partial-response rate and a nearly flat accuracy signal
//   fm3  distribution collapse: 5 windows x 100 outputs narrowing from 20
//        categories to 3 while accuracy stays at 0.86-0.88
//   fm5  explanation decoupling: a linear risk model with claimed feature
//        rankings (variants causal/proxy_first/proxy_second)

#ifndef AGENTEVAL_SIMULATOR_H_
#define AGENTEVAL_SIMULATOR_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agenteval/explanation.h"
#include "agenteval/types.h"

namespace agenteval::sim {

enum class Scenario { kFm1, kFm2, kFm3, kFm5 };

std::string_view ToString(Scenario scenario);
std::optional<Scenario> ScenarioFromString(std::string_view name);

struct ScenarioSpec {
  Scenario scenario = Scenario::kFm3;
  std::uint64_t seed = 42;
  std::string variant;
  // fm5 only: perturb claimed weights with seeded noise.
  bool noise = true;
};

// --- fm3 ---------------------------------------------------------------
inline constexpr int kFm3Windows = 5;
inline constexpr int kFm3WindowSize = 100;
inline constexpr std::array<int, kFm3Windows> kFm3Categories = {20, 20, 8, 8, 3};
inline constexpr std::array<double, kFm3Windows> kFm3Accuracy = {0.88, 0.87, 0.87,
                                                                 0.86, 0.86};
// Share of the sampled (non-coverage) outputs that go to category 0.
// Zero means uniform.
inline constexpr std::array<double, kFm3Windows> kFm3TopWeight = {0.0, 0.0, 0.40,
                                                                  0.0, 0.60};
// Trailing outputs of the last window forced onto the top category.
inline constexpr int kFm3ForcedTail = 20;

std::vector<OutputEvent> GenerateFm3(std::uint64_t seed);

// --- fm2 ---------------------------------------------------------------
inline constexpr int kFm2Stages = 4;
inline constexpr int kFm2CallsPerStage = 50;
inline constexpr std::array<int, kFm2Stages> kFm2PartialCalls = {2, 11, 20, 29};
inline constexpr std::array<int, kFm2Stages> kFm2FailedCalls = {0, 0, 1, 2};
inline constexpr std::array<double, kFm2Stages> kFm2Accuracy = {0.87, 0.86, 0.85,
                                                                0.84};
// Stage reliability scores the generator is built to reproduce; the
// latency-quality correlation of each stage is solved from them.
inline constexpr std::array<double, kFm2Stages> kFm2TargetScores = {0.940, 0.650,
                                                                    0.320, 0.110};
inline constexpr int kFm2Buckets = 10;

// rho such that 1 - prr * (1 + rho) equals the stage's target score.
double Fm2TargetCorrelation(int stage);

struct Fm2Trace {
  std::vector<ToolCallRecord> calls;
  std::array<double, kFm2Stages> stage_accuracy = kFm2Accuracy;
};

Fm2Trace GenerateFm2(std::uint64_t seed);

// --- fm1 ---------------------------------------------------------------
inline constexpr std::array<std::string_view, 5> kFm1StepNames = {
    "entity_resolution", "profile_fetch", "risk_scoring", "rule_engine",
    "output_formatter"};
inline constexpr std::array<std::string_view, 4> kFm1Variants = {"healthy", "low1",
                                                                 "low2", "multi"};
// External correctness attached to the low1 pipeline.
inline constexpr double kFm1Low1GroundTruth = 0.41;

// Throws ValidationError for an unknown variant.
std::vector<StepResult> GenerateFm1(std::string_view variant);

// --- fm5 ---------------------------------------------------------------
inline constexpr std::array<std::string_view, 3> kFm5Variants = {
    "causal", "proxy_first", "proxy_second"};

struct Fm5Case {
  AttributionCase attribution;
  LinearProbeSpec probe;
};

// The probe is the same fixed linear model in every variant; only the
// claimed ranking differs. Throws ValidationError for an unknown variant.
Fm5Case GenerateFm5(std::string_view variant, std::uint64_t seed, bool noise = true);

// --- any ---------------------------------------------------------------
// Throws ValidationError for an unknown or missing variant.
std::vector<TraceRecord> Generate(const ScenarioSpec& spec);

}  // namespace agenteval::sim

#endif  // AGENTEVAL_SIMULATOR_H_
