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

// Value types shared by the metric modules and the trace reader.

#ifndef AGENTEVAL_TYPES_H_
#define AGENTEVAL_TYPES_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace agenteval {

// Insertion-ordered object keys.
using Json = nlohmann::ordered_json;

// Trace-supplied logical clock. Never derived from wall time.
using Tick = std::int64_t;

// One step of a multi-step agent pipeline.
struct StepResult {
  std::int64_t step_index = 1;
  std::string step_name;
  double confidence = 0.0;
  // External correctness for the pipeline's final answer, when known.
  std::optional<double> ground_truth_correctness;

  bool operator==(const StepResult&) const = default;
};

enum class ToolCallState { kSuccess, kPartial, kFailed };

std::string_view ToString(ToolCallState state);
std::optional<ToolCallState> ToolCallStateFromString(std::string_view name);

struct ToolCallRecord {
  std::string tool_name;
  ToolCallState state = ToolCallState::kSuccess;
  double latency_ms = 0.0;
  Tick timestamp = 0;
  // Downstream decision quality observed alongside the call.
  std::optional<double> quality_signal;

  bool operator==(const ToolCallRecord&) const = default;
};

struct OutputEvent {
  std::string category;
  std::string session_id;
  Tick timestamp = 0;
  std::optional<double> quality_signal;

  bool operator==(const OutputEvent&) const = default;
};

using FeatureValues = std::map<std::string, double>;

// Linear decision function carried inline with an attribution record so a
// recorded trace can be replayed without access to the production model.
struct LinearProbeSpec {
  FeatureValues weights;
  double intercept = 0.0;

  bool operator==(const LinearProbeSpec&) const = default;
};

// Claimed feature attributions for one decision, highest weight first.
struct AttributionCase {
  std::vector<std::string> feature_names;
  std::vector<double> claimed_weights;
  double decision_value = 0.0;

  // Inputs needed to replay the decision under perturbation. A feature
  // missing from baseline_values is nullified to 0.
  FeatureValues feature_values;
  FeatureValues baseline_values;
  std::optional<LinearProbeSpec> probe;

  bool operator==(const AttributionCase&) const = default;
};

// Two semantically equivalent requests seen through different surfaces.
struct RequestPair {
  std::string text_a;
  std::string text_b;
  std::string decision_a;
  std::string decision_b;

  bool operator==(const RequestPair&) const = default;
};

using TraceRecord = std::variant<StepResult, ToolCallRecord, OutputEvent,
                                 AttributionCase, RequestPair>;

enum class Dimension { kCascade, kTool, kDistribution, kExplanation, kConsistency };

inline constexpr std::array<Dimension, 5> kAllDimensions = {
    Dimension::kCascade, Dimension::kTool, Dimension::kDistribution,
    Dimension::kExplanation, Dimension::kConsistency};

std::string_view ToString(Dimension dimension);
std::optional<Dimension> DimensionFromString(std::string_view name);

struct MetricResult {
  Dimension dimension = Dimension::kCascade;
  double score = 0.0;       // clamped to [0, 1]
  double confidence = 0.0;  // fraction of the evaluation window filled
  double latency_ms = 0.0;  // wall time spent computing this result
  double threshold = 0.0;
  bool passed = false;
  Json metadata = Json::object();
};

struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

struct EvalReport {
  // Present dimensions only, in kAllDimensions order.
  std::vector<MetricResult> results;
  double overall_score = 0.0;
  bool passed = false;
  double total_latency_ms = 0.0;
  std::vector<Diagnostic> diagnostics;
  std::size_t records_evaluated = 0;

  const MetricResult* Find(Dimension dimension) const {
    for (const auto& r : results) {
      if (r.dimension == dimension) return &r;
    }
    return nullptr;
  }
};

inline double Clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace agenteval

#endif  // AGENTEVAL_TYPES_H_
