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

#ifndef AGENTEVAL_CONFIG_H_
#define AGENTEVAL_CONFIG_H_

#include <filesystem>
#include <map>
#include <string_view>

#include "agenteval/types.h"

namespace agenteval {

// How the accuracy delta used by the silent-degradation check is measured.
enum class AccuracyDeltaMode {
  kPriorWindow,  // window vs the immediately preceding window
  kBaseline,     // window vs the first window of the stream
};

// Every threshold and weight the metrics consume. Field names match the
// keys of the JSON config file.
struct EvalConfig {
  // Cascade uncertainty.
  double tau_u = 0.5;
  double lambda = 0.5;

  // Distribution health: score = alpha*H + beta*D + gamma*(1 - R).
  double alpha = 0.5;
  double beta = 0.25;
  double gamma = 0.25;
  int k_top = 20;
  int window_size = 100;

  // Explanation validity.
  double theta_acs = 0.5;
  double delta_min = 0.05;

  // Cross-surface consistency.
  double theta_ar = 0.9;

  // Tool reliability.
  double theta_prr = 0.20;
  double acc_stability_band = 0.02;
  int tool_window_size = 50;
  int tool_bucket_count = 10;
  AccuracyDeltaMode accuracy_delta_mode = AccuracyDeltaMode::kPriorWindow;

  std::map<Dimension, double> dimension_thresholds = DefaultThresholds();
  std::map<Dimension, double> aggregate_weights = DefaultWeights();

  double Threshold(Dimension d) const;
  double Weight(Dimension d) const;

  // Throws ConfigError naming the first violated constraint.
  void Validate() const;

  static std::map<Dimension, double> DefaultThresholds();
  static std::map<Dimension, double> DefaultWeights();
};

Json ToJson(const EvalConfig& config);

// Starts from defaults and overrides every key present in `doc`. Unknown
// keys are rejected. The result is validated.
EvalConfig ConfigFromJson(const Json& doc);

// Reads a JSON config file. A file holding only whitespace yields the
// defaults. Throws ConfigError on I/O, syntax or validation problems.
EvalConfig LoadConfig(const std::filesystem::path& path);

}  // namespace agenteval

#endif  // AGENTEVAL_CONFIG_H_
