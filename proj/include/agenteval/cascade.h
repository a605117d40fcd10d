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

// Cascade uncertainty: detects a low-confidence non-terminal step whose
// output is consumed downstream, and measures how confident the remainder
// of the pipeline was despite it (the coherence illusion).

#ifndef AGENTEVAL_CASCADE_H_
#define AGENTEVAL_CASCADE_H_

#include <optional>
#include <span>
#include <vector>

#include "agenteval/config.h"
#include "agenteval/types.h"

namespace agenteval {

struct CascadeResult {
  double mean_confidence = 0.0;
  // Mean confidence of the steps after the first failure; 0 with no failure.
  double cis = 0.0;
  // mean_confidence - lambda * cis, unclamped.
  double raw_score = 0.0;
  double score = 0.0;  // raw_score clamped to [0, 1]
  bool propagation_failure = false;
  // 1-based position within the pipeline of the first failing step.
  std::optional<std::size_t> failure_index;
  std::vector<double> step_confidences;
  // mean_confidence - ground truth, when the trace carries ground truth.
  std::optional<double> divergence;
  // cis - ground truth, same condition.
  std::optional<double> cis_divergence;
};

// Throws InsufficientTrace for fewer than two steps and ValidationError for
// a confidence outside [0, 1].
CascadeResult EvaluateCascade(std::span<const StepResult> steps,
                              const EvalConfig& config);

}  // namespace agenteval

#endif  // AGENTEVAL_CASCADE_H_
