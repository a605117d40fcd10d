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

#include "agenteval/cascade.h"

#include <cmath>

#include "agenteval/errors.h"
#include "agenteval/numerics.h"

namespace agenteval {

CascadeResult EvaluateCascade(std::span<const StepResult> steps,
                              const EvalConfig& config) {
  if (steps.size() < 2) {
    throw InsufficientTrace("cascade evaluation needs at least 2 steps, got " +
                            std::to_string(steps.size()));
  }
  CascadeResult out;
  out.step_confidences.reserve(steps.size());
  std::optional<double> ground_truth;
  for (const auto& s : steps) {
    if (!std::isfinite(s.confidence) || s.confidence < 0.0 ||
        s.confidence > 1.0) {
      throw ValidationError("step " + std::to_string(s.step_index) +
                            " confidence outside [0, 1]");
    }
    out.step_confidences.push_back(s.confidence);
    if (s.ground_truth_correctness) ground_truth = s.ground_truth_correctness;
  }
  out.mean_confidence = numerics::Mean(out.step_confidences);

  // The terminal step has nothing downstream, so it can never be the
  // failure point.
  const std::size_t n = steps.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (out.step_confidences[i] < config.tau_u) {
      out.failure_index = i + 1;
      break;
    }
  }

  if (out.failure_index) {
    out.propagation_failure = true;
    std::span<const double> downstream(out.step_confidences);
    out.cis = numerics::Mean(downstream.subspan(*out.failure_index));
    out.raw_score = out.mean_confidence - config.lambda * out.cis;
  } else {
    out.cis = 0.0;
    out.raw_score = out.mean_confidence;
  }
  out.score = Clamp01(out.raw_score);

  if (ground_truth) {
    out.divergence = out.mean_confidence - *ground_truth;
    out.cis_divergence = out.cis - *ground_truth;
  }
  return out;
}

}  // namespace agenteval
