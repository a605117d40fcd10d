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

// Explanation validity: checks claimed feature attributions against the
// measured effect of removing each feature from the decision function.

#ifndef AGENTEVAL_EXPLANATION_H_
#define AGENTEVAL_EXPLANATION_H_

#include <span>
#include <vector>

#include "agenteval/config.h"
#include "agenteval/types.h"

namespace agenteval {

// The decision function under audit. Implementations must be
// deterministic: equal inputs give equal outputs.
class ModelProbe {
 public:
  virtual ~ModelProbe() = default;
  virtual double Predict(const FeatureValues& features) const = 0;
};

class LinearProbe : public ModelProbe {
 public:
  explicit LinearProbe(LinearProbeSpec spec);

  // Throws EvaluationError if a weighted feature is missing from the input.
  double Predict(const FeatureValues& features) const override;

  const LinearProbeSpec& spec() const { return spec_; }

 private:
  LinearProbeSpec spec_;
};

// |predict(x) - predict(x with feature k set to its baseline)| for each
// feature of the case, in claimed-rank order. Features are perturbed one at
// a time from the unperturbed input. A feature absent from
// `baseline_values` is nullified to 0. Probe failures surface as
// EvaluationError naming the feature.
std::vector<double> PerturbationImpacts(const ModelProbe& probe,
                                        const AttributionCase& attribution,
                                        const FeatureValues& baseline_values);

// (spearman(claimed, impacts) + 1) / 2. Throws ValidationError when the
// lengths differ or fewer than two features are given.
double AttributionConsistency(std::span<const double> claimed,
                              std::span<const double> impacts);

bool DecouplingFlag(double acs, double top_impact, const EvalConfig& config);

struct ExplanationResult {
  double acs = 0.0;
  std::vector<double> impacts;
  std::string top_feature;
  double top_impact = 0.0;
  bool decoupled = false;
  double probe_value = 0.0;  // prediction on the unperturbed input
};

ExplanationResult EvaluateExplanation(const ModelProbe& probe,
                                      const AttributionCase& attribution,
                                      const EvalConfig& config);

}  // namespace agenteval

#endif  // AGENTEVAL_EXPLANATION_H_
