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

#include "agenteval/explanation.h"

#include <cmath>

#include "agenteval/errors.h"
#include "agenteval/numerics.h"

namespace agenteval {
namespace {

double SafePredict(const ModelProbe& probe, const FeatureValues& input,
                   const std::string& context) {
  double value = 0.0;
  try {
    value = probe.Predict(input);
  } catch (const std::exception& e) {
    throw EvaluationError("probe failed " + context + ": " + e.what());
  }
  if (!std::isfinite(value)) {
    throw EvaluationError("probe returned a non-finite value " + context);
  }
  return value;
}

}  // namespace

LinearProbe::LinearProbe(LinearProbeSpec spec) : spec_(std::move(spec)) {}

double LinearProbe::Predict(const FeatureValues& features) const {
  double out = spec_.intercept;
  for (const auto& [name, weight] : spec_.weights) {
    auto it = features.find(name);
    if (it == features.end()) {
      throw EvaluationError("missing value for feature '" + name + "'");
    }
    out += weight * it->second;
  }
  return out;
}

std::vector<double> PerturbationImpacts(const ModelProbe& probe,
                                        const AttributionCase& attribution,
                                        const FeatureValues& baseline_values) {
  FeatureValues input = attribution.feature_values;
  const double original = SafePredict(probe, input, "on the unperturbed input");

  std::vector<double> impacts;
  impacts.reserve(attribution.feature_names.size());
  for (const auto& name : attribution.feature_names) {
    auto it = input.find(name);
    if (it == input.end()) {
      throw EvaluationError("no input value for attributed feature '" + name +
                            "'");
    }
    const double saved = it->second;
    auto base = baseline_values.find(name);
    it->second = base == baseline_values.end() ? 0.0 : base->second;
    const double perturbed =
        SafePredict(probe, input, "while perturbing '" + name + "'");
    it->second = saved;
    impacts.push_back(std::abs(original - perturbed));
  }
  return impacts;
}

double AttributionConsistency(std::span<const double> claimed,
                              std::span<const double> impacts) {
  if (claimed.size() != impacts.size()) {
    throw ValidationError("claimed weights and impacts differ in length");
  }
  if (claimed.size() < 2) {
    throw ValidationError("attribution consistency needs at least two features");
  }
  return (numerics::Spearman(claimed, impacts) + 1.0) / 2.0;
}

bool DecouplingFlag(double acs, double top_impact, const EvalConfig& config) {
  return acs < config.theta_acs && top_impact < config.delta_min;
}

ExplanationResult EvaluateExplanation(const ModelProbe& probe,
                                      const AttributionCase& attribution,
                                      const EvalConfig& config) {
  ExplanationResult out;
  out.probe_value =
      SafePredict(probe, attribution.feature_values, "on the unperturbed input");
  out.impacts = PerturbationImpacts(probe, attribution, attribution.baseline_values);
  out.acs = AttributionConsistency(attribution.claimed_weights, out.impacts);
  out.top_feature = attribution.feature_names.front();
  out.top_impact = out.impacts.front();
  out.decoupled = DecouplingFlag(out.acs, out.top_impact, config);
  return out;
}

}  // namespace agenteval
