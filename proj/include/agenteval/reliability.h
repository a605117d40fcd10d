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

// Tool reliability: partial responses that look like successes, and the
// coupling between tool latency and downstream decision quality.

#ifndef AGENTEVAL_RELIABILITY_H_
#define AGENTEVAL_RELIABILITY_H_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "agenteval/config.h"
#include "agenteval/types.h"

namespace agenteval {

// Fraction of calls in the PARTIAL state. FAILED calls count in the
// denominator only. Throws UndefinedStatistic for an empty window.
double PartialResponseRate(std::span<const ToolCallRecord> calls);

// Per-bucket series over a window split into equal-width tick buckets.
// Buckets without calls, or without any quality signal, are dropped.
struct BucketSeries {
  std::vector<double> p95_latency;
  std::vector<double> quality;
};

BucketSeries BucketWindow(std::span<const ToolCallRecord> calls,
                          int bucket_count);

// Pearson(p95 latency, baseline_quality - quality) over the bucket series.
// Throws UndefinedStatistic with fewer than three buckets.
double LatencyQualityCorrelation(std::span<const double> p95_latency,
                                 std::span<const double> quality,
                                 double baseline_quality);

double LatencyQualityCorrelation(std::span<const ToolCallRecord> calls,
                                 int bucket_count, double baseline_quality);

// clamp(1 - prr * (1 + max(rho, 0))). Throws ValidationError when prr is
// outside [0, 1] or rho outside [-1, 1].
double ToolReliabilityScore(double prr, double rho_lq);

// prr above theta_prr while the external accuracy moved by no more than the
// stability band: the tool is degrading and nobody downstream can see it.
bool DetectSilentDegradation(double prr, double external_accuracy_delta,
                             const EvalConfig& config);

struct ReliabilityResult {
  double prr = 0.0;
  double rho_lq = 0.0;
  // False when too few buckets carried data; rho_lq is then 0.
  bool rho_defined = false;
  std::size_t bucket_count = 0;
  double score = 0.0;
  bool silent_degradation = false;
  std::map<ToolCallState, std::size_t> call_counts;
  std::size_t call_total = 0;
  // Mean quality_signal over the window, when any call carries one.
  std::optional<double> external_accuracy;
  double accuracy_delta = 0.0;
};

// Scores one window. `accuracy_delta` is the external accuracy movement the
// silent-degradation check compares against the stability band.
ReliabilityResult EvaluateReliabilityWindow(
    std::span<const ToolCallRecord> calls, double accuracy_delta,
    const EvalConfig& config);

// Splits the calls, in arrival order, into consecutive windows of
// config.tool_window_size (the last one may be shorter) and scores each.
// Accuracy deltas follow config.accuracy_delta_mode.
std::vector<ReliabilityResult> EvaluateReliabilityWindows(
    std::span<const ToolCallRecord> calls, const EvalConfig& config);

}  // namespace agenteval

#endif  // AGENTEVAL_RELIABILITY_H_
