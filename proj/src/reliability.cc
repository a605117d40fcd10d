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

#include "agenteval/reliability.h"

#include <algorithm>
#include <cmath>

#include "agenteval/errors.h"
#include "agenteval/numerics.h"

namespace agenteval {
namespace {

constexpr double kLatencyPercentile = 95.0;
constexpr std::size_t kMinBuckets = 3;

std::optional<double> MeanQuality(std::span<const ToolCallRecord> calls) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& c : calls) {
    if (c.quality_signal) {
      sum += *c.quality_signal;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

}  // namespace

double PartialResponseRate(std::span<const ToolCallRecord> calls) {
  if (calls.empty()) {
    throw UndefinedStatistic("partial response rate of an empty call set");
  }
  const auto partial = std::count_if(calls.begin(), calls.end(), [](const auto& c) {
    return c.state == ToolCallState::kPartial;
  });
  return static_cast<double>(partial) / static_cast<double>(calls.size());
}

BucketSeries BucketWindow(std::span<const ToolCallRecord> calls,
                          int bucket_count) {
  BucketSeries out;
  if (calls.empty() || bucket_count < 1) return out;

  const auto [lo, hi] = std::minmax_element(
      calls.begin(), calls.end(),
      [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
  const Tick t_min = lo->timestamp;
  // Inclusive tick span.
  const auto span = static_cast<unsigned long long>(hi->timestamp - t_min) + 1;
  const auto buckets = static_cast<std::size_t>(bucket_count);

  std::vector<std::vector<double>> latency(buckets);
  std::vector<double> quality_sum(buckets, 0.0);
  std::vector<std::size_t> quality_n(buckets, 0);
  for (const auto& c : calls) {
    const auto offset = static_cast<unsigned long long>(c.timestamp - t_min);
    __extension__ using u128 = unsigned __int128;
    const auto b = static_cast<std::size_t>(
        static_cast<u128>(offset) * buckets / span);
    latency[b].push_back(c.latency_ms);
    if (c.quality_signal) {
      quality_sum[b] += *c.quality_signal;
      ++quality_n[b];
    }
  }
  for (std::size_t b = 0; b < buckets; ++b) {
    if (latency[b].empty() || quality_n[b] == 0) continue;
    out.p95_latency.push_back(
        numerics::NearestRankPercentile(latency[b], kLatencyPercentile));
    out.quality.push_back(quality_sum[b] / static_cast<double>(quality_n[b]));
  }
  return out;
}

double LatencyQualityCorrelation(std::span<const double> p95_latency,
                                 std::span<const double> quality,
                                 double baseline_quality) {
  if (p95_latency.size() != quality.size()) {
    throw UndefinedStatistic("latency and quality series differ in length");
  }
  if (p95_latency.size() < kMinBuckets) {
    throw UndefinedStatistic("latency-quality correlation needs at least 3 "
                             "buckets, got " +
                             std::to_string(p95_latency.size()));
  }
  std::vector<double> degradation(quality.size());
  for (std::size_t i = 0; i < quality.size(); ++i) {
    degradation[i] = baseline_quality - quality[i];
  }
  return numerics::Pearson(p95_latency, degradation);
}

double LatencyQualityCorrelation(std::span<const ToolCallRecord> calls,
                                 int bucket_count, double baseline_quality) {
  const auto series = BucketWindow(calls, bucket_count);
  return LatencyQualityCorrelation(series.p95_latency, series.quality,
                                   baseline_quality);
}

double ToolReliabilityScore(double prr, double rho_lq) {
  if (!std::isfinite(prr) || prr < 0.0 || prr > 1.0) {
    throw ValidationError("partial response rate outside [0, 1]");
  }
  if (!std::isfinite(rho_lq) || rho_lq < -1.0 || rho_lq > 1.0) {
    throw ValidationError("latency-quality correlation outside [-1, 1]");
  }
  return Clamp01(1.0 - prr * (1.0 + std::max(rho_lq, 0.0)));
}

bool DetectSilentDegradation(double prr, double external_accuracy_delta,
                             const EvalConfig& config) {
  return prr > config.theta_prr &&
         std::abs(external_accuracy_delta) <= config.acc_stability_band;
}

ReliabilityResult EvaluateReliabilityWindow(
    std::span<const ToolCallRecord> calls, double accuracy_delta,
    const EvalConfig& config) {
  ReliabilityResult out;
  out.prr = PartialResponseRate(calls);
  out.call_total = calls.size();
  for (ToolCallState s :
       {ToolCallState::kSuccess, ToolCallState::kPartial, ToolCallState::kFailed}) {
    out.call_counts[s] = 0;
  }
  for (const auto& c : calls) ++out.call_counts[c.state];
  out.external_accuracy = MeanQuality(calls);

  const auto series = BucketWindow(calls, config.tool_bucket_count);
  out.bucket_count = series.p95_latency.size();
  if (out.bucket_count >= kMinBuckets) {
    const double baseline = out.external_accuracy.value_or(0.0);
    out.rho_lq =
        LatencyQualityCorrelation(series.p95_latency, series.quality, baseline);
    out.rho_defined = true;
  }
  out.score = ToolReliabilityScore(out.prr, out.rho_lq);
  out.accuracy_delta = accuracy_delta;
  out.silent_degradation = DetectSilentDegradation(out.prr, accuracy_delta, config);
  return out;
}

std::vector<ReliabilityResult> EvaluateReliabilityWindows(
    std::span<const ToolCallRecord> calls, const EvalConfig& config) {
  std::vector<ReliabilityResult> out;
  const auto width = static_cast<std::size_t>(config.tool_window_size);
  std::optional<double> first_accuracy;
  std::optional<double> prior_accuracy;
  for (std::size_t start = 0; start < calls.size(); start += width) {
    const auto window = calls.subspan(start, std::min(width, calls.size() - start));
    const auto accuracy = MeanQuality(window);
    double delta = 0.0;
    if (accuracy) {
      const auto& reference =
          config.accuracy_delta_mode == AccuracyDeltaMode::kPriorWindow
              ? prior_accuracy
              : first_accuracy;
      if (reference) delta = *accuracy - *reference;
      if (!first_accuracy) first_accuracy = accuracy;
      prior_accuracy = accuracy;
    }
    out.push_back(EvaluateReliabilityWindow(window, delta, config));
  }
  return out;
}

}  // namespace agenteval
