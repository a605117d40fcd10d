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

#include "agenteval/evaluator.h"

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>

#include "agenteval/cascade.h"
#include "agenteval/distribution.h"
#include "agenteval/errors.h"
#include "agenteval/reliability.h"

namespace agenteval {
namespace {

using Clock = std::chrono::steady_clock;

struct Pipeline {
  std::size_t first_line = 0;
  std::vector<StepResult> steps;
};

struct LocatedCase {
  std::size_t line = 0;
  AttributionCase attribution;
};

struct Checkpoint {
  std::size_t events_seen = 0;
  DistributionSnapshot snapshot;
};

// Everything the dimensions need, split out of the record stream.
struct Routed {
  std::vector<Pipeline> pipelines;
  std::vector<ToolCallRecord> calls;
  std::size_t output_events = 0;
  std::vector<Checkpoint> checkpoints;
  std::optional<DistributionSnapshot> final_snapshot;
  std::vector<LocatedCase> cases;
  std::vector<RequestPair> pairs;
};

// A dimension's score, confidence and metadata before gating.
struct Scored {
  double score = 0.0;
  double confidence = 1.0;
  Json metadata = Json::object();
};

Json SnapshotJson(const DistributionSnapshot& s) {
  Json j;
  j["entropy"] = s.entropy;
  j["diversity"] = s.diversity;
  j["repeat_rate"] = s.repeat_rate;
  j["score"] = s.score;
  j["window_fill"] = s.window_fill;
  j["distinct_categories"] = s.distinct_categories;
  j["mean_quality"] = s.mean_quality ? Json(*s.mean_quality) : Json(nullptr);
  j["last_timestamp"] = s.last_timestamp;
  return j;
}

Routed Route(std::span<const NumberedRecord> records, const EvalConfig& config) {
  Routed out;
  const auto capacity = static_cast<std::size_t>(config.window_size);
  DistributionWindow window(capacity);
  for (const auto& [line, record] : records) {
    if (const auto* step = std::get_if<StepResult>(&record)) {
      if (out.pipelines.empty() ||
          step->step_index <= out.pipelines.back().steps.back().step_index) {
        out.pipelines.push_back({line, {}});
      }
      out.pipelines.back().steps.push_back(*step);
    } else if (const auto* call = std::get_if<ToolCallRecord>(&record)) {
      out.calls.push_back(*call);
    } else if (const auto* event = std::get_if<OutputEvent>(&record)) {
      window.Observe(*event);
      ++out.output_events;
      if (out.output_events % capacity == 0) {
        out.checkpoints.push_back({out.output_events, window.Snapshot(config)});
      }
    } else if (const auto* a = std::get_if<AttributionCase>(&record)) {
      out.cases.push_back({line, *a});
    } else if (const auto* p = std::get_if<RequestPair>(&record)) {
      out.pairs.push_back(*p);
    }
  }
  if (!window.empty()) out.final_snapshot = window.Snapshot(config);
  return out;
}

Json CascadeJson(const CascadeResult& r) {
  Json j;
  j["mean_confidence"] = r.mean_confidence;
  j["cis"] = r.cis;
  j["score"] = r.score;
  j["raw_score"] = r.raw_score;
  j["propagation_failure"] = r.propagation_failure;
  j["failure_index"] = r.failure_index ? Json(*r.failure_index) : Json(nullptr);
  j["step_confidences"] = r.step_confidences;
  if (r.divergence) {
    j["divergence"] = *r.divergence;
    j["cis_divergence"] = *r.cis_divergence;
  }
  return j;
}

std::optional<Scored> ScoreCascade(const Routed& routed, const EvalConfig& config,
                                   std::vector<Diagnostic>& diagnostics) {
  std::vector<CascadeResult> results;
  Json pipelines = Json::array();
  for (const auto& p : routed.pipelines) {
    try {
      results.push_back(EvaluateCascade(p.steps, config));
    } catch (const InsufficientTrace& e) {
      diagnostics.push_back({p.first_line, e.what()});
      continue;
    }
    pipelines.push_back(CascadeJson(results.back()));
  }
  if (results.empty()) return std::nullopt;

  Scored out;
  double sum = 0.0;
  std::size_t worst = 0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    sum += results[i].score;
    if (results[i].score < results[worst].score) worst = i;
    if (results[i].propagation_failure) ++failures;
  }
  out.score = sum / static_cast<double>(results.size());
  // Top-level keys describe the lowest-scoring pipeline.
  out.metadata = CascadeJson(results[worst]);
  out.metadata["worst_pipeline"] = worst;
  out.metadata["pipeline_count"] = results.size();
  out.metadata["propagation_failures"] = failures;
  out.metadata["pipelines"] = std::move(pipelines);
  return out;
}

Json ReliabilityJson(const ReliabilityResult& r) {
  Json j;
  j["prr"] = r.prr;
  j["rho_lq"] = r.rho_lq;
  j["rho_defined"] = r.rho_defined;
  j["bucket_count"] = r.bucket_count;
  j["score"] = r.score;
  j["silent_degradation"] = r.silent_degradation;
  Json counts = Json::object();
  for (const auto& [state, n] : r.call_counts) {
    counts[std::string(ToString(state))] = n;
  }
  j["call_counts"] = std::move(counts);
  j["call_total"] = r.call_total;
  j["external_accuracy"] =
      r.external_accuracy ? Json(*r.external_accuracy) : Json(nullptr);
  j["accuracy_delta"] = r.accuracy_delta;
  return j;
}

std::optional<Scored> ScoreTool(const Routed& routed, const EvalConfig& config) {
  if (routed.calls.empty()) return std::nullopt;
  const auto windows = EvaluateReliabilityWindows(routed.calls, config);
  const auto& latest = windows.back();
  Scored out;
  out.score = latest.score;
  out.confidence = std::min(1.0, static_cast<double>(latest.call_total) /
                                     static_cast<double>(config.tool_window_size));
  out.metadata = ReliabilityJson(latest);
  Json all = Json::array();
  std::optional<std::size_t> first_flag;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    all.push_back(ReliabilityJson(windows[i]));
    if (windows[i].silent_degradation && !first_flag) first_flag = i + 1;
  }
  out.metadata["window_count"] = windows.size();
  out.metadata["first_silent_degradation_window"] =
      first_flag ? Json(*first_flag) : Json(nullptr);
  out.metadata["windows"] = std::move(all);
  return out;
}

std::optional<Scored> ScoreDistribution(const Routed& routed,
                                        const EvalConfig& config) {
  if (!routed.final_snapshot) return std::nullopt;
  const auto& latest = *routed.final_snapshot;
  Scored out;
  out.score = latest.score;
  out.confidence = static_cast<double>(latest.window_fill) /
                   static_cast<double>(config.window_size);
  out.metadata = SnapshotJson(latest);
  Json windows = Json::array();
  for (const auto& c : routed.checkpoints) {
    Json w = SnapshotJson(c.snapshot);
    w["events_seen"] = c.events_seen;
    windows.push_back(std::move(w));
  }
  out.metadata["events_seen"] = routed.output_events;
  out.metadata["windows"] = std::move(windows);
  return out;
}

Json ExplanationJson(const ExplanationResult& r, const AttributionCase& a,
                     std::size_t line) {
  Json j;
  j["line"] = line;
  j["acs"] = r.acs;
  Json impacts = Json::object();
  for (std::size_t i = 0; i < r.impacts.size(); ++i) {
    impacts[a.feature_names[i]] = r.impacts[i];
  }
  j["impacts"] = std::move(impacts);
  j["top_feature"] = r.top_feature;
  j["top_impact"] = r.top_impact;
  j["decoupled"] = r.decoupled;
  j["decision_value"] = a.decision_value;
  j["probe_value"] = r.probe_value;
  return j;
}

std::optional<Scored> ScoreExplanation(const Routed& routed,
                                       const EvalConfig& config,
                                       const ProbeFactory& factory) {
  if (routed.cases.empty()) return std::nullopt;
  std::vector<ExplanationResult> results;
  for (const auto& c : routed.cases) {
    std::unique_ptr<ModelProbe> probe;
    try {
      probe = factory(c.attribution);
    } catch (const std::exception& e) {
      throw EvaluationError("line " + std::to_string(c.line) + ": " + e.what());
    }
    if (!probe) {
      throw EvaluationError("line " + std::to_string(c.line) +
                            ": no probe available for attribution case");
    }
    try {
      results.push_back(EvaluateExplanation(*probe, c.attribution, config));
    } catch (const Error& e) {
      throw EvaluationError("line " + std::to_string(c.line) + ": " + e.what());
    }
  }
  Scored out;
  double sum = 0.0;
  std::size_t worst = 0;
  std::size_t decoupled = 0;
  Json cases = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    sum += results[i].acs;
    if (results[i].acs < results[worst].acs) worst = i;
    if (results[i].decoupled) ++decoupled;
    cases.push_back(ExplanationJson(results[i], routed.cases[i].attribution,
                                    routed.cases[i].line));
  }
  out.score = sum / static_cast<double>(results.size());
  out.metadata = ExplanationJson(results[worst], routed.cases[worst].attribution,
                                 routed.cases[worst].line);
  out.metadata["acs"] = out.score;
  out.metadata["worst_acs"] = results[worst].acs;
  out.metadata["decoupled"] = decoupled > 0;
  out.metadata["decoupled_count"] = decoupled;
  out.metadata["case_count"] = results.size();
  out.metadata["cases"] = std::move(cases);
  return out;
}

std::optional<Scored> ScoreConsistency(const Routed& routed,
                                       const EvalConfig& config,
                                       const EmbeddingProvider& embedder) {
  if (routed.pairs.empty()) return std::nullopt;
  const auto r = EvaluateConsistency(routed.pairs, embedder, config);
  Scored out;
  out.score = r.score;
  out.metadata["agreement_rate"] = r.agreement_rate;
  out.metadata["mean_similarity"] = r.mean_similarity;
  out.metadata["pair_count"] = r.pair_count;
  out.metadata["flagged"] = r.flagged;
  return out;
}

struct Timed {
  std::optional<Scored> scored;
  double latency_ms = 0.0;
};

template <typename Fn>
Timed RunTimed(Fn&& fn) {
  const auto start = Clock::now();
  Timed t;
  t.scored = fn();
  t.latency_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return t;
}

}  // namespace

std::unique_ptr<ModelProbe> EmbeddedProbeFactory(const AttributionCase& attribution) {
  if (!attribution.probe) {
    throw EvaluationError("attribution record carries no probe");
  }
  return std::make_unique<LinearProbe>(*attribution.probe);
}

std::pair<double, bool> Aggregate(std::span<const MetricResult> results,
                                  const EvalConfig& config) {
  if (results.empty()) return {0.0, false};
  double weighted = 0.0, weights = 0.0, plain = 0.0;
  bool passed = true;
  for (const auto& r : results) {
    const double w = config.Weight(r.dimension);
    weighted += w * r.score;
    weights += w;
    plain += r.score;
    passed = passed && r.passed;
  }
  const double overall = weights > 0.0
                             ? weighted / weights
                             : plain / static_cast<double>(results.size());
  return {Clamp01(overall), passed};
}

EvalReport Evaluate(std::span<const NumberedRecord> records,
                    const EvalConfig& config, const EvaluatorOptions& options) {
  config.Validate();
  if (records.empty()) throw EvaluationError("no evaluable records");
  const auto start = Clock::now();

  EvalReport report;
  report.records_evaluated = records.size();
  // Window assembly happens here, single-threaded, before any dimension runs.
  const Routed routed = Route(records, config);

  std::vector<Diagnostic> cascade_diagnostics;
  std::array<std::function<std::optional<Scored>()>, kAllDimensions.size()> tasks = {
      [&] { return ScoreCascade(routed, config, cascade_diagnostics); },
      [&] { return ScoreTool(routed, config); },
      [&] { return ScoreDistribution(routed, config); },
      [&] { return ScoreExplanation(routed, config, options.probe_factory); },
      [&] {
        if (routed.pairs.empty()) return std::optional<Scored>();
        if (!options.embedder) throw EvaluationError("no embedding provider configured");
        return ScoreConsistency(routed, config, *options.embedder);
      },
  };

  std::array<Timed, kAllDimensions.size()> timed;
  if (options.parallel) {
    std::array<std::future<Timed>, kAllDimensions.size()> futures;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      futures[i] = std::async(std::launch::async,
                              [&task = tasks[i]] { return RunTimed(task); });
    }
    // Collect every future before rethrowing.
    std::exception_ptr failure;
    for (std::size_t i = 0; i < futures.size(); ++i) {
      try {
        timed[i] = futures[i].get();
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::size_t i = 0; i < tasks.size(); ++i) timed[i] = RunTimed(tasks[i]);
  }

  for (std::size_t i = 0; i < kAllDimensions.size(); ++i) {
    if (!timed[i].scored) continue;
    const Dimension d = kAllDimensions[i];
    MetricResult r;
    r.dimension = d;
    r.score = Clamp01(timed[i].scored->score);
    r.confidence = Clamp01(timed[i].scored->confidence);
    r.latency_ms = timed[i].latency_ms;
    r.threshold = config.Threshold(d);
    r.passed = r.score >= r.threshold;
    r.metadata = std::move(timed[i].scored->metadata);
    report.results.push_back(std::move(r));
  }
  report.diagnostics = std::move(cascade_diagnostics);
  if (report.results.empty()) {
    throw EvaluationError("no evaluable records");
  }
  std::tie(report.overall_score, report.passed) = Aggregate(report.results, config);
  report.total_latency_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

EvalReport Evaluate(std::span<const TraceRecord> records,
                    const EvalConfig& config, const EvaluatorOptions& options) {
  std::vector<NumberedRecord> numbered;
  numbered.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    numbered.push_back({i + 1, records[i]});
  }
  return Evaluate(numbered, config, options);
}

EvalReport EvaluateStream(std::istream& in, const EvalConfig& config,
                          const EvaluatorOptions& options) {
  auto parsed = ParseTraceStream(in);
  if (parsed.records.empty()) {
    std::string message = "no evaluable records";
    if (!parsed.diagnostics.empty()) {
      message += " (" + std::to_string(parsed.diagnostics.size()) +
                 " unparseable lines; first: " + parsed.diagnostics.front().message +
                 ")";
    }
    throw EvaluationError(message);
  }
  auto report = Evaluate(parsed.records, config, options);
  // Parse diagnostics first, in line order, then evaluation diagnostics.
  parsed.diagnostics.insert(parsed.diagnostics.end(), report.diagnostics.begin(),
                            report.diagnostics.end());
  report.diagnostics = std::move(parsed.diagnostics);
  return report;
}

}  // namespace agenteval
