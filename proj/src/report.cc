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

#include "agenteval/report.h"

namespace agenteval {

Json MetricResultToJson(const MetricResult& r, const ReportFormat& format) {
  Json j;
  j["dimension"] = std::string(ToString(r.dimension));
  j["score"] = r.score;
  j["confidence"] = r.confidence;
  j["latency_ms"] = format.include_timings ? r.latency_ms : 0.0;
  j["threshold"] = r.threshold;
  j["passed"] = r.passed;
  j["metadata"] = r.metadata;
  return j;
}

Json ReportToJson(const EvalReport& report, const EvalConfig& config,
                  const ReportFormat& format) {
  Json j;
  j["overall_score"] = report.overall_score;
  j["passed"] = report.passed;
  j["total_latency_ms"] = format.include_timings ? report.total_latency_ms : 0.0;
  j["records_evaluated"] = report.records_evaluated;
  Json dims = Json::object();
  for (const auto& r : report.results) {
    dims[std::string(ToString(r.dimension))] = MetricResultToJson(r, format);
  }
  j["dimensions"] = std::move(dims);
  Json diagnostics = Json::array();
  for (const auto& d : report.diagnostics) {
    diagnostics.push_back({{"line", d.line}, {"message", d.message}});
  }
  j["diagnostics"] = std::move(diagnostics);
  j["config"] = ToJson(config);
  return j;
}

std::string SerializeReport(const EvalReport& report, const EvalConfig& config,
                            const ReportFormat& format) {
  return ReportToJson(report, config, format).dump(2) + "\n";
}

}  // namespace agenteval
