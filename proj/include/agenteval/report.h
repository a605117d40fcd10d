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

#ifndef AGENTEVAL_REPORT_H_
#define AGENTEVAL_REPORT_H_

#include <string>

#include "agenteval/config.h"
#include "agenteval/types.h"

namespace agenteval {

// Wall-clock latencies are written as 0 unless requested.
struct ReportFormat {
  bool include_timings = false;
};

Json MetricResultToJson(const MetricResult& result, const ReportFormat& format = {});

// Self-describing report: resolved config, per-dimension results, overall
// verdict and diagnostics.
Json ReportToJson(const EvalReport& report, const EvalConfig& config,
                  const ReportFormat& format = {});

std::string SerializeReport(const EvalReport& report, const EvalConfig& config,
                            const ReportFormat& format = {});

}  // namespace agenteval

#endif  // AGENTEVAL_REPORT_H_
