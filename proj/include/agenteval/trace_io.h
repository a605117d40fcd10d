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

// Line-delimited JSON trace format. One record per line, discriminated by
// its "type" field:
//
//   {"type":"step","step_index":1,"step_name":"fetch","confidence":0.31}
//   {"type":"tool_call","tool_name":"profile","state":"PARTIAL",
//    "latency_ms":120.5,"timestamp":17,"quality_signal":0.86}
//   {"type":"output","category":"shoes","session_id":"s1","timestamp":3}
//   {"type":"attribution","feature_names":[...],"claimed_weights":[...],
//    "decision_value":0.7,"feature_values":{...},"baseline_values":{...},
//    "probe":{"weights":{...},"intercept":0.0}}
//   {"type":"request_pair","text_a":"..","text_b":"..","decision_a":"..",
//    "decision_b":".."}
//
// Unknown fields (e.g. "reasoning", "context") are ignored.

#ifndef AGENTEVAL_TRACE_IO_H_
#define AGENTEVAL_TRACE_IO_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "agenteval/types.h"

namespace agenteval {

// Parses one record. Throws ParseError for syntax, missing fields or wrong
// types, and RecordValidationError when a value breaks a type invariant.
// `line_number` is only used for diagnostics.
TraceRecord ParseTraceRecord(std::string_view line, std::size_t line_number = 0);

Json ToJson(const TraceRecord& record);

// Single-line serialization without a trailing newline.
std::string SerializeTraceRecord(const TraceRecord& record);

struct NumberedRecord {
  std::size_t line = 0;
  TraceRecord record;
};

struct ParsedTrace {
  std::vector<NumberedRecord> records;
  std::vector<Diagnostic> diagnostics;
};

// Reads every line, collecting records and per-line errors. Blank lines are
// skipped.
ParsedTrace ParseTraceStream(std::istream& in);

void WriteTrace(std::ostream& out, const std::vector<TraceRecord>& records);

// Validation shared with the in-memory constructors used by the simulator.
void ValidateRecord(const TraceRecord& record, std::size_t line_number = 0);

}  // namespace agenteval

#endif  // AGENTEVAL_TRACE_IO_H_
