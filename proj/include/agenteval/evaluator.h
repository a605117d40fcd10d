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

// Routes trace records to the five metric dimensions, runs them, and folds
// the per-dimension results into a gated report.
//
// Routing:
//   step         -> cascade       (a step_index that does not increase
//                                  starts a new pipeline)
//   tool_call    -> tool          (consecutive windows of tool_window_size)
//   output       -> distribution  (sliding window of window_size, with a
//                                  checkpoint snapshot every window_size
//                                  events)
//   attribution  -> explanation
//   request_pair -> consistency
//
// A dimension that receives no records is absent from the report. Windowed
// dimensions report the state of their most recent window and keep every
// earlier window in metadata["windows"].

#ifndef AGENTEVAL_EVALUATOR_H_
#define AGENTEVAL_EVALUATOR_H_

#include <functional>
#include <istream>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "agenteval/config.h"
#include "agenteval/consistency.h"
#include "agenteval/explanation.h"
#include "agenteval/trace_io.h"
#include "agenteval/types.h"

namespace agenteval {

using ProbeFactory =
    std::function<std::unique_ptr<ModelProbe>(const AttributionCase&)>;

// Builds a LinearProbe from the probe embedded in the record. Throws
// EvaluationError when the record carries none.
std::unique_ptr<ModelProbe> EmbeddedProbeFactory(const AttributionCase& attribution);

struct EvaluatorOptions {
  std::shared_ptr<const EmbeddingProvider> embedder =
      std::make_shared<HashingEmbedder>();
  ProbeFactory probe_factory = EmbeddedProbeFactory;
  // Run dimensions as concurrent tasks. Results are identical either way.
  bool parallel = true;
};

// Weight-normalised mean of the present scores and the conjunction of their
// pass flags. With every present weight at zero the plain mean is used.
std::pair<double, bool> Aggregate(std::span<const MetricResult> results,
                                  const EvalConfig& config);

// Throws EvaluationError("no evaluable records") when `records` is empty,
// and propagates EvaluationError from probes and embedding providers.
EvalReport Evaluate(std::span<const NumberedRecord> records,
                    const EvalConfig& config,
                    const EvaluatorOptions& options = {});

EvalReport Evaluate(std::span<const TraceRecord> records,
                    const EvalConfig& config,
                    const EvaluatorOptions& options = {});

// Parses the stream and evaluates the records that parsed; per-line parse
// failures end up in the report's diagnostics.
EvalReport EvaluateStream(std::istream& in, const EvalConfig& config,
                          const EvaluatorOptions& options = {});

}  // namespace agenteval

#endif  // AGENTEVAL_EVALUATOR_H_
