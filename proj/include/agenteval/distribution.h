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

// Output distribution health over a sliding window of recent outputs:
// normalised entropy, diversity (distinct categories per output) and the
// repeat rate among the most recent K_top outputs.

#ifndef AGENTEVAL_DISTRIBUTION_H_
#define AGENTEVAL_DISTRIBUTION_H_

#include <deque>
#include <map>
#include <optional>
#include <string>

#include "agenteval/config.h"
#include "agenteval/types.h"

namespace agenteval {

struct DistributionSnapshot {
  double entropy = 0.0;      // H, normalised by log(distinct categories)
  double diversity = 0.0;    // D = distinct categories / window fill
  double repeat_rate = 0.0;  // R over the most recent min(n, k_top) outputs
  double score = 0.0;        // alpha*H + beta*D + gamma*(1-R)
  std::size_t window_fill = 0;
  std::size_t distinct_categories = 0;
  // Mean quality_signal of the windowed events that carry one.
  std::optional<double> mean_quality;
  Tick last_timestamp = 0;
};

// Most recent `capacity` outputs with incrementally maintained counts.
// Single writer; Snapshot() returns an independent value.
class DistributionWindow {
 public:
  explicit DistributionWindow(std::size_t capacity);

  // Appends the event, evicting the oldest one when over capacity.
  void Observe(const OutputEvent& event);

  // Throws UndefinedStatistic when the window is empty.
  DistributionSnapshot Snapshot(const EvalConfig& config) const;

  std::size_t size() const { return events_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return events_.empty(); }
  const std::map<std::string, std::int64_t>& category_counts() const {
    return counts_;
  }

 private:
  std::size_t capacity_;
  std::deque<OutputEvent> events_;
  std::map<std::string, std::int64_t> counts_;
  std::size_t quality_n_ = 0;
};

}  // namespace agenteval

#endif  // AGENTEVAL_DISTRIBUTION_H_
