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

#include "agenteval/distribution.h"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "agenteval/errors.h"
#include "agenteval/numerics.h"

namespace agenteval {

DistributionWindow::DistributionWindow(std::size_t capacity)
    : capacity_(capacity) {
  if (capacity_ == 0) throw ValidationError("window capacity must be >= 1");
}

void DistributionWindow::Observe(const OutputEvent& event) {
  events_.push_back(event);
  ++counts_[event.category];
  if (event.quality_signal) ++quality_n_;
  if (events_.size() > capacity_) {
    const OutputEvent& oldest = events_.front();
    auto it = counts_.find(oldest.category);
    if (--it->second == 0) counts_.erase(it);
    if (oldest.quality_signal) --quality_n_;
    events_.pop_front();
  }
}

DistributionSnapshot DistributionWindow::Snapshot(const EvalConfig& config) const {
  if (events_.empty()) {
    throw UndefinedStatistic("distribution snapshot of an empty window");
  }
  DistributionSnapshot out;
  const std::size_t n = events_.size();
  out.window_fill = n;
  out.distinct_categories = counts_.size();

  std::vector<std::int64_t> counts;
  counts.reserve(counts_.size());
  for (const auto& [category, c] : counts_) counts.push_back(c);
  out.entropy = numerics::NormalizedEntropy(counts);
  out.diversity = static_cast<double>(counts_.size()) / static_cast<double>(n);

  const std::size_t top = std::min(n, static_cast<std::size_t>(config.k_top));
  std::unordered_map<std::string, std::int64_t> recent;
  std::int64_t max_count = 0;
  for (auto it = events_.end() - static_cast<std::ptrdiff_t>(top);
       it != events_.end(); ++it) {
    max_count = std::max(max_count, ++recent[it->category]);
  }
  out.repeat_rate = static_cast<double>(max_count) / static_cast<double>(top);

  out.score = Clamp01(config.alpha * out.entropy + config.beta * out.diversity +
                      config.gamma * (1.0 - out.repeat_rate));
  if (quality_n_ > 0) {
    double sum = 0.0;
    for (const auto& e : events_) {
      if (e.quality_signal) sum += *e.quality_signal;
    }
    out.mean_quality = sum / static_cast<double>(quality_n_);
  }
  out.last_timestamp = events_.back().timestamp;
  return out;
}

}  // namespace agenteval
