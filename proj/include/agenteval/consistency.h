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

#ifndef AGENTEVAL_CONSISTENCY_H_
#define AGENTEVAL_CONSISTENCY_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agenteval/config.h"
#include "agenteval/types.h"

namespace agenteval {

using Embedding = std::vector<double>;

// Abstract text embedding. Implementations are deterministic per text,
// return vectors of dimension() entries and never the zero vector for a
// non-empty text.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual Embedding Embed(std::string_view text) const = 0;

  virtual std::size_t dimension() const = 0;

  // True when Embed may be called concurrently.
  virtual bool thread_safe() const { return false; }
};

// Bag-of-words embedder: lower-cased alphanumeric tokens hashed (FNV-1a)
// into a fixed number of buckets, then L2-normalised. Identical texts
// always embed identically; texts sharing no tokens are orthogonal unless
// their tokens collide.
class HashingEmbedder : public EmbeddingProvider {
 public:
  static constexpr std::size_t kDefaultDimension = 256;

  explicit HashingEmbedder(std::size_t dimension = kDefaultDimension);

  Embedding Embed(std::string_view text) const override;
  std::size_t dimension() const override { return dimension_; }
  bool thread_safe() const override { return true; }

 private:
  std::size_t dimension_;
};

// Fraction of pairs whose two decisions are the same label. Throws
// UndefinedStatistic for an empty pair set.
double AgreementRate(std::span<const RequestPair> pairs);

struct ConsistencyResult {
  double agreement_rate = 0.0;
  double mean_similarity = 0.0;
  double score = 0.0;  // agreement_rate * mean_similarity, clamped to [0, 1]
  bool flagged = false;
  std::size_t pair_count = 0;
};

ConsistencyResult EvaluateConsistency(std::span<const RequestPair> pairs,
                                      const EmbeddingProvider& provider,
                                      const EvalConfig& config);

}  // namespace agenteval

#endif  // AGENTEVAL_CONSISTENCY_H_
