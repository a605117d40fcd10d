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

#include "agenteval/consistency.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>

#include "agenteval/errors.h"
#include "agenteval/numerics.h"

namespace agenteval {
namespace {

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Embedding EmbedChecked(const EmbeddingProvider& provider, std::string_view text,
                       std::size_t pair_index, const char* side) {
  Embedding e;
  const auto where = "pair " + std::to_string(pair_index) + " (" + side + ")";
  try {
    e = provider.Embed(text);
  } catch (const std::exception& ex) {
    throw EvaluationError("embedding provider failed on " + where + ": " +
                          ex.what());
  }
  if (e.size() != provider.dimension()) {
    throw EvaluationError("embedding provider returned " +
                          std::to_string(e.size()) + " values for " + where +
                          ", expected " + std::to_string(provider.dimension()));
  }
  return e;
}

}  // namespace

HashingEmbedder::HashingEmbedder(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) throw ValidationError("embedding dimension must be >= 1");
}

Embedding HashingEmbedder::Embed(std::string_view text) const {
  Embedding v(dimension_, 0.0);
  auto tokens = Tokenize(text);
  // Punctuation-only text hashes as a single token.
  if (tokens.empty() && !text.empty()) tokens.emplace_back(text);
  for (const auto& t : tokens) v[Fnv1a(t) % dimension_] += 1.0;

  double norm = 0.0;
  for (double x : v) norm += x * x;
  if (norm > 0.0) {
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

double AgreementRate(std::span<const RequestPair> pairs) {
  if (pairs.empty()) throw UndefinedStatistic("agreement rate of an empty pair set");
  const auto agree = std::count_if(pairs.begin(), pairs.end(), [](const auto& p) {
    return p.decision_a == p.decision_b;
  });
  return static_cast<double>(agree) / static_cast<double>(pairs.size());
}

ConsistencyResult EvaluateConsistency(std::span<const RequestPair> pairs,
                                      const EmbeddingProvider& provider,
                                      const EvalConfig& config) {
  ConsistencyResult out;
  out.agreement_rate = AgreementRate(pairs);
  out.pair_count = pairs.size();

  std::vector<double> similarities;
  similarities.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto a = EmbedChecked(provider, pairs[i].text_a, i, "text_a");
    const auto b = EmbedChecked(provider, pairs[i].text_b, i, "text_b");
    try {
      similarities.push_back(numerics::CosineSimilarity(a, b));
    } catch (const UndefinedStatistic& e) {
      throw EvaluationError("pair " + std::to_string(i) + ": " + e.what());
    }
  }
  // Summed in sorted order.
  std::sort(similarities.begin(), similarities.end());
  out.mean_similarity = numerics::Mean(similarities);
  out.score = Clamp01(out.agreement_rate * out.mean_similarity);
  out.flagged = out.agreement_rate < config.theta_ar;
  return out;
}

}  // namespace agenteval
