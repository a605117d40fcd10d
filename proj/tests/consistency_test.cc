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
#include <cmath>
#include <random>

#include "agenteval/errors.h"
#include "agenteval/numerics.h"
#include "gtest/gtest.h"

namespace agenteval {
namespace {

// Embeds "a..." as (1, 0) and anything else as (0.9, sqrt(0.19)), so every
// pair of an "a" text with another text has cosine 0.9.
class FixedAngleProvider : public EmbeddingProvider {
 public:
  Embedding Embed(std::string_view text) const override {
    if (!text.empty() && text[0] == 'a') return {1.0, 0.0};
    return {0.9, std::sqrt(0.19)};
  }
  std::size_t dimension() const override { return 2; }
};

class BrokenProvider : public EmbeddingProvider {
 public:
  Embedding Embed(std::string_view) const override { return {1.0}; }
  std::size_t dimension() const override { return 2; }
};

RequestPair Pair(std::string a, std::string b, std::string da, std::string db) {
  return {std::move(a), std::move(b), std::move(da), std::move(db)};
}

TEST(ConsistencyTest, AgreementRate) {
  const std::vector<RequestPair> pairs = {Pair("a", "b", "yes", "yes"), Pair("a", "b", "no", "no"),
                                          Pair("a", "b", "yes", "yes"), Pair("a", "b", "yes", "no")};
  EXPECT_DOUBLE_EQ(AgreementRate(pairs), 0.75);
  EXPECT_THROW(AgreementRate({}), UndefinedStatistic);
}

TEST(ConsistencyTest, ScoreIsAgreementTimesSimilarity) {
  const std::vector<RequestPair> pairs = {Pair("a1", "b1", "yes", "yes"), Pair("a2", "b2", "no", "no"),
                                          Pair("a3", "b3", "yes", "yes"), Pair("a4", "b4", "yes", "no")};
  const auto r = EvaluateConsistency(pairs, FixedAngleProvider{}, EvalConfig{});
  EXPECT_NEAR(r.mean_similarity, 0.9, 1e-12);
  EXPECT_NEAR(r.score, 0.675, 1e-12);
  EXPECT_TRUE(r.flagged);
  EXPECT_EQ(r.pair_count, 4u);
}

TEST(ConsistencyTest, IdenticalTextsAndDecisionsScoreOne) {
  const std::vector<RequestPair> pairs = {Pair("Refund order 42", "Refund order 42", "ok", "ok"),
                                          Pair("Cancel my plan", "cancel MY plan!", "ok", "ok")};
  const auto r = EvaluateConsistency(pairs, HashingEmbedder{}, EvalConfig{});
  EXPECT_NEAR(r.score, 1.0, 1e-12);
  EXPECT_FALSE(r.flagged);
}

TEST(ConsistencyTest, HashingEmbedderProperties) {
  const HashingEmbedder e;
  const auto v = e.Embed("the quick brown fox");
  ASSERT_EQ(v.size(), 256u);
  double norm = 0;
  for (double x : v) norm += x * x;
  EXPECT_NEAR(norm, 1.0, 1e-12);
  EXPECT_EQ(e.Embed("the quick brown fox"), v);
  const auto p = e.Embed("?!");
  EXPECT_TRUE(std::any_of(p.begin(), p.end(), [](double x) { return x != 0.0; }));
  EXPECT_THROW(HashingEmbedder(0), ValidationError);
}

TEST(ConsistencyTest, ProviderDimensionMismatchIsEvaluationError) {
  const std::vector<RequestPair> pairs = {Pair("a", "b", "x", "x")};
  EXPECT_THROW(EvaluateConsistency(pairs, BrokenProvider{}, EvalConfig{}), EvaluationError);
}

TEST(ConsistencyPropertyTest, PairOrderInvariantAndBounded) {
  std::mt19937_64 gen(51);
  const std::vector<std::string> words = {"refund", "order", "cancel", "plan", "upgrade",
                                          "billing", "account", "help", "now", "please"};
  const HashingEmbedder embedder;
  for (int t = 0; t < 300; ++t) {
    std::vector<RequestPair> pairs;
    const std::size_t n = 1 + gen() % 30;
    for (std::size_t i = 0; i < n; ++i) {
      std::string a, b;
      for (int w = 0; w < 4; ++w) {
        a += words[gen() % words.size()] + " ";
        b += words[gen() % words.size()] + " ";
      }
      pairs.push_back(Pair(a, b, gen() % 3 ? "approve" : "deny", gen() % 3 ? "approve" : "deny"));
    }
    const auto r = EvaluateConsistency(pairs, embedder, EvalConfig{});
    ASSERT_GE(r.score, 0.0);
    ASSERT_LE(r.score, 1.0);
    ASSERT_LE(r.score, r.agreement_rate + 1e-12);
    std::shuffle(pairs.begin(), pairs.end(), gen);
    const auto shuffled = EvaluateConsistency(pairs, embedder, EvalConfig{});
    ASSERT_EQ(shuffled.score, r.score);
    ASSERT_EQ(shuffled.mean_similarity, r.mean_similarity);
  }
}

}  // namespace
}  // namespace agenteval
