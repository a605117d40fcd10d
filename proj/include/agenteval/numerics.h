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

#ifndef AGENTEVAL_NUMERICS_H_
#define AGENTEVAL_NUMERICS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace agenteval::numerics {

// Shannon entropy of the empirical distribution given by `counts`, divided
// by log(K) where K = counts.size(). Zero counts contribute nothing and
// K == 1 yields 0. Throws UndefinedStatistic when all counts are zero.
double NormalizedEntropy(std::span<const std::int64_t> counts);

// Product-moment correlation. A series with zero variance has no linear
// coupling to anything, so the result is 0 rather than an error.
// Throws UndefinedStatistic on length mismatch, fewer than two points or
// non-finite input.
double Pearson(std::span<const double> x, std::span<const double> y);

// 1-based fractional ranks; tied values share the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of AverageRanks(x) and AverageRanks(y).
double Spearman(std::span<const double> x, std::span<const double> y);

// u.v / (|u| |v|). Throws UndefinedStatistic on dimension mismatch, empty
// input or a zero-norm vector.
double CosineSimilarity(std::span<const double> u, std::span<const double> v);

// Nearest-rank percentile (p in (0, 100]) of a non-empty sample.
double NearestRankPercentile(std::span<const double> values, double p);

double Mean(std::span<const double> values);

}  // namespace agenteval::numerics

#endif  // AGENTEVAL_NUMERICS_H_
