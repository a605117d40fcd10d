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

#include "agenteval/numerics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "agenteval/errors.h"

namespace agenteval::numerics {
namespace {

void CheckPaired(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw UndefinedStatistic("correlation inputs differ in length (" +
                             std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) {
    throw UndefinedStatistic("correlation needs at least two points");
  }
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(x.begin(), x.end(), finite) ||
      !std::all_of(y.begin(), y.end(), finite)) {
    throw UndefinedStatistic("correlation inputs must be finite");
  }
}

double ClampUnitRange(double r) { return std::clamp(r, -1.0, 1.0); }

}  // namespace

double NormalizedEntropy(std::span<const std::int64_t> counts) {
  if (counts.empty()) {
    throw UndefinedStatistic("entropy needs at least one category");
  }
  std::int64_t total = 0;
  for (auto c : counts) {
    if (c < 0) throw UndefinedStatistic("category counts must be >= 0");
    total += c;
  }
  if (total == 0) throw UndefinedStatistic("entropy of an empty window");
  if (counts.size() == 1) return 0.0;

  const double n = static_cast<double>(total);
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p);
  }
  return std::clamp(h / std::log(static_cast<double>(counts.size())), 0.0, 1.0);
}

double Mean(std::span<const double> values) {
  if (values.empty()) throw UndefinedStatistic("mean of an empty series");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y);
  const double mx = Mean(x);
  const double my = Mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return ClampUnitRange(sxy / std::sqrt(sxx * syy));
}

std::vector<double> AverageRanks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 (0-based) share rank mean((i+1)..j).
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double Spearman(std::span<const double> x, std::span<const double> y) {
  CheckPaired(x, y);
  const auto rx = AverageRanks(x);
  const auto ry = AverageRanks(y);
  return Pearson(rx, ry);
}

double CosineSimilarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw UndefinedStatistic("cosine similarity of vectors with different dimensions");
  }
  if (u.empty()) throw UndefinedStatistic("cosine similarity of empty vectors");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (!std::isfinite(dot) || !std::isfinite(nu) || !std::isfinite(nv)) {
    throw UndefinedStatistic("cosine similarity inputs must be finite");
  }
  if (nu == 0.0 || nv == 0.0) {
    throw UndefinedStatistic("cosine similarity of a zero-norm vector");
  }
  return ClampUnitRange(dot / (std::sqrt(nu) * std::sqrt(nv)));
}

double NearestRankPercentile(std::span<const double> values, double p) {
  if (values.empty()) throw UndefinedStatistic("percentile of an empty sample");
  if (!(p > 0.0 && p <= 100.0)) {
    throw UndefinedStatistic("percentile must lie in (0, 100]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

}  // namespace agenteval::numerics
