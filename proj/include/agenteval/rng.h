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

#ifndef AGENTEVAL_RNG_H_
#define AGENTEVAL_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace agenteval {

// Reproducible random source: std::mt19937_64 keyed by (seed, stream) via
// std::seed_seq. Both are fully specified by the standard, and the value
// mappings below avoid the implementation-defined std distributions, so a
// given (seed, stream) yields the same sequence on every toolchain.
// Distinct streams are independent, so adding a stream never shifts
// another one.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform();

  // Uniform integer in [0, bound). bound must be >= 1.
  std::uint64_t Below(std::uint64_t bound);

  // Index drawn with probability proportional to weights[i].
  std::size_t Categorical(std::span<const double> weights);

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace agenteval

#endif  // AGENTEVAL_RNG_H_
