// Copyright 2026 The tricount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reproducible randomness.
//
// SeededRng wraps std::mt19937_64, whose output sequence is fixed by the C++
// standard. The standard <random> distributions are implementation-defined,
// so every distribution used by the library is derived here from raw 64-bit
// draws; a seed therefore reproduces results across compilers and platforms.

#ifndef TRICOUNT_RNG_HPP_
#define TRICOUNT_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "tricount/error.hpp"
#include "tricount/graph.hpp"

namespace tricount {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in (0, 1). A raw draw of exactly 0 is discarded and redrawn.
  double uniform01() {
    for (;;) {
      double x = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
      if (x > 0.0) return x;
    }
  }

  // Uniform integer in [0, bound); bound must be positive. Lemire's
  // multiply-shift with rejection, so the result is exactly uniform.
  std::uint64_t uniform_below(std::uint64_t bound) {
    unsigned __int128 prod = static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(prod);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        prod = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(prod);
      }
    }
    return static_cast<std::uint64_t>(prod >> 64);
  }

  // Standard normal via the Marsaglia polar method. The spare deviate is
  // cached, so two consecutive calls consume one accepted pair.
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Distance to the next retained index when each index is kept with
// probability p in (0, 1): ceil(log_{1-p} x) for x uniform in (0, 1), which
// is Geometric(p) on {1, 2, ...}. Saturates at UINT64_MAX.
std::uint64_t geometric_skip(double p, SeededRng& rng);

// Calls fn(i) for each i in [0, n) kept independently with probability p,
// in increasing order, using O(1 + np) draws in expectation. p = 1 keeps
// everything and p = 0 nothing, without touching the generator.
template <typename Fn>
void for_each_bernoulli(std::uint64_t n, double p, SeededRng& rng, Fn&& fn) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError("retention probability must lie in [0, 1]");
  }
  if (p == 0.0 || n == 0) return;
  if (p == 1.0) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  // `next` is one past the previously kept index.
  std::uint64_t next = 0;
  for (;;) {
    std::uint64_t skip = geometric_skip(p, rng);
    if (skip > n - next) return;
    next += skip;
    fn(next - 1);
  }
}

std::vector<std::uint64_t> bernoulli_subset(std::uint64_t n, double p, SeededRng& rng);

// Discrete sampling proportional to non-negative integer weights over exact
// prefix sums.
class WeightedSampler {
 public:
  WeightedSampler() = default;
  explicit WeightedSampler(std::span<const Count> weights);

  Count total() const { return cumulative_.empty() ? 0 : cumulative_.back(); }
  std::size_t size() const { return cumulative_.size(); }
  std::span<const Count> cumulative() const { return cumulative_; }

  // Index i with probability weight(i) / total. Throws ParameterError when
  // the total weight is zero.
  std::size_t draw(SeededRng& rng) const;

  // First index whose prefix sum exceeds r, for r < total(). Same result
  // as upper_bound over cumulative(), in expected O(1) via a guide table.
  std::size_t find(Count r) const;

 private:
  std::vector<Count> cumulative_;
  std::vector<std::uint32_t> guide_;
};

}  // namespace tricount

#endif  // TRICOUNT_RNG_HPP_
