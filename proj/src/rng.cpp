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

#include "tricount/rng.hpp"

#include <algorithm>
#include <limits>

namespace tricount {

double SeededRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * (static_cast<double>(engine_() >> 11) * 0x1.0p-53) - 1.0;
    v = 2.0 * (static_cast<double>(engine_() >> 11) * 0x1.0p-53) - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

std::uint64_t geometric_skip(double p, SeededRng& rng) {
  const double x = rng.uniform01();
  const double skip = std::ceil(std::log(x) / std::log1p(-p));
  if (!(skip < 0x1.0p64)) return std::numeric_limits<std::uint64_t>::max();
  // log(x) < 0 strictly, so the ratio is positive and the ceiling at least 1.
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(skip));
}

std::vector<std::uint64_t> bernoulli_subset(std::uint64_t n, double p, SeededRng& rng) {
  std::vector<std::uint64_t> out;
  if (p > 0.0 && p <= 1.0) out.reserve(static_cast<std::size_t>(n * p * 1.1) + 16);
  for_each_bernoulli(n, p, rng, [&](std::uint64_t i) { out.push_back(i); });
  return out;
}

WeightedSampler::WeightedSampler(std::span<const Count> weights) {
  cumulative_.reserve(weights.size());
  Count running = 0;
  for (Count w : weights) {
    running += w;
    cumulative_.push_back(running);
  }
  // guide_[b] is the answer for the smallest r falling in bucket b, so a
  // lookup starts there and scans forward over about one entry.
  const Count total = running;
  if (total == 0) return;
  const std::size_t buckets = cumulative_.size();
  guide_.resize(buckets);
  std::size_t i = 0;
  for (std::size_t b = 0; b < buckets; ++b) {
    const auto num = static_cast<unsigned __int128>(b) * total;
    const auto lo = static_cast<Count>((num + buckets - 1) / buckets);
    if (lo >= total) {  // empty bucket, only possible when total < buckets
      guide_[b] = static_cast<std::uint32_t>(buckets - 1);
      continue;
    }
    while (cumulative_[i] <= lo) ++i;
    guide_[b] = static_cast<std::uint32_t>(i);
  }
}

std::size_t WeightedSampler::find(Count r) const {
  const auto bucket = static_cast<std::size_t>(static_cast<unsigned __int128>(r) *
                                               cumulative_.size() / total());
  std::size_t i = guide_[bucket];
  while (cumulative_[i] <= r) ++i;
  return i;
}

std::size_t WeightedSampler::draw(SeededRng& rng) const {
  if (total() == 0) throw ParameterError("cannot sample from an empty universe");
  return find(rng.uniform_below(total()));
}

}  // namespace tricount
