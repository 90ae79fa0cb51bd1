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

#include "tricount/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tricount/error.hpp"

namespace tricount {

namespace {

// Position of canonical edge (u, v) in the Graph::edges() sequence.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : g_(g), first_(g.n() + 1, 0) {
    for (std::uint64_t u = 0; u < g.n(); ++u) {
      auto list = g.neighbors_unchecked(static_cast<VertexId>(u));
      auto upper = list.end() - std::upper_bound(list.begin(), list.end(), u);
      first_[u + 1] = first_[u] + static_cast<std::uint64_t>(upper);
    }
  }

  std::uint64_t operator()(VertexId a, VertexId b) const {
    Edge e = canonical_edge(a, b);
    auto list = g_.neighbors_unchecked(e.u);
    auto upper = std::upper_bound(list.begin(), list.end(), e.u);
    return first_[e.u] + static_cast<std::uint64_t>(
                             std::lower_bound(upper, list.end(), e.v) - upper);
  }

 private:
  const Graph& g_;
  std::vector<std::uint64_t> first_;
};

}  // namespace

ExactResult count_exact(const Graph& g, bool per_edge) {
  const std::uint64_t n = g.n();

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<VertexId> rank(n);
  for (std::uint64_t i = 0; i < n; ++i) rank[order[i]] = static_cast<VertexId>(i);

  // Oriented lists keep only higher-ranked neighbors, still sorted by id.
  std::vector<std::uint64_t> out_offsets(n + 1, 0);
  std::vector<VertexId> out;
  out.reserve(g.m());
  for (std::uint64_t u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors_unchecked(static_cast<VertexId>(u))) {
      if (rank[v] > rank[u]) out.push_back(v);
    }
    out_offsets[u + 1] = out.size();
  }
  auto out_list = [&](VertexId u) {
    return std::span<const VertexId>(out.data() + out_offsets[u],
                                     out.data() + out_offsets[u + 1]);
  };

  ExactResult result;
  std::optional<EdgeIndex> index;
  std::vector<Count> counts;
  if (per_edge) {
    index.emplace(g);
    counts.assign(g.m(), 0);
  }

  for (std::uint64_t ui = 0; ui < n; ++ui) {
    const auto u = static_cast<VertexId>(ui);
    auto nu = out_list(u);
    for (VertexId v : nu) {
      auto nv = out_list(v);
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++result.t;
          if (per_edge) {
            ++counts[(*index)(u, v)];
            ++counts[(*index)(u, *a)];
            ++counts[(*index)(v, *a)];
          }
          ++a;
          ++b;
        }
      }
    }
  }

  if (per_edge) {
    result.delta_max = counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    result.per_edge_counts = std::move(counts);
  }
  return result;
}

Count count_brute(const Graph& g, std::uint64_t cap) {
  const std::uint64_t n = g.n();
  if (n > cap) {
    throw CapExceededError("brute-force counting refused: n = " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
  }
  std::vector<char> adj(n * n, 0);
  for (std::uint64_t u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors_unchecked(static_cast<VertexId>(u))) adj[u * n + v] = 1;
  }
  Count t = 0;
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      if (!adj[a * n + b]) continue;
      for (std::uint64_t c = b + 1; c < n; ++c) {
        t += adj[a * n + c] & adj[b * n + c];
      }
    }
  }
  return t;
}

}  // namespace tricount
