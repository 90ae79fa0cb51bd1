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

// Small graph families shared by the unit and acceptance tests.

#ifndef TRICOUNT_TESTS_SUPPORT_HPP_
#define TRICOUNT_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/rng.hpp"

namespace tricount::testing {

inline Graph from_pairs(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs,
                        std::uint64_t n = 0) {
  EdgeList el;
  el.edges.assign(pairs.begin(), pairs.end());
  if (n > 0) el.declared_n = n;
  return build_graph(el);
}

inline Graph from_edge_vector(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs,
                              std::uint64_t n) {
  EdgeList el;
  el.edges = pairs;
  el.declared_n = n;
  return build_graph(el);
}

// Erdos-Renyi G(n, p).
inline Graph gnp(std::uint64_t n, double p, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) pairs.emplace_back(u, v);
    }
  }
  return from_edge_vector(pairs, n);
}

inline Graph complete(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u < n; ++u) {
    for (std::uint64_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return from_edge_vector(pairs, n);
}

inline Graph path(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u + 1 < n; ++u) pairs.emplace_back(u, u + 1);
  return from_edge_vector(pairs, n);
}

inline Graph cycle(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u < n; ++u) pairs.emplace_back(u, (u + 1) % n);
  return from_edge_vector(pairs, n);
}

// Center 0 joined to leaves 1..leaves.
inline Graph star(std::uint64_t leaves) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t v = 1; v <= leaves; ++v) pairs.emplace_back(0, v);
  return from_edge_vector(pairs, leaves + 1);
}

inline Graph complete_bipartite(std::uint64_t a, std::uint64_t b) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u < a; ++u) {
    for (std::uint64_t v = 0; v < b; ++v) pairs.emplace_back(u, a + v);
  }
  return from_edge_vector(pairs, a + b);
}

// Random bipartite graph: sides [0, a) and [a, a + b).
inline Graph random_bipartite(std::uint64_t a, std::uint64_t b, double p, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u < a; ++u) {
    for (std::uint64_t v = 0; v < b; ++v) {
      if (rng.uniform01() < p) pairs.emplace_back(u, a + v);
    }
  }
  return from_edge_vector(pairs, a + b);
}

// Uniform random recursive tree: vertex v attaches to a uniform earlier one.
inline Graph random_tree(std::uint64_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t v = 1; v < n; ++v) pairs.emplace_back(rng.uniform_below(v), v);
  return from_edge_vector(pairs, n);
}

inline Graph petersen() {
  return from_pairs({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                     {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                     {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

// 3-regular circulant on an even number of vertices: i ~ i +- 1, i ~ i + n/2.
inline Graph cubic_circulant(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t u = 0; u < n; ++u) {
    pairs.emplace_back(u, (u + 1) % n);
    pairs.emplace_back(u, (u + n / 2) % n);
  }
  return from_edge_vector(pairs, n);
}

inline Graph relabel(const Graph& g, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<std::uint64_t> perm(g.n());
  for (std::uint64_t i = 0; i < g.n(); ++i) perm[i] = i;
  for (std::uint64_t i = g.n(); i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  g.for_each_edge([&](VertexId u, VertexId v) { pairs.emplace_back(perm[u], perm[v]); });
  return from_edge_vector(pairs, g.n());
}

}  // namespace tricount::testing

#endif  // TRICOUNT_TESTS_SUPPORT_HPP_
