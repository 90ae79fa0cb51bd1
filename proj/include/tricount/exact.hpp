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

#ifndef TRICOUNT_EXACT_HPP_
#define TRICOUNT_EXACT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "tricount/graph.hpp"

namespace tricount {

struct ExactResult {
  Count t = 0;
  // Maximum number of triangles sharing one edge. Only filled when per-edge
  // counts were requested.
  std::optional<Count> delta_max;
  // Triangles through each canonical edge, aligned with Graph::edges().
  std::optional<std::vector<Count>> per_edge_counts;
};

// Degree-ordered edge iterator. Vertices are ranked by (degree, id) and
// every edge is oriented from lower to higher rank; a triangle is counted
// once, at its lowest-ranked corner, by intersecting the two oriented lists
// of that corner and the middle one. O(m^{3/2}) work.
ExactResult count_exact(const Graph& g, bool per_edge = false);

inline constexpr std::uint64_t kBruteForceCap = 512;

// Checks all C(n, 3) vertex triples. Oracle only: throws CapExceededError
// when n > cap.
Count count_brute(const Graph& g, std::uint64_t cap = kBruteForceCap);

}  // namespace tricount

#endif  // TRICOUNT_EXACT_HPP_
