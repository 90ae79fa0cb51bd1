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

// Simple undirected graphs in sorted-adjacency (CSR) form.
//
// A Graph is built once from a raw EdgeList (self-loops dropped, duplicate
// undirected edges collapsed) and is immutable afterwards, so any number of
// threads may query it concurrently.

#ifndef TRICOUNT_GRAPH_HPP_
#define TRICOUNT_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace tricount {

using VertexId = std::uint32_t;
using Count = std::uint64_t;

// Raw edge pairs as read from a file. May hold self-loops and duplicates.
struct EdgeList {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::optional<std::uint64_t> declared_n;
};

// Canonical undirected edge, u < v.
struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge canonical_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Adopts CSR arrays after validating them: offsets has n + 1 entries,
  // every list strictly increasing without self-loops, and adjacency
  // symmetric. Throws ContractError otherwise.
  static Graph from_csr(std::vector<std::uint64_t> offsets,
                        std::vector<VertexId> neighbors);

  // Builds from edges that are already canonical (u < v), sorted and unique.
  // Used by routines that filter an existing graph's edge sequence.
  static Graph from_canonical_edges(std::uint64_t n, std::span<const Edge> edges);

  std::uint64_t n() const { return offsets_.size() - 1; }
  std::uint64_t m() const { return neighbors_.size() / 2; }

  // Throws OutOfRangeError when u >= n.
  std::uint64_t degree(VertexId u) const;
  std::span<const VertexId> neighbors(VertexId u) const;

  // Binary search in the sorted list of the lower-degree endpoint.
  bool has_edge(VertexId u, VertexId v) const;

  std::uint64_t max_degree() const;

  // Canonical edges (u < v) in lexicographic order; this is the edge
  // sequence sparsification indexes into.
  std::vector<Edge> edges() const;

  // Calls fn(u, v) for every canonical edge in lexicographic order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    for (std::uint64_t u = 0; u < n(); ++u) {
      for (VertexId v : neighbors_unchecked(static_cast<VertexId>(u))) {
        if (v > u) fn(static_cast<VertexId>(u), v);
      }
    }
  }

  std::span<const std::uint64_t> offsets() const { return offsets_; }
  std::span<const VertexId> adjacency() const { return neighbors_; }

  std::span<const VertexId> neighbors_unchecked(VertexId u) const {
    return {neighbors_.data() + offsets_[u],
            neighbors_.data() + offsets_[u + 1]};
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<std::uint64_t> offsets, std::vector<VertexId> neighbors)
      : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {}

  void check_vertex(VertexId u) const;

  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

// Lines of "u v" decimal ids; lines starting with '#' or '%' and blank lines
// are skipped. Throws ParseError naming the first malformed line.
EdgeList parse_edge_list(std::istream& in);
EdgeList parse_edge_list(std::string_view text);

// n = 1 + largest id seen, or declared_n when that is larger.
Graph build_graph(const EdgeList& edges);

// Membership queries, canonicalized and sorted before resolution.
struct QueryBatch {
  std::vector<Edge> queries;
  std::vector<bool> answers;

  // Canonicalizes and sorts arbitrary vertex pairs.
  static QueryBatch from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs);
};

// Answers every query in one forward merge over the graph's sorted edge
// sequence. Queries must be canonical and sorted (duplicates allowed);
// throws ContractError otherwise.
void batch_has_edge(const Graph& g, QueryBatch& batch);

// Unordered wedge counts C(deg(u), 2) per vertex and their sum.
struct WedgeWeights {
  std::vector<Count> weight;
  Count total = 0;
};

WedgeWeights wedge_weights(const Graph& g);

inline Count choose2(std::uint64_t d) { return d < 2 ? 0 : d * (d - 1) / 2; }

}  // namespace tricount

#endif  // TRICOUNT_GRAPH_HPP_
