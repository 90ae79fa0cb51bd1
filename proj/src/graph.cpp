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

#include "tricount/graph.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>

#include "tricount/error.hpp"

namespace tricount {

namespace {

constexpr std::uint64_t kMaxVertexId = std::numeric_limits<VertexId>::max() - 1;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim_left(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

// Reads one unsigned decimal token from the front of `s`, advancing it.
bool read_id(std::string_view& s, std::uint64_t& out) {
  s = trim_left(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr == s.data()) return false;
  std::size_t used = static_cast<std::size_t>(ptr - s.data());
  if (used < s.size() && !is_space(s[used])) return false;
  s.remove_prefix(used);
  return true;
}

}  // namespace

EdgeList parse_edge_list(std::string_view text) {
  EdgeList out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    line = trim_left(line);
    if (line.empty() || line.front() == '#' || line.front() == '%') continue;

    std::uint64_t u = 0, v = 0;
    if (!read_id(line, u) || !read_id(line, v)) {
      throw ParseError(line_no, "expected two non-negative integer vertex ids");
    }
    if (!trim_left(line).empty()) {
      throw ParseError(line_no, "unexpected trailing token");
    }
    if (u > kMaxVertexId || v > kMaxVertexId) {
      throw ParseError(line_no, "vertex id exceeds 32-bit range");
    }
    out.edges.emplace_back(u, v);
  }
  return out;
}

EdgeList parse_edge_list(std::istream& in) {
  std::string text(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) throw IoError("failed to read edge list");
  return parse_edge_list(std::string_view(text));
}

Graph build_graph(const EdgeList& el) {
  std::uint64_t n = el.declared_n.value_or(0);
  std::vector<Edge> edges;
  edges.reserve(el.edges.size());
  for (auto [a, b] : el.edges) {
    if (a > kMaxVertexId || b > kMaxVertexId) {
      throw ParameterError("vertex id exceeds 32-bit range");
    }
    n = std::max(n, std::max(a, b) + 1);
    if (a == b) continue;
    edges.push_back(canonical_edge(static_cast<VertexId>(a), static_cast<VertexId>(b)));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_canonical_edges(n, edges);
}

Graph Graph::from_canonical_edges(std::uint64_t n, std::span<const Edge> edges) {
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (const Edge& e : edges) {
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::uint64_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];

  // Filling in (u, v) lexicographic order writes every list ascending: the
  // lower neighbors of v arrive (as e.u) before v's own rows start, and rows
  // are visited in increasing u.
  std::vector<VertexId> neighbors(2 * edges.size());
  std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    neighbors[cursor[e.v]++] = e.u;
  }
  for (const Edge& e : edges) {
    neighbors[cursor[e.u]++] = e.v;
  }
  return Graph(std::move(offsets), std::move(neighbors));
}

Graph Graph::from_csr(std::vector<std::uint64_t> offsets,
                      std::vector<VertexId> neighbors) {
  if (offsets.empty() || offsets.front() != 0 ||
      offsets.back() != neighbors.size()) {
    throw ContractError("offsets do not describe the neighbor array");
  }
  const std::uint64_t n = offsets.size() - 1;
  for (std::uint64_t u = 0; u < n; ++u) {
    if (offsets[u] > offsets[u + 1]) throw ContractError("offsets not monotone");
    for (std::uint64_t i = offsets[u]; i < offsets[u + 1]; ++i) {
      VertexId v = neighbors[i];
      if (v >= n) throw ContractError("neighbor id out of range");
      if (v == u) throw ContractError("self-loop in adjacency");
      if (i > offsets[u] && neighbors[i - 1] >= v) {
        throw ContractError("neighbor list not strictly increasing");
      }
    }
  }
  Graph g(std::move(offsets), std::move(neighbors));
  for (std::uint64_t u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors_unchecked(static_cast<VertexId>(u))) {
      auto back = g.neighbors_unchecked(v);
      if (!std::binary_search(back.begin(), back.end(), static_cast<VertexId>(u))) {
        throw ContractError("adjacency is not symmetric");
      }
    }
  }
  return g;
}

void Graph::check_vertex(VertexId u) const {
  if (u >= n()) {
    throw OutOfRangeError("vertex " + std::to_string(u) + " not in [0, " +
                          std::to_string(n()) + ")");
  }
}

std::uint64_t Graph::degree(VertexId u) const {
  check_vertex(u);
  return offsets_[u + 1] - offsets_[u];
}

std::span<const VertexId> Graph::neighbors(VertexId u) const {
  check_vertex(u);
  return neighbors_unchecked(u);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (offsets_[u + 1] - offsets_[u] > offsets_[v + 1] - offsets_[v]) std::swap(u, v);
  auto list = neighbors_unchecked(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::uint64_t Graph::max_degree() const {
  std::uint64_t best = 0;
  for (std::uint64_t u = 0; u < n(); ++u) {
    best = std::max(best, offsets_[u + 1] - offsets_[u]);
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for_each_edge([&](VertexId u, VertexId v) { out.push_back({u, v}); });
  return out;
}

QueryBatch QueryBatch::from_pairs(
    std::span<const std::pair<VertexId, VertexId>> pairs) {
  QueryBatch batch;
  batch.queries.reserve(pairs.size());
  for (auto [a, b] : pairs) batch.queries.push_back(canonical_edge(a, b));
  std::sort(batch.queries.begin(), batch.queries.end());
  return batch;
}

void batch_has_edge(const Graph& g, QueryBatch& batch) {
  const auto& q = batch.queries;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].u > q[i].v) {
      throw ContractError("query batch is not canonicalized (u < v)");
    }
    if (i > 0 && q[i] < q[i - 1]) throw ContractError("query batch is not sorted");
    if (q[i].v >= g.n()) throw OutOfRangeError("query vertex out of range");
  }

  batch.answers.assign(q.size(), false);
  std::size_t i = 0;
  while (i < q.size()) {
    const VertexId u = q[i].u;
    auto list = g.neighbors_unchecked(u);
    auto it = std::lower_bound(list.begin(), list.end(), u);
    for (; i < q.size() && q[i].u == u; ++i) {
      while (it != list.end() && *it < q[i].v) ++it;
      batch.answers[i] = it != list.end() && *it == q[i].v && q[i].u != q[i].v;
    }
  }
}

WedgeWeights wedge_weights(const Graph& g) {
  WedgeWeights w;
  w.weight.resize(g.n());
  for (std::uint64_t u = 0; u < g.n(); ++u) {
    w.weight[u] = choose2(g.degree(static_cast<VertexId>(u)));
    w.total += w.weight[u];
  }
  return w;
}

}  // namespace tricount
