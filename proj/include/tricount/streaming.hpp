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

// Three-pass semi-streaming triangle estimation over an incidence stream
// (every vertex's neighbor list arrives contiguously, preceded by its
// length).
//
//   pass 1   count m; keep a uniform sample of ceil(d sqrt(m) ln n) edges and
//            take their endpoints as heavy candidates.
//   verify   (optional) exact candidate degrees; keep deg >= sqrt(m).
//   pass 2   Bernoulli-sample the hybrid triple universe at rate s / |U|:
//            wedges from each light vertex's buffered list, heavy apexes per
//            edge via geometric skips. Unknown edges become queries.
//   pass 3   look every streamed edge up in the query table; count closed
//            triples and scale as the in-memory estimator does.

#ifndef TRICOUNT_STREAMING_HPP_
#define TRICOUNT_STREAMING_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/rng.hpp"
#include "tricount/sampler.hpp"

namespace tricount {

class StreamVisitor {
 public:
  virtual ~StreamVisitor() = default;
  virtual void begin_vertex(VertexId /*u*/, std::uint64_t /*degree*/) {}
  virtual void neighbor(VertexId u, VertexId v) = 0;
  virtual void end_vertex(VertexId /*u*/) {}
};

// Replayable incidence stream. Every replay is one pass and is counted.
class EdgeStream {
 public:
  virtual ~EdgeStream() = default;

  virtual std::uint64_t vertex_count() const = 0;

  void replay(StreamVisitor& visitor) {
    ++passes_;
    do_replay(visitor);
  }

  std::uint64_t passes() const { return passes_; }

 protected:
  virtual void do_replay(StreamVisitor& visitor) = 0;

 private:
  std::uint64_t passes_ = 0;
};

// Streams an in-memory graph in vertex order.
class GraphEdgeStream : public EdgeStream {
 public:
  explicit GraphEdgeStream(const Graph& g) : g_(g) {}
  explicit GraphEdgeStream(const Graph&&) = delete;  // would dangle
  std::uint64_t vertex_count() const override { return g_.n(); }

 protected:
  void do_replay(StreamVisitor& visitor) override;

 private:
  const Graph& g_;
};

// Reads the binary adjacency format sequentially; the graph is never
// materialized. Neighbor lists are assumed sorted and symmetric, as written
// by write_binary.
class BinaryFileEdgeStream : public EdgeStream {
 public:
  explicit BinaryFileEdgeStream(std::filesystem::path path);
  std::uint64_t vertex_count() const override { return n_; }

 protected:
  void do_replay(StreamVisitor& visitor) override;

 private:
  std::filesystem::path path_;
  std::uint64_t n_ = 0;
};

struct HeavyCandidates {
  std::vector<VertexId> sampled;  // endpoints of the sampled edges, ascending
  std::uint64_t sampled_edges = 0;
  // (vertex, exact degree) for candidates kept by the verification pass.
  std::optional<std::vector<std::pair<VertexId, std::uint64_t>>> confirmed;

  // Confirmed vertices when verified, otherwise every candidate; ascending.
  std::vector<VertexId> heavy_set() const;
};

struct Pass1Result {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Count wedges_all = 0;  // sum of C(deg, 2) over every vertex
  HeavyCandidates candidates;
  std::uint64_t peak_items = 0;
};

// Number of edges pass 1 retains: ceil(d sqrt(m) ln n).
std::uint64_t heavy_sample_size(std::uint64_t m, std::uint64_t n, double d);

Pass1Result pass1_identify_heavy(EdgeStream& stream, double d, SeededRng& rng);

// Exact degrees of the candidates. Keeps deg > threshold when a threshold is
// given, otherwise deg >= sqrt(m).
struct VerifyResult {
  Count light_wedges = 0;   // sum of C(deg, 2) over vertices not kept
  Count heavy_degree_sum = 0;
  std::uint64_t peak_items = 0;
};

VerifyResult verify_candidates(EdgeStream& stream, Pass1Result& pass1,
                               std::optional<std::uint64_t> threshold = std::nullopt);

struct StreamQuery {
  Edge edge;
  std::uint64_t multiplicity = 0;  // sampled triples asking for this edge
  bool found = false;
};

struct PendingQueries {
  std::vector<VertexId> heavy;
  double rate = 0.0;
  Count universe_size = 0;  // exact |U| for this heavy set
  std::vector<SampledTriple> triples;
  // Indices into `queries` for each triple; the second is kNone for wedges.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> triple_queries;
  std::vector<StreamQuery> queries;
  std::unordered_map<std::uint64_t, std::uint32_t> index;  // edge key -> query
  std::uint64_t peak_items = 0;

  static constexpr std::uint32_t kNone = 0xffffffffu;
};

// Samples every element of the hybrid universe over `heavy` independently
// with probability `rate`.
PendingQueries pass2_sample(EdgeStream& stream, std::vector<VertexId> heavy, double rate,
                            SeededRng& rng);

Estimate pass3_resolve(EdgeStream& stream, PendingQueries& pending);

struct MemoryReport {
  std::uint64_t peak_items_pass1 = 0;
  std::uint64_t peak_items_verify = 0;
  std::uint64_t peak_items_pass2 = 0;
  std::uint64_t peak_items_pass3 = 0;
  std::uint64_t peak_items = 0;
  double bound = 0.0;  // bound_constant * (sqrt(m) ln n + s)
  bool bound_ok = false;
};

struct StreamOptions {
  double d = 2.0;
  bool verify_pass = true;
  // Triple budget s. Defaults to m.
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> heavy_threshold;
  double bound_constant = 8.0;
};

struct StreamResult {
  Estimate estimate;
  MemoryReport memory;
  std::uint64_t passes = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::vector<VertexId> heavy;
  // Kept for oracle comparisons against the in-memory path.
  std::vector<SampledTriple> triples;
};

StreamResult stream_estimate(EdgeStream& stream, const StreamOptions& options, SeededRng& rng);

}  // namespace tricount

#endif  // TRICOUNT_STREAMING_HPP_
