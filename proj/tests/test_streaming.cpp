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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <vector>

#include "support.hpp"
#include "tricount/error.hpp"
#include "tricount/exact.hpp"
#include "tricount/io.hpp"
#include "tricount/sampler.hpp"
#include "tricount/streaming.hpp"

using namespace tricount;
using namespace tricount::testing;

namespace {

// One wedge-style triple per edge, so each found query is one hit.
PendingQueries queries_for(const std::vector<Edge>& edges) {
  PendingQueries p;
  p.universe_size = 3 * edges.size();
  for (const Edge& e : edges) {
    const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    auto [it, inserted] = p.index.try_emplace(key, static_cast<std::uint32_t>(p.queries.size()));
    if (inserted) p.queries.push_back({e, 0, false});
    ++p.queries[it->second].multiplicity;
    p.triples.push_back({e.u, e.v, 0, false});
    p.triple_queries.emplace_back(it->second, PendingQueries::kNone);
  }
  return p;
}

Graph star_with_path(std::uint64_t leaves, std::uint64_t path_edges) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  const std::uint64_t base = leaves + 1;
  for (std::uint64_t i = 0; i < path_edges; ++i) pairs.emplace_back(base + i, base + i + 1);
  return from_edge_vector(pairs, base + path_edges + 1);
}

StreamOptions budget_options(std::uint64_t budget, bool verify = true) {
  StreamOptions o;
  o.budget = budget;
  o.verify_pass = verify;
  return o;
}

}  // namespace

TEST_CASE("pass counts") {
  const Graph g = gnp(100, 0.1, 1);
  GraphEdgeStream a(g), b(g);
  SeededRng r1(1), r2(1);
  CHECK(stream_estimate(a, budget_options(100, true), r1).passes == 4);
  CHECK(stream_estimate(b, budget_options(100, false), r2).passes == 3);
  CHECK(a.passes() == 4);
  CHECK(b.passes() == 3);
}

TEST_CASE("pass 1 counts edges exactly") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gnp(200, 0.02 * (seed + 1), seed);
    GraphEdgeStream s(g);
    SeededRng rng(seed);
    const auto p1 = pass1_identify_heavy(s, 2.0, rng);
    CHECK(p1.m == g.m());
    CHECK(p1.n == g.n());
    CHECK(p1.candidates.sampled_edges == heavy_sample_size(g.m(), g.n(), 2.0));
    for (VertexId v : p1.candidates.sampled) CHECK(v < g.n());
  }
  const Graph empty;
  GraphEdgeStream empty_stream(empty);
  SeededRng rng(0);
  const auto p1 = pass1_identify_heavy(empty_stream, 2.0, rng);
  CHECK(p1.m == 0);
  CHECK(p1.candidates.sampled.empty());
  CHECK_THROWS_AS(pass1_identify_heavy(empty_stream, 0.0, rng), ParameterError);
}

TEST_CASE("pass 1 sample is uniform over edges") {
  // Path: each edge should be sampled with probability k / m.
  const Graph g = path(401);
  const std::uint64_t k = heavy_sample_size(g.m(), g.n(), 0.1);
  REQUIRE(k < g.m());
  std::vector<double> vertex_hits(g.n(), 0.0);
  const int runs = 400;
  for (int r = 0; r < runs; ++r) {
    GraphEdgeStream s(g);
    SeededRng rng(10 + r);
    const auto p1 = pass1_identify_heavy(s, 0.1, rng);
    CHECK(p1.candidates.sampled_edges == k);
    for (VertexId v : p1.candidates.sampled) vertex_hits[v] += 1.0;
  }
  // Endpoint 0 is covered only by edge 0, so it is a candidate w.p. k/m.
  // The first and last edges test both ends of the stream.
  const double q = static_cast<double>(k) / g.m();
  const double sd = std::sqrt(q * (1 - q) / runs);
  CHECK(std::abs(vertex_hits.front() / runs - q) <= 4.5 * sd);
  CHECK(std::abs(vertex_hits.back() / runs - q) <= 4.5 * sd);
}

TEST_CASE("star S100 center captured in at least 99% of runs") {
  const Graph g = star(100);
  int captured = 0;
  for (int r = 0; r < 1000; ++r) {
    GraphEdgeStream s(g);
    SeededRng rng(5000 + r);
    const auto p1 = pass1_identify_heavy(s, 2.0, rng);
    const auto& c = p1.candidates.sampled;
    captured += std::binary_search(c.begin(), c.end(), VertexId{0});
  }
  CHECK(captured >= 990);
}

TEST_CASE("heavy vertex capture on stars") {
  for (const Graph& g : {star(100), star_with_path(30, 870)}) {
    int captured = 0;
    const int runs = 200;
    for (int r = 0; r < runs; ++r) {
      GraphEdgeStream s(g);
      SeededRng rng(r);
      auto p1 = pass1_identify_heavy(s, 2.0, rng);
      verify_candidates(s, p1);
      const auto h = p1.candidates.heavy_set();
      captured += h.size() == 1 && h[0] == 0;
    }
    const double n = static_cast<double>(g.n());
    const double floor_p = 1.0 - 1.0 / n;
    const double sigma = std::sqrt(floor_p * (1 - floor_p) / runs);
    CHECK(captured / static_cast<double>(runs) >= floor_p - 3 * sigma);
  }
}

TEST_CASE("no heavy vertices in a cubic graph") {
  const Graph g = cubic_circulant(1000);
  GraphEdgeStream s(g);
  SeededRng rng(3);
  auto p1 = pass1_identify_heavy(s, 2.0, rng);
  verify_candidates(s, p1);
  REQUIRE(p1.candidates.confirmed.has_value());
  CHECK(p1.candidates.confirmed->empty());
}

TEST_CASE("K4 with threshold 2") {
  const Graph k4 = complete(4);
  GraphEdgeStream s(k4);
  StreamOptions o = budget_options(1000);
  o.heavy_threshold = 2;
  SeededRng rng(4);
  const auto r = stream_estimate(s, o, rng);
  CHECK(r.heavy.size() == 4);
  CHECK(r.estimate.universe_size == 12);
  CHECK(r.estimate.samples == 12);
  CHECK(r.estimate.t_hat == 4.0);
  for (const auto& t : r.triples) {
    CHECK(t.is_pair);
    CHECK(k4.has_edge(t.a, t.apex));
    CHECK(k4.has_edge(t.b, t.apex));
  }
}

TEST_CASE("K4 at full budget without heavy vertices") {
  const Graph k4 = complete(4);
  GraphEdgeStream s(k4);
  SeededRng rng(5);
  const auto r = stream_estimate(s, budget_options(1000), rng);
  CHECK(r.estimate.t_hat == 4.0);
  CHECK(r.estimate.samples == r.estimate.universe_size);
}

TEST_CASE("no heavy vertices: query count within budget") {
  const Graph g = cubic_circulant(300);
  GraphEdgeStream s(g);
  SeededRng rng(6);
  const auto pending = pass2_sample(s, {}, 0.1, rng);
  CHECK(pending.universe_size == 300 * 3);
  for (const auto& t : pending.triples) CHECK_FALSE(t.is_pair);
  CHECK(pending.queries.size() <= pending.triples.size());
}

TEST_CASE("rate 0 samples nothing") {
  const Graph g = gnp(100, 0.1, 7);
  GraphEdgeStream s(g);
  SeededRng rng(7);
  auto pending = pass2_sample(s, {0, 1, 2}, 0.0, rng);
  CHECK(pending.queries.empty());
  const auto e = pass3_resolve(s, pending);
  CHECK(e.t_hat == 0.0);
  CHECK(e.samples == 0);
  CHECK_FALSE(e.ci_note.empty());
  CHECK_THROWS_AS(pass2_sample(s, {}, 1.5, rng), ParameterError);
}

TEST_CASE("pass 3 lookups") {
  const Graph k4 = complete(4);
  GraphEdgeStream s(k4);
  auto all = queries_for(k4.edges());
  CHECK(pass3_resolve(s, all).hits == 6);

  const Graph p4 = path(4);
  GraphEdgeStream ps(p4);
  auto miss = queries_for({{0, 3}});
  CHECK(pass3_resolve(ps, miss).hits == 0);
  CHECK_FALSE(miss.queries[0].found);
}

TEST_CASE("pass 3 agrees with batch membership") {
  const Graph g = gnp(500, 0.05, 8);
  SeededRng rng(8);
  std::vector<Edge> edges;
  for (int i = 0; i < 5000; ++i) {
    auto a = static_cast<VertexId>(rng.uniform_below(500));
    auto b = static_cast<VertexId>(rng.uniform_below(500));
    if (a == b) continue;
    edges.push_back(canonical_edge(a, b));
  }
  // Mix in real edges so both outcomes occur often.
  const auto real = g.edges();
  for (int i = 0; i < 2000; ++i) edges.push_back(real[rng.uniform_below(real.size())]);

  GraphEdgeStream s(g);
  auto pending = queries_for(edges);
  pass3_resolve(s, pending);

  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  QueryBatch batch;
  batch.queries = sorted;
  batch_has_edge(g, batch);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto key = (static_cast<std::uint64_t>(sorted[i].u) << 32) | sorted[i].v;
    CHECK(pending.queries[pending.index.at(key)].found == static_cast<bool>(batch.answers[i]));
  }
}

TEST_CASE("streamed estimate matches the in-memory universe") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = seed % 2 ? gnp(300, 0.05, seed) : star_with_path(40, 500);
    GraphEdgeStream s(g);
    SeededRng rng(seed);
    const auto r = stream_estimate(s, budget_options(2000, seed < 3), rng);
    const auto u = build_universe_with_heavy(g, r.heavy);
    CHECK(r.estimate.universe_size == u.total());
    CHECK(r.estimate.hits == count_closed(g, r.triples));
    CHECK(r.estimate.samples == r.triples.size());
  }
}

TEST_CASE("tree stream estimates zero") {
  const Graph tree = random_tree(500, 9);
  GraphEdgeStream s(tree);
  SeededRng rng(9);
  CHECK(stream_estimate(s, {}, rng).estimate.t_hat == 0.0);
}

TEST_CASE("binary file stream replays the same incidence stream") {
  const Graph g = gnp(400, 0.04, 10);
  const auto path = std::filesystem::temp_directory_path() / "tricount_stream_test.bin";
  save_binary(g, path);
  BinaryFileEdgeStream file(path);
  GraphEdgeStream mem(g);
  CHECK(file.vertex_count() == g.n());
  SeededRng a(10), b(10);
  const auto x = stream_estimate(file, {}, a);
  const auto y = stream_estimate(mem, {}, b);
  CHECK(x.estimate.t_hat == y.estimate.t_hat);
  CHECK(x.estimate.hits == y.estimate.hits);
  CHECK(x.heavy == y.heavy);
  CHECK(x.passes == 4);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(BinaryFileEdgeStream{path}, IoError);
}

TEST_CASE("memory bound with budget m") {
  const std::vector<Graph> graphs{gnp(500, 0.02, 11), gnp(300, 0.2, 12), star(1000),
                                  star_with_path(60, 3000), cubic_circulant(2000),
                                  complete(60)};
  for (const Graph& g : graphs) {
    for (bool verify : {true, false}) {
      GraphEdgeStream s(g);
      SeededRng rng(13);
      const auto r = stream_estimate(s, budget_options(g.m(), verify), rng);
      CHECK(r.memory.bound_ok);
      CHECK(static_cast<double>(r.memory.peak_items) <= r.memory.bound);
    }
  }
}

TEST_CASE("streaming estimator is close on average") {
  const Graph g = gnp(300, 0.05, 14);
  const double t = static_cast<double>(count_exact(g).t);
  double sum = 0.0;
  const int runs = 100;
  for (int r = 0; r < runs; ++r) {
    GraphEdgeStream s(g);
    SeededRng rng(100 + r);
    sum += stream_estimate(s, {}, rng).estimate.t_hat;
  }
  CHECK(std::abs(sum / runs - t) <= 0.05 * t);
}
