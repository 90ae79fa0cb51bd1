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

#include "tricount/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tricount/error.hpp"

namespace tricount {

UniverseMode parse_mode(const std::string& name) {
  if (name == "simple") return UniverseMode::kSimple;
  if (name == "hybrid") return UniverseMode::kHybrid;
  throw ParameterError("unknown sampling mode '" + name + "' (expected simple|hybrid)");
}

const char* to_string(UniverseMode mode) {
  return mode == UniverseMode::kSimple ? "simple" : "hybrid";
}

std::uint64_t default_threshold(std::uint64_t m) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
  while (r * r < m) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= m) --r;
  return std::max<std::uint64_t>(1, r);
}

namespace {

TripleUniverse make_universe(const Graph& g, UniverseMode mode, std::uint64_t threshold,
                             std::vector<char> is_heavy) {
  TripleUniverse u;
  u.mode = mode;
  u.threshold = threshold;
  u.is_heavy = std::move(is_heavy);
  u.wedge_weight.assign(g.n(), 0);
  Count heavy_degree_sum = 0;
  for (std::uint64_t v = 0; v < g.n(); ++v) {
    const auto deg = g.degree(static_cast<VertexId>(v));
    if (u.is_heavy[v]) {
      u.heavy.push_back(static_cast<VertexId>(v));
      heavy_degree_sum += deg;
    } else {
      u.wedge_weight[v] = choose2(deg);
      u.wedge_total += u.wedge_weight[v];
    }
  }
  u.pair_total = g.m() * u.heavy.size() - heavy_degree_sum;
  u.wedge_sampler = WeightedSampler(u.wedge_weight);
  return u;
}

}  // namespace

TripleUniverse build_universe(const Graph& g, UniverseMode mode,
                              std::optional<std::uint64_t> threshold) {
  std::vector<char> is_heavy(g.n(), 0);
  std::uint64_t cut = 0;
  if (mode == UniverseMode::kHybrid) {
    cut = threshold.value_or(default_threshold(g.m()));
    if (cut < 1) throw ParameterError("degree threshold must be at least 1");
    for (std::uint64_t v = 0; v < g.n(); ++v) {
      is_heavy[v] = g.degree(static_cast<VertexId>(v)) > cut;
    }
  }
  return make_universe(g, mode, cut, std::move(is_heavy));
}

TripleUniverse build_universe_with_heavy(const Graph& g, std::span<const VertexId> heavy) {
  std::vector<char> is_heavy(g.n(), 0);
  for (VertexId v : heavy) {
    if (v >= g.n()) throw OutOfRangeError("heavy vertex out of range");
    is_heavy[v] = 1;
  }
  return make_universe(g, UniverseMode::kHybrid, 0, std::move(is_heavy));
}

std::uint64_t required_samples(double universe_size, double t_guess, double eps,
                               double delta) {
  if (!(t_guess >= 1.0)) throw ParameterError("t_guess must be at least 1");
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  if (!(universe_size >= 0.0)) throw ParameterError("universe size must be non-negative");
  const double s = 2.0 * (universe_size / t_guess) * std::log(2.0 / delta) / (eps * eps);
  // Shave rounding noise so mathematically integral values stay put.
  const double rounded = std::ceil(s * (1.0 - 1e-12));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(rounded));
}

void validate(const SamplingPlan& plan) {
  if (plan.samples && *plan.samples < 1) throw ParameterError("sample count must be >= 1");
  if (!(plan.eps > 0.0)) throw ParameterError("eps must be positive");
  if (!(plan.delta > 0.0 && plan.delta < 1.0)) {
    throw ParameterError("delta must lie in (0, 1)");
  }
  if (plan.t_guess && !(*plan.t_guess >= 1.0)) {
    throw ParameterError("t_guess must be at least 1");
  }
}

std::uint64_t resolve_samples(const SamplingPlan& plan, Count universe_size, std::uint64_t m) {
  validate(plan);
  if (plan.samples) return *plan.samples;
  if (plan.t_guess) {
    return required_samples(static_cast<double>(universe_size), *plan.t_guess, plan.eps,
                            plan.delta);
  }
  return std::max<std::uint64_t>(1, m);
}

void finalize(Estimate& est) {
  if (est.samples == 0 || est.universe_size == 0) {
    est.t_hat = 0.0;
    return;
  }
  est.t_hat = static_cast<double>(est.hits) / static_cast<double>(est.samples) *
              static_cast<double>(est.universe_size) / 3.0 / est.scale;
}

std::vector<SampledTriple> draw_triples(const Graph& g, const TripleUniverse& universe,
                                        std::uint64_t count, SeededRng& rng) {
  const Count total = universe.total();
  if (total == 0) throw ParameterError("cannot sample from an empty universe");
  const auto offsets = g.offsets();
  const auto adjacency = g.adjacency();

  std::vector<SampledTriple> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Count r = rng.uniform_below(total);
    if (r < universe.wedge_total) {
      const auto center = static_cast<VertexId>(universe.wedge_sampler.find(r));
      auto list = g.neighbors_unchecked(center);
      const std::uint64_t first = rng.uniform_below(list.size());
      std::uint64_t second = rng.uniform_below(list.size() - 1);
      if (second >= first) ++second;
      out.push_back({list[first], list[second], center, false});
    } else {
      // Uniform (edge, apex) pair by rejection: a uniform adjacency slot is
      // a uniform undirected edge; drop apexes lying on the edge.
      for (;;) {
        const std::uint64_t slot = rng.uniform_below(adjacency.size());
        const auto u = static_cast<VertexId>(
            std::upper_bound(offsets.begin(), offsets.end(), slot) - offsets.begin() - 1);
        const VertexId v = adjacency[slot];
        const VertexId w = universe.heavy[rng.uniform_below(universe.heavy.size())];
        if (w != u && w != v) {
          out.push_back({u, v, w, true});
          break;
        }
      }
    }
  }
  return out;
}

std::uint64_t count_closed(const Graph& g, std::span<const SampledTriple> triples,
                           bool batched) {
  std::uint64_t hits = 0;
  if (!batched) {
    for (const auto& t : triples) {
      const bool closed = t.is_pair ? g.has_edge(t.a, t.apex) && g.has_edge(t.b, t.apex)
                                    : g.has_edge(t.a, t.b);
      hits += closed;
    }
    return hits;
  }

  struct Tagged {
    Edge edge;
    std::uint64_t triple;
  };
  std::vector<Tagged> tagged;
  tagged.reserve(triples.size() + triples.size() / 4);
  for (std::uint64_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    if (t.is_pair) {
      tagged.push_back({canonical_edge(t.a, t.apex), i});
      tagged.push_back({canonical_edge(t.b, t.apex), i});
    } else {
      tagged.push_back({canonical_edge(t.a, t.b), i});
    }
  }
  // Counting sort on the smaller endpoint, then a short sort per bucket.
  std::vector<std::uint64_t> start(g.n() + 1, 0);
  for (const auto& q : tagged) ++start[q.edge.u + 1];
  for (std::uint64_t u = 0; u < g.n(); ++u) start[u + 1] += start[u];
  {
    std::vector<Tagged> placed(tagged.size());
    std::vector<std::uint64_t> cursor(start.begin(), start.end() - 1);
    for (const auto& q : tagged) placed[cursor[q.edge.u]++] = q;
    tagged = std::move(placed);
  }
  for (std::uint64_t u = 0; u < g.n(); ++u) {
    std::sort(tagged.begin() + start[u], tagged.begin() + start[u + 1],
              [](const Tagged& x, const Tagged& y) { return x.edge.v < y.edge.v; });
  }

  QueryBatch batch;
  batch.queries.reserve(tagged.size());
  for (const auto& q : tagged) batch.queries.push_back(q.edge);
  batch_has_edge(g, batch);

  std::vector<std::uint8_t> present(triples.size(), 0);
  for (std::size_t i = 0; i < tagged.size(); ++i) present[tagged[i].triple] += batch.answers[i];
  for (std::uint64_t i = 0; i < triples.size(); ++i) {
    hits += present[i] == (triples[i].is_pair ? 2 : 1);
  }
  return hits;
}

namespace {

std::string chernoff_note(std::uint64_t hits, double delta) {
  if (hits == 0) return "no closed triples sampled; no relative error bound";
  // Plug-in Chernoff: relative error of the hit rate exceeds eps with
  // probability at most 2 exp(-eps^2 * hits / 2).
  const double eps = std::sqrt(2.0 * std::log(2.0 / delta) / static_cast<double>(hits));
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "Chernoff (plug-in): relative error <= %.4g with probability >= %.4g",
                eps, 1.0 - delta);
  return buf;
}

}  // namespace

Estimate sample_universe(const Graph& g, const TripleUniverse& universe,
                         const SamplingPlan& plan, SeededRng& rng) {
  Estimate est;
  est.seed = rng.seed();
  est.universe_size = universe.total();
  if (est.universe_size == 0) {
    validate(plan);
    est.empty_universe = true;
    est.ci_note = "empty triple universe (no wedges or edge-apex pairs)";
    return est;
  }
  est.samples = resolve_samples(plan, est.universe_size, g.m());
  const auto triples = draw_triples(g, universe, est.samples, rng);
  est.hits = count_closed(g, triples, plan.batched);
  finalize(est);
  est.ci_note = chernoff_note(est.hits, plan.delta);
  return est;
}

Estimate sample_simple(const Graph& g, const SamplingPlan& plan, SeededRng& rng) {
  return sample_universe(g, build_universe(g, UniverseMode::kSimple), plan, rng);
}

Estimate sample_hybrid(const Graph& g, const SamplingPlan& plan, SeededRng& rng,
                       std::optional<std::uint64_t> threshold) {
  return sample_universe(g, build_universe(g, UniverseMode::kHybrid, threshold), plan, rng);
}

Estimate estimate_sparsified(const Graph& g, const SparsifyParams& sparsify_params,
                             const SamplingPlan& plan, UniverseMode mode, SeededRng& rng,
                             std::optional<std::uint64_t> threshold) {
  const Graph sparse = sparsify(g, sparsify_params);
  Estimate est = sample_universe(sparse, build_universe(sparse, mode, threshold), plan, rng);
  const double p = sparsify_params.p;
  est.scale = p * p * p;
  finalize(est);
  return est;
}

}  // namespace tricount
