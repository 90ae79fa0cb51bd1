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

// Triple-sampling triangle estimators.
//
// The triple universe U is a multiset of vertex triples, each of which
// already has two of its three edges present:
//
//  * a wedge (center c; a, b) with a, b distinct neighbors of c, for every
//    light center c (deg(c) <= threshold);
//  * an edge-apex pair (edge {a, b}; c) for every edge and every heavy
//    vertex c (deg(c) > threshold) that is not an endpoint of the edge.
//
// Simple mode treats every vertex as light. A triangle appears in U exactly
// three times, once per corner: as a wedge when the corner is light, as a
// pair with the opposite edge when it is heavy. Sampling s triples uniformly
// from U and counting closed ones (`hits`) therefore gives the unbiased
// estimate t_hat = (hits / s) * |U| / 3.

#ifndef TRICOUNT_SAMPLER_HPP_
#define TRICOUNT_SAMPLER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricount/graph.hpp"
#include "tricount/rng.hpp"
#include "tricount/sparsifier.hpp"

namespace tricount {

enum class UniverseMode { kSimple, kHybrid };

UniverseMode parse_mode(const std::string& name);
const char* to_string(UniverseMode mode);

// ceil(sqrt(m)), at least 1.
std::uint64_t default_threshold(std::uint64_t m);

struct TripleUniverse {
  UniverseMode mode = UniverseMode::kSimple;
  std::uint64_t threshold = 0;
  std::vector<Count> wedge_weight;  // C(deg, 2) for light vertices, else 0
  std::vector<VertexId> heavy;      // ascending
  std::vector<char> is_heavy;
  Count wedge_total = 0;
  // Number of (edge, heavy apex not on the edge) pairs:
  // m * |heavy| - sum of heavy degrees.
  Count pair_total = 0;
  WeightedSampler wedge_sampler;

  Count total() const { return wedge_total + pair_total; }
};

// Simple mode ignores `threshold`; hybrid mode defaults it to ceil(sqrt(m)).
// A vertex whose degree equals the threshold is light.
TripleUniverse build_universe(const Graph& g, UniverseMode mode,
                              std::optional<std::uint64_t> threshold = std::nullopt);

// Hybrid universe over an explicit heavy set, as produced by the streaming
// heavy-vertex pass. `heavy` need not be sorted; duplicates are ignored.
TripleUniverse build_universe_with_heavy(const Graph& g, std::span<const VertexId> heavy);

// Sample count from the Chernoff bound 2 exp(-eps^2 t s / (2|U|)) <= delta:
// ceil(2 (|U| / t_guess) ln(2 / delta) / eps^2).
std::uint64_t required_samples(double universe_size, double t_guess, double eps,
                               double delta);

struct SamplingPlan {
  // Explicit sample count. When unset, derived from (eps, delta, t_guess) if
  // t_guess is given, else the budget defaults to m.
  std::optional<std::uint64_t> samples;
  double eps = 0.1;
  double delta = 0.05;
  std::optional<double> t_guess;
  // Resolve closing-edge queries as one sorted batch (merge pass) rather
  // than per-query binary search. Results are identical.
  bool batched = true;
};

void validate(const SamplingPlan& plan);

std::uint64_t resolve_samples(const SamplingPlan& plan, Count universe_size, std::uint64_t m);

// A triple from U with its two known edges. For a wedge, `apex` is the
// center and {a, b} the unknown edge; for a pair, {a, b} is the known edge
// and both apex edges are unknown. The triple is closed iff {a, b, apex}
// is a triangle.
struct SampledTriple {
  VertexId a = 0;
  VertexId b = 0;
  VertexId apex = 0;
  bool is_pair = false;

  friend bool operator==(const SampledTriple&, const SampledTriple&) = default;
};

struct Estimate {
  double t_hat = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  Count universe_size = 0;
  double scale = 1.0;  // p^3 when the graph was sparsified first
  std::uint64_t seed = 0;
  bool empty_universe = false;
  std::string ci_note;
};

// Fills t_hat from hits, samples, universe_size and scale:
// (hits / samples) * universe_size / 3 / scale, or 0 without samples.
void finalize(Estimate& est);

// Draws `count` triples uniformly (with replacement) from U.
std::vector<SampledTriple> draw_triples(const Graph& g, const TripleUniverse& universe,
                                        std::uint64_t count, SeededRng& rng);

// Number of closed triples, resolving the unknown edges either with one
// sorted batch or with per-query binary search.
std::uint64_t count_closed(const Graph& g, std::span<const SampledTriple> triples,
                           bool batched = true);

Estimate sample_universe(const Graph& g, const TripleUniverse& universe,
                         const SamplingPlan& plan, SeededRng& rng);

// Wedge sampling over every vertex.
Estimate sample_simple(const Graph& g, const SamplingPlan& plan, SeededRng& rng);

// Wedges at light vertices plus edge-apex pairs for heavy vertices.
Estimate sample_hybrid(const Graph& g, const SamplingPlan& plan, SeededRng& rng,
                       std::optional<std::uint64_t> threshold = std::nullopt);

// Sparsify with `sparsify_params`, sample the result, and rescale by p^3.
// The sampling budget and hybrid threshold refer to the sparsified graph.
Estimate estimate_sparsified(const Graph& g, const SparsifyParams& sparsify_params,
                             const SamplingPlan& plan, UniverseMode mode, SeededRng& rng,
                             std::optional<std::uint64_t> threshold = std::nullopt);

}  // namespace tricount

#endif  // TRICOUNT_SAMPLER_HPP_
