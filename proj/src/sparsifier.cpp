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

#include "tricount/sparsifier.hpp"

#include <algorithm>
#include <cmath>

#include "tricount/error.hpp"
#include "tricount/exact.hpp"
#include "tricount/rng.hpp"

namespace tricount {

std::uint64_t derive_sparsify_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void validate(const SparsifyParams& params) {
  if (!(params.p > 0.0 && params.p <= 1.0)) {
    throw ParameterError("sparsification probability must lie in (0, 1]");
  }
}

Graph sparsify(const Graph& g, const SparsifyParams& params) {
  validate(params);
  if (params.p == 1.0) return g;

  SeededRng rng(params.seed);
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(g.m() * params.p * 1.1) + 16);

  // Walk the canonical edge sequence and the skip sequence together, so the
  // edge list is never materialized.
  std::uint64_t index = 0;
  std::uint64_t target = 0;
  bool have_target = false;
  auto next_target = [&] {
    std::uint64_t skip = geometric_skip(params.p, rng);
    have_target = skip <= g.m() - target;
    target += skip;  // target is one past the next kept index
  };
  next_target();
  g.for_each_edge([&](VertexId u, VertexId v) {
    if (have_target && index + 1 == target) {
      kept.push_back({u, v});
      next_target();
    }
    ++index;
  });
  return Graph::from_canonical_edges(g.n(), kept);
}

double sufficient_p(double n, double t_guess, double delta_max, double eps, double d,
                    double c) {
  if (!(t_guess > 0.0)) throw ParameterError("t_guess must be positive");
  if (!(delta_max >= 1.0)) throw ParameterError("delta_max must be at least 1");
  if (!(eps > 0.0 && eps <= 1.0)) throw ParameterError("eps must lie in (0, 1]");
  if (!(d >= 1.0)) throw ParameterError("confidence exponent d must be at least 1");
  if (!(n >= 1.0)) throw ParameterError("n must be at least 1");
  const double cube = c * d * delta_max * std::log(n) / (eps * eps * t_guess);
  return std::min(1.0, std::cbrt(cube));
}

double recommend_p(double m, double n, double t_guess, double eps) {
  if (!(m >= 1.0)) throw ParameterError("m must be at least 1");
  if (!(t_guess > 0.0)) throw ParameterError("t_guess must be positive");
  if (!(eps > 0.0)) throw ParameterError("eps must be positive");
  if (!(n >= 1.0)) throw ParameterError("n must be at least 1");
  const double ratio = std::sqrt(m) * std::log(n) / (t_guess * eps * eps);
  return std::min(1.0, std::pow(ratio, 0.4));
}

std::vector<SweepPoint> stability_sweep(const Graph& g, std::span<const double> p_grid,
                                        std::uint64_t seed) {
  std::vector<SweepPoint> out;
  out.reserve(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    Graph h = sparsify(g, {p, seed + i});
    SweepPoint point;
    point.p = p;
    point.kept_edges = h.m();
    point.triangles = count_exact(h).t;
    point.t_estimate = static_cast<double>(point.triangles) / (p * p * p);
    out.push_back(point);
  }
  return out;
}

}  // namespace tricount
