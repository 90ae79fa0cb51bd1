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

// Edge sparsification: keep every edge independently with probability p.
// A triangle survives with probability p^3, so triangles(sparsified) / p^3
// is an unbiased estimate of the original count.

#ifndef TRICOUNT_SPARSIFIER_HPP_
#define TRICOUNT_SPARSIFIER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "tricount/graph.hpp"

namespace tricount {

struct SparsifyParams {
  double p = 1.0;  // in (0, 1]
  std::uint64_t seed = 0;
};

// Seed for the sparsification step derived from a run seed (splitmix64), so
// a sampler sharing the run seed keeps its own draws.
std::uint64_t derive_sparsify_seed(std::uint64_t seed);

// Throws ParameterError unless 0 < p <= 1.
void validate(const SparsifyParams& params);

// Same vertex set; edge i of g.edges() kept iff it is drawn by a geometric
// skip Bernoulli(p) pass over [0, m). p = 1 returns an identical graph.
Graph sparsify(const Graph& g, const SparsifyParams& params);

// Constant in the Chernoff-derived sufficiency condition
// p^3 * (t / Delta) * eps^2 >= c * d * ln n.
inline constexpr double kSufficiencyConstant = 4.0;

// Smallest p for which the sparsified count concentrates:
// min(1, (c d Delta ln n / (eps^2 t_guess))^{1/3}).
double sufficient_p(double n, double t_guess, double delta_max, double eps, double d,
                    double c = kSufficiencyConstant);

// p balancing sparsification cost against sampling cost:
// min(1, (sqrt(m) ln n / (t_guess eps^2))^{2/5}).
double recommend_p(double m, double n, double t_guess, double eps);

struct SweepPoint {
  double p = 0.0;
  std::uint64_t kept_edges = 0;
  Count triangles = 0;     // exact count on the sparsified graph
  double t_estimate = 0.0;  // triangles / p^3
};

// Exact-count-after-sparsification at each p of the grid, one independent
// draw per point (seed + grid index). A plateau in t_estimate marks a p
// that is large enough.
std::vector<SweepPoint> stability_sweep(const Graph& g, std::span<const double> p_grid,
                                        std::uint64_t seed);

}  // namespace tricount

#endif  // TRICOUNT_SPARSIFIER_HPP_
