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

// Random-projection triangle estimator (desk scale).
//
// With R a k x n matrix of independent N(0, 1) entries and A the adjacency
// matrix, Y = sum over ordered adjacent pairs (u, v) of <R A_u, R A_v>
// equals sum_l r_l^T A^3 r_l, so E[Y] = k Tr(A^3) = 6 k (triangles) and
// Var[Y] = 2 k Tr(A^6). Tr(A^6) counts closed walks of length 6 (vertices
// and edges may repeat) and governs whether Y concentrates.

#ifndef TRICOUNT_PROJECTION_HPP_
#define TRICOUNT_PROJECTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricount/graph.hpp"

namespace tricount {

inline constexpr std::uint64_t kProjectionCap = 5000;

struct ProjectionParams {
  std::uint64_t k = 32;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

using WalkCount = unsigned __int128;

std::string to_string(WalkCount value);

struct ProjectionReport {
  std::vector<double> y_values;
  double t_hat_mean = 0.0;  // mean of Y / (6k)
  double y_stddev = 0.0;    // sample standard deviation of Y across trials
  std::optional<WalkCount> walks6;
  std::optional<double> condition_ratio;
};

// One Y per trial; trial i draws R from a generator seeded with seed + i.
// Throws CapExceededError when n exceeds `cap`, ParameterError when k or
// trials is zero.
ProjectionReport project_count(const Graph& g, const ProjectionParams& params,
                               std::uint64_t cap = kProjectionCap);

// Tr(A^6) = sum_u |A^3 e_u|^2, by three sparse products per vertex.
WalkCount closed_walks_6(const Graph& g, std::uint64_t cap = kProjectionCap);

// Tr(A^6) / (6 t)^2, or nullopt when the graph has no triangles.
std::optional<double> condition_check(const Graph& g, std::uint64_t cap = kProjectionCap);

// project_count plus walks6 and condition_ratio.
ProjectionReport project_and_diagnose(const Graph& g, const ProjectionParams& params,
                                      std::uint64_t cap = kProjectionCap);

}  // namespace tricount

#endif  // TRICOUNT_PROJECTION_HPP_
