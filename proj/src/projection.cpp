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

#include "tricount/projection.hpp"

#include <algorithm>
#include <cmath>

#include "tricount/error.hpp"
#include "tricount/exact.hpp"
#include "tricount/rng.hpp"

namespace tricount {

namespace {

void check_cap(const Graph& g, std::uint64_t cap) {
  if (g.n() > cap) {
    throw CapExceededError("dense projection refused: n = " + std::to_string(g.n()) +
                           " exceeds cap " + std::to_string(cap));
  }
}

double projected_quadratic_form(const Graph& g, std::uint64_t k, SeededRng& rng) {
  const std::uint64_t n = g.n();
  // Row r of `r_t` is column r of R, so rows are contiguous k-vectors.
  std::vector<double> r_t(n * k);
  for (std::uint64_t l = 0; l < k; ++l) {
    for (std::uint64_t i = 0; i < n; ++i) r_t[i * k + l] = rng.normal();
  }
  // P_u = R A_u = sum of R columns over N(u).
  std::vector<double> p(n * k, 0.0);
  for (std::uint64_t u = 0; u < n; ++u) {
    double* pu = &p[u * k];
    for (VertexId w : g.neighbors_unchecked(static_cast<VertexId>(u))) {
      const double* rw = &r_t[static_cast<std::uint64_t>(w) * k];
      for (std::uint64_t l = 0; l < k; ++l) pu[l] += rw[l];
    }
  }
  double y = 0.0;
  for (std::uint64_t u = 0; u < n; ++u) {
    const double* pu = &p[u * k];
    for (VertexId v : g.neighbors_unchecked(static_cast<VertexId>(u))) {
      const double* pv = &p[static_cast<std::uint64_t>(v) * k];
      double dot = 0.0;
      for (std::uint64_t l = 0; l < k; ++l) dot += pu[l] * pv[l];
      y += dot;
    }
  }
  return y;
}

}  // namespace

std::string to_string(WalkCount value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ProjectionReport project_count(const Graph& g, const ProjectionParams& params,
                               std::uint64_t cap) {
  if (params.k < 1) throw ParameterError("projection dimension k must be at least 1");
  if (params.trials < 1) throw ParameterError("trial count must be at least 1");
  check_cap(g, cap);

  ProjectionReport report;
  report.y_values.reserve(params.trials);
  for (std::uint64_t i = 0; i < params.trials; ++i) {
    SeededRng rng(params.seed + i);
    report.y_values.push_back(projected_quadratic_form(g, params.k, rng));
  }
  const double trials = static_cast<double>(params.trials);
  double mean_y = 0.0;
  for (double y : report.y_values) mean_y += y;
  mean_y /= trials;
  double ss = 0.0;
  for (double y : report.y_values) ss += (y - mean_y) * (y - mean_y);
  report.y_stddev = params.trials > 1 ? std::sqrt(ss / (trials - 1.0)) : 0.0;
  report.t_hat_mean = mean_y / (6.0 * static_cast<double>(params.k));
  return report;
}

WalkCount closed_walks_6(const Graph& g, std::uint64_t cap) {
  check_cap(g, cap);
  const std::uint64_t n = g.n();
  std::vector<std::uint64_t> x(n), y(n);
  auto multiply = [&](const std::vector<std::uint64_t>& in, std::vector<std::uint64_t>& out) {
    for (std::uint64_t v = 0; v < n; ++v) {
      std::uint64_t sum = 0;
      for (VertexId w : g.neighbors_unchecked(static_cast<VertexId>(v))) sum += in[w];
      out[v] = sum;
    }
  };
  WalkCount total = 0;
  for (std::uint64_t u = 0; u < n; ++u) {
    if (g.degree(static_cast<VertexId>(u)) == 0) continue;
    std::fill(x.begin(), x.end(), 0);
    x[u] = 1;
    multiply(x, y);
    multiply(y, x);
    multiply(x, y);
    for (std::uint64_t v = 0; v < n; ++v) {
      total += static_cast<WalkCount>(y[v]) * y[v];
    }
  }
  return total;
}

std::optional<double> condition_check(const Graph& g, std::uint64_t cap) {
  check_cap(g, cap);
  const Count t = count_exact(g).t;
  if (t == 0) return std::nullopt;
  const double six_t = 6.0 * static_cast<double>(t);
  return static_cast<double>(closed_walks_6(g, cap)) / (six_t * six_t);
}

ProjectionReport project_and_diagnose(const Graph& g, const ProjectionParams& params,
                                      std::uint64_t cap) {
  ProjectionReport report = project_count(g, params, cap);
  report.walks6 = closed_walks_6(g, cap);
  const Count t = count_exact(g).t;
  if (t > 0) {
    const double six_t = 6.0 * static_cast<double>(t);
    report.condition_ratio = static_cast<double>(*report.walks6) / (six_t * six_t);
  }
  return report;
}

}  // namespace tricount
