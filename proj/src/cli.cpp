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

#include "tricount/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricount/error.hpp"
#include "tricount/exact.hpp"
#include "tricount/io.hpp"
#include "tricount/projection.hpp"
#include "tricount/sampler.hpp"
#include "tricount/sparsifier.hpp"
#include "tricount/streaming.hpp"

namespace tricount::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}


json relative_error(double estimate, Count exact) {
  if (exact == 0) return estimate == 0.0 ? json(0.0) : json(nullptr);
  return std::abs(estimate - static_cast<double>(exact)) / static_cast<double>(exact);
}

struct GraphInput {
  std::string path;
  std::string format = "auto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("graph", path, "Graph file (text edge list or binary adjacency)")
        ->required();
    cmd->add_option("--format", format, "Input format: text|bin (default: by extension)")
        ->check(CLI::IsMember({"auto", "text", "bin"}));
  }

  Graph load() const { return load_graph(path, parse_format(format)); }
};

struct SeedOption {
  std::optional<std::uint64_t> flag;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--seed", flag, std::string("Random seed (default: $") + kSeedEnv + " or 1)");
  }

  std::uint64_t value() const {
    if (flag) return *flag;
    if (const char* env = std::getenv(kSeedEnv)) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw ParameterError(std::string(kSeedEnv) + " is not an unsigned integer");
      }
    }
    return 1;
  }
};

json estimate_json(const Estimate& est) {
  return {{"t_hat", est.t_hat},     {"s", est.samples},
          {"hits", est.hits},       {"universe", est.universe_size},
          {"scale", est.scale},     {"seed", est.seed},
          {"empty_universe", est.empty_universe}, {"ci_note", est.ci_note}};
}

json graph_json(const std::string& path, const Graph& g) {
  return {{"graph", path}, {"n", g.n()}, {"m", g.m()}};
}

// One bench variant: exact / simple / hybrid counting, optionally after
// sparsification.
double run_variant(const Graph& g, const std::string& variant, double p, std::uint64_t seed,
                   std::optional<std::uint64_t> samples) {
  const SparsifyParams sp{p, derive_sparsify_seed(seed)};
  if (variant == "exact") {
    const Graph h = sparsify(g, sp);
    return static_cast<double>(count_exact(h).t) / (p * p * p);
  }
  SamplingPlan plan;
  plan.samples = samples;
  SeededRng rng(seed);
  return estimate_sparsified(g, sp, plan, parse_mode(variant), rng).t_hat;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact and approximate triangle counting", "tricount");
  app.require_subcommand(1);

  // exact
  GraphInput exact_in;
  bool per_edge = false;
  auto* exact_cmd = app.add_subcommand("exact", "Exact triangle count");
  exact_in.add_to(exact_cmd);
  exact_cmd->add_flag("--per-edge", per_edge, "Compute per-edge counts and delta_max");

  // sample
  GraphInput sample_in;
  SeedOption sample_seed;
  std::string mode = "hybrid";
  std::optional<std::uint64_t> samples;
  std::optional<double> t_guess;
  std::optional<std::uint64_t> threshold;
  double eps = 0.1, delta = 0.05, sample_p = 1.0;
  bool sample_compare = false, unbatched = false;
  auto* sample_cmd = app.add_subcommand("sample", "Triple-sampling estimate");
  sample_in.add_to(sample_cmd);
  sample_seed.add_to(sample_cmd);
  sample_cmd->add_option("--mode", mode, "simple|hybrid")->check(CLI::IsMember({"simple", "hybrid"}));
  auto* samples_opt = sample_cmd->add_option("--samples", samples, "Number of sampled triples");
  sample_cmd->add_option("--eps", eps, "Relative error target");
  sample_cmd->add_option("--delta", delta, "Failure probability");
  sample_cmd->add_option("--t-guess", t_guess, "Prior triangle estimate for sample sizing")
      ->excludes(samples_opt);
  sample_cmd->add_option("--p", sample_p, "Sparsify with this edge probability first");
  sample_cmd->add_option("--threshold", threshold, "Hybrid degree threshold (default ceil(sqrt(m)))");
  sample_cmd->add_flag("--exact-compare", sample_compare, "Also report relative error");
  sample_cmd->add_flag("--unbatched", unbatched, "Resolve queries by binary search");

  // sparsify
  GraphInput sparsify_in;
  SeedOption sparsify_seed_opt;
  double sparsify_p = 0.1;
  std::vector<double> p_grid;
  std::optional<double> sp_t_guess, sp_delta_max;
  double sp_eps = 0.1, sp_d = 1.0;
  bool sparsify_compare = false;
  auto* sparsify_cmd = app.add_subcommand("sparsify", "Edge sparsification estimate");
  sparsify_in.add_to(sparsify_cmd);
  sparsify_seed_opt.add_to(sparsify_cmd);
  auto* p_opt = sparsify_cmd->add_option("--p", sparsify_p, "Edge retention probability");
  sparsify_cmd->add_option("--p-grid", p_grid, "Stability sweep over these p values")
      ->delimiter(',')
      ->excludes(p_opt);
  sparsify_cmd->add_option("--t-guess", sp_t_guess, "Report recommended p for this estimate");
  sparsify_cmd->add_option("--eps", sp_eps, "Relative error target for recommended p");
  sparsify_cmd->add_option("--delta-max", sp_delta_max, "Max triangles per edge (sufficient p)");
  sparsify_cmd->add_option("--d", sp_d, "Confidence exponent (sufficient p)");
  sparsify_cmd->add_flag("--exact-compare", sparsify_compare, "Also report relative error");

  // stream
  GraphInput stream_in;
  SeedOption stream_seed;
  StreamOptions stream_opts;
  bool no_verify = false, stream_compare = false;
  auto* stream_cmd = app.add_subcommand("stream", "Three-pass semi-streaming estimate");
  stream_in.add_to(stream_cmd);
  stream_seed.add_to(stream_cmd);
  stream_cmd->add_option("--budget", stream_opts.budget, "Triple budget s (default m)");
  stream_cmd->add_option("--d", stream_opts.d, "Heavy-vertex confidence exponent");
  stream_cmd->add_option("--threshold", stream_opts.heavy_threshold,
                         "Heavy iff degree exceeds this (default: degree >= sqrt(m))");
  stream_cmd->add_flag("--no-verify-pass", no_verify, "Skip the candidate verification pass");
  stream_cmd->add_flag("--exact-compare", stream_compare, "Also report relative error");

  // rp
  GraphInput rp_in;
  SeedOption rp_seed;
  ProjectionParams rp_params;
  bool diagnose = false, rp_compare = false;
  auto* rp_cmd = app.add_subcommand("rp", "Random-projection estimate (desk scale)");
  rp_in.add_to(rp_cmd);
  rp_seed.add_to(rp_cmd);
  rp_cmd->add_option("--k", rp_params.k, "Projection dimension");
  rp_cmd->add_option("--trials", rp_params.trials, "Independent projections");
  rp_cmd->add_flag("--diagnose", diagnose, "Report closed 6-walks and the condition ratio");
  rp_cmd->add_flag("--exact-compare", rp_compare, "Also report relative error");

  // bench
  GraphInput bench_in;
  SeedOption bench_seed;
  std::uint64_t bench_trials = 5;
  unsigned jobs = 1;
  double bench_p = 0.1;
  std::optional<std::uint64_t> bench_samples;
  auto* bench_cmd = app.add_subcommand("bench", "Six-variant benchmark matrix");
  bench_in.add_to(bench_cmd);
  bench_seed.add_to(bench_cmd);
  bench_cmd->add_option("--trials", bench_trials, "Trials per variant")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--p", bench_p, "Sparsification probability for the sparsified half");
  bench_cmd->add_option("--samples", bench_samples, "Sampled triples (default m of the sampled graph)");
  bench_cmd->add_option("--jobs", jobs, "Worker threads for trials")->check(CLI::PositiveNumber);

  // convert
  GraphInput convert_in;
  std::string convert_out;
  auto* convert_cmd = app.add_subcommand("convert", "Write a graph in binary adjacency format");
  convert_in.add_to(convert_cmd);
  convert_cmd->add_option("output", convert_out, "Binary output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, err, err);
  }

  json report;
  try {
    if (exact_cmd->parsed()) {
      const Graph g = exact_in.load();
      const auto start = Clock::now();
      const ExactResult r = count_exact(g, per_edge);
      report = graph_json(exact_in.path, g);
      report["subcommand"] = "exact";
      report["t"] = r.t;
      report["delta_max"] = r.delta_max ? json(*r.delta_max) : json(nullptr);
      report["elapsed_ms"] = elapsed_ms(start);
    } else if (sample_cmd->parsed()) {
      const Graph g = sample_in.load();
      SamplingPlan plan;
      plan.samples = samples;
      plan.eps = eps;
      plan.delta = delta;
      plan.t_guess = t_guess;
      plan.batched = !unbatched;
      const std::uint64_t seed = sample_seed.value();
      const auto start = Clock::now();
      SeededRng rng(seed);
      const Estimate est = estimate_sparsified(g, {sample_p, derive_sparsify_seed(seed)}, plan,
                                               parse_mode(mode), rng, threshold);
      const double ms = elapsed_ms(start);
      report = graph_json(sample_in.path, g);
      report["subcommand"] = "sample";
      report["mode"] = mode;
      report["p"] = sample_p;
      report.update(estimate_json(est));
      report["elapsed_ms"] = ms;
      if (sample_compare) report["relative_error"] = relative_error(est.t_hat, count_exact(g).t);
    } else if (sparsify_cmd->parsed()) {
      const Graph g = sparsify_in.load();
      const std::uint64_t seed = sparsify_seed_opt.value();
      report = graph_json(sparsify_in.path, g);
      report["subcommand"] = "sparsify";
      report["seed"] = seed;
      std::optional<Count> exact;
      if (sparsify_compare) exact = count_exact(g).t;
      const auto start = Clock::now();
      if (!p_grid.empty()) {
        json rows = json::array();
        for (const SweepPoint& pt : stability_sweep(g, p_grid, seed)) {
          json row = {{"p", pt.p},
                      {"kept_edges", pt.kept_edges},
                      {"triangles", pt.triangles},
                      {"t_hat", pt.t_estimate}};
          if (exact) row["relative_error"] = relative_error(pt.t_estimate, *exact);
          rows.push_back(row);
        }
        report["sweep"] = rows;
      } else {
        const Graph h = sparsify(g, {sparsify_p, seed});
        const Count tri = count_exact(h).t;
        const double t_hat = static_cast<double>(tri) / std::pow(sparsify_p, 3);
        report["p"] = sparsify_p;
        report["kept_edges"] = h.m();
        report["triangles"] = tri;
        report["t_hat"] = t_hat;
        if (exact) report["relative_error"] = relative_error(t_hat, *exact);
      }
      report["elapsed_ms"] = elapsed_ms(start);
      if (sp_t_guess) {
        report["recommended_p"] = recommend_p(static_cast<double>(std::max<std::uint64_t>(g.m(), 1)),
                                              static_cast<double>(g.n()), *sp_t_guess, sp_eps);
        if (sp_delta_max) {
          report["sufficient_p"] = sufficient_p(static_cast<double>(g.n()), *sp_t_guess,
                                                *sp_delta_max, sp_eps, sp_d);
        }
      }
    } else if (stream_cmd->parsed()) {
      stream_opts.verify_pass = !no_verify;
      const std::uint64_t seed = stream_seed.value();
      const auto format = resolve_format(stream_in.path, parse_format(stream_in.format));
      std::optional<Graph> in_memory;
      std::unique_ptr<EdgeStream> stream;
      if (format == GraphFormat::kBinary) {
        stream = std::make_unique<BinaryFileEdgeStream>(stream_in.path);
      } else {
        in_memory = stream_in.load();
        stream = std::make_unique<GraphEdgeStream>(*in_memory);
      }
      const auto start = Clock::now();
      SeededRng rng(seed);
      const StreamResult r = stream_estimate(*stream, stream_opts, rng);
      const double ms = elapsed_ms(start);
      report = {{"graph", stream_in.path}, {"n", r.n}, {"m", r.m}};
      report["subcommand"] = "stream";
      report.update(estimate_json(r.estimate));
      report["passes"] = r.passes;
      report["heavy"] = r.heavy.size();
      report["peak_items"] = r.memory.peak_items;
      report["peak_items_by_pass"] = {r.memory.peak_items_pass1, r.memory.peak_items_verify,
                                      r.memory.peak_items_pass2, r.memory.peak_items_pass3};
      report["bound"] = r.memory.bound;
      report["bound_ok"] = r.memory.bound_ok;
      report["elapsed_ms"] = ms;
      if (stream_compare) {
        const Graph g = in_memory ? *in_memory : stream_in.load();
        report["relative_error"] = relative_error(r.estimate.t_hat, count_exact(g).t);
      }
    } else if (rp_cmd->parsed()) {
      const Graph g = rp_in.load();
      rp_params.seed = rp_seed.value();
      const auto start = Clock::now();
      const ProjectionReport r =
          diagnose ? project_and_diagnose(g, rp_params) : project_count(g, rp_params);
      const double ms = elapsed_ms(start);
      report = graph_json(rp_in.path, g);
      report["subcommand"] = "rp";
      report["k"] = rp_params.k;
      report["trials"] = rp_params.trials;
      report["seed"] = rp_params.seed;
      report["t_hat_mean"] = r.t_hat_mean;
      report["y_stddev"] = r.y_stddev;
      report["y_values"] = r.y_values;
      report["walks6"] = nullptr;
      report["condition_ratio"] = nullptr;
      if (r.walks6) {
        // Exact count; emitted as a string only when it exceeds 64 bits.
        if (*r.walks6 <= std::numeric_limits<std::uint64_t>::max()) {
          report["walks6"] = static_cast<std::uint64_t>(*r.walks6);
        } else {
          report["walks6"] = to_string(*r.walks6);
        }
      }
      if (r.condition_ratio) report["condition_ratio"] = *r.condition_ratio;
      report["elapsed_ms"] = ms;
      if (rp_compare) report["relative_error"] = relative_error(r.t_hat_mean, count_exact(g).t);
    } else if (bench_cmd->parsed()) {
      const Graph g = bench_in.load();
      const std::uint64_t seed = bench_seed.value();
      if (!(bench_p > 0.0 && bench_p <= 1.0)) {
        throw ParameterError("--p must lie in (0, 1]");
      }
      const auto bench_start = Clock::now();
      const Count exact = count_exact(g).t;
      report = graph_json(bench_in.path, g);
      report["subcommand"] = "bench";
      report["seed"] = seed;
      report["trials"] = bench_trials;
      report["t_exact"] = exact;

      struct Cell {
        std::string variant;
        double p;
      };
      std::vector<Cell> cells;
      for (double p : {1.0, bench_p}) {
        for (const char* v : {"exact", "simple", "hybrid"}) cells.push_back({v, p});
      }
      // Every (cell, trial) job writes its own slot; trial i uses seed + i
      // whatever the thread count.
      const std::size_t total_jobs = cells.size() * bench_trials;
      std::vector<double> estimates(total_jobs), times(total_jobs);
      std::vector<std::string> failures;
      std::mutex failures_mutex;
      auto work = [&](std::size_t first) {
        for (std::size_t j = first; j < total_jobs; j += jobs) {
          const Cell& cell = cells[j / bench_trials];
          const std::uint64_t trial = j % bench_trials;
          try {
            const auto start = Clock::now();
            estimates[j] = run_variant(g, cell.variant, cell.p, seed + trial, bench_samples);
            times[j] = elapsed_ms(start);
          } catch (const std::exception& e) {
            std::lock_guard lock(failures_mutex);
            failures.emplace_back(e.what());
          }
        }
      };
      std::vector<std::thread> workers;
      for (unsigned w = 1; w < jobs; ++w) workers.emplace_back(work, w);
      work(0);
      for (auto& w : workers) w.join();
      if (!failures.empty()) throw Error(failures.front());

      json rows = json::array();
      for (std::size_t c = 0; c < cells.size(); ++c) {
        double err_sum = 0.0, time_sum = 0.0, est_sum = 0.0;
        bool err_defined = true;
        for (std::uint64_t i = 0; i < bench_trials; ++i) {
          const std::size_t j = c * bench_trials + i;
          const json e = relative_error(estimates[j], exact);
          if (e.is_null()) {
            err_defined = false;
          } else {
            err_sum += e.get<double>();
          }
          time_sum += times[j];
          est_sum += estimates[j];
        }
        const double trials = static_cast<double>(bench_trials);
        rows.push_back({{"variant", cells[c].variant},
                        {"sparsified", cells[c].p < 1.0},
                        {"p", cells[c].p},
                        {"mean_t_hat", est_sum / trials},
                        {"err_pct", err_defined ? json(100.0 * err_sum / trials) : json(nullptr)},
                        {"time_ms", time_sum / trials}});
      }
      report["rows"] = rows;
      report["elapsed_ms"] = elapsed_ms(bench_start);
    } else if (convert_cmd->parsed()) {
      const Graph g = convert_in.load();
      const auto start = Clock::now();
      save_binary(g, convert_out);
      const double ms = elapsed_ms(start);
      report = graph_json(convert_in.path, g);
      report["subcommand"] = "convert";
      report["output"] = convert_out;
      report["elapsed_ms"] = ms;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  out << report.dump(2) << "\n";
  return 0;
}

}  // namespace tricount::cli
