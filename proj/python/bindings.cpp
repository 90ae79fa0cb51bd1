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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "tricount/error.hpp"
#include "tricount/exact.hpp"
#include "tricount/graph.hpp"
#include "tricount/io.hpp"
#include "tricount/projection.hpp"
#include "tricount/rng.hpp"
#include "tricount/sampler.hpp"
#include "tricount/sparsifier.hpp"
#include "tricount/streaming.hpp"

namespace py = pybind11;
using namespace tricount;

namespace {

py::int_ walk_count_to_int(WalkCount w) {
  return py::int_(py::str(to_string(w)));
}

Graph graph_from_edges(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
                       std::optional<std::uint64_t> n) {
  EdgeList el;
  el.edges = edges;
  el.declared_n = n;
  return build_graph(el);
}

Estimate run_sample(const Graph& g, const std::string& mode, std::optional<std::uint64_t> samples,
                    double eps, double delta, std::optional<double> t_guess, double p,
                    std::optional<std::uint64_t> threshold, std::uint64_t seed) {
  SamplingPlan plan;
  plan.samples = samples;
  plan.eps = eps;
  plan.delta = delta;
  plan.t_guess = t_guess;
  SeededRng rng(seed);
  if (p < 1.0) {
    return estimate_sparsified(g, {p, derive_sparsify_seed(seed)}, plan, parse_mode(mode), rng,
                               threshold);
  }
  return sample_universe(g, build_universe(g, parse_mode(mode), threshold), plan, rng);
}

StreamResult run_stream(EdgeStream& stream, std::optional<std::uint64_t> budget, double d,
                        bool verify_pass, std::optional<std::uint64_t> threshold,
                        std::uint64_t seed) {
  StreamOptions o;
  o.budget = budget;
  o.d = d;
  o.verify_pass = verify_pass;
  o.heavy_threshold = threshold;
  SeededRng rng(seed);
  return stream_estimate(stream, o, rng);
}

}  // namespace

PYBIND11_MODULE(_tricount, m) {
  m.doc() = "Exact and approximate triangle counting";

  static py::exception<Error> base(m, "TricountError");
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
  py::register_exception<OutOfRangeError>(m, "OutOfRangeError", base.ptr());
  py::register_exception<ContractError>(m, "ContractError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def_static("from_edges", &graph_from_edges, py::arg("edges"), py::arg("n") = py::none(),
                  "Build from (u, v) pairs; loops and duplicates are dropped.")
      .def_static(
          "parse", [](const std::string& text) { return build_graph(parse_edge_list(text)); },
          py::arg("text"))
      .def_static(
          "load",
          [](const std::filesystem::path& path, const std::string& format) {
            return load_graph(path, parse_format(format));
          },
          py::arg("path"), py::arg("format") = "auto")
      .def("save_binary", [](const Graph& g, const std::filesystem::path& p) { save_binary(g, p); })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("degree", &Graph::degree)
      .def("neighbors",
           [](const Graph& g, VertexId u) {
             auto nb = g.neighbors(u);
             return std::vector<VertexId>(nb.begin(), nb.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("max_degree", &Graph::max_degree)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<VertexId, VertexId>> out;
             g.for_each_edge([&](VertexId u, VertexId v) { out.emplace_back(u, v); });
             return out;
           })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) + ">";
      });

  py::class_<ExactResult>(m, "ExactResult")
      .def_readonly("t", &ExactResult::t)
      .def_readonly("delta_max", &ExactResult::delta_max)
      .def_readonly("per_edge_counts", &ExactResult::per_edge_counts);
  m.def("count_exact", &count_exact, py::arg("g"), py::arg("per_edge") = false);
  m.def("count_brute", &count_brute, py::arg("g"), py::arg("cap") = kBruteForceCap);

  m.def(
      "bernoulli_subset",
      [](std::uint64_t n, double p, std::uint64_t seed) {
        SeededRng rng(seed);
        return bernoulli_subset(n, p, rng);
      },
      py::arg("n"), py::arg("p"), py::arg("seed") = 1);

  m.def(
      "sparsify", [](const Graph& g, double p, std::uint64_t seed) { return sparsify(g, {p, seed}); },
      py::arg("g"), py::arg("p"), py::arg("seed") = 1);
  m.def("sufficient_p", &sufficient_p, py::arg("n"), py::arg("t_guess"), py::arg("delta_max"),
        py::arg("eps"), py::arg("d"), py::arg("c") = kSufficiencyConstant);
  m.def("recommend_p", &recommend_p, py::arg("m"), py::arg("n"), py::arg("t_guess"),
        py::arg("eps"));

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("t_hat", &Estimate::t_hat)
      .def_readonly("samples", &Estimate::samples)
      .def_readonly("hits", &Estimate::hits)
      .def_readonly("universe_size", &Estimate::universe_size)
      .def_readonly("scale", &Estimate::scale)
      .def_readonly("seed", &Estimate::seed)
      .def_readonly("empty_universe", &Estimate::empty_universe)
      .def_readonly("ci_note", &Estimate::ci_note);

  m.def(
      "universe_size",
      [](const Graph& g, const std::string& mode, std::optional<std::uint64_t> threshold) {
        return build_universe(g, parse_mode(mode), threshold).total();
      },
      py::arg("g"), py::arg("mode") = "hybrid", py::arg("threshold") = py::none());
  m.def("required_samples", &required_samples, py::arg("universe_size"), py::arg("t_guess"),
        py::arg("eps"), py::arg("delta"));
  m.def("sample", &run_sample, py::arg("g"), py::arg("mode") = "hybrid",
        py::arg("samples") = py::none(), py::arg("eps") = 0.1, py::arg("delta") = 0.05,
        py::arg("t_guess") = py::none(), py::arg("p") = 1.0, py::arg("threshold") = py::none(),
        py::arg("seed") = 1);

  py::class_<MemoryReport>(m, "MemoryReport")
      .def_readonly("peak_items", &MemoryReport::peak_items)
      .def_readonly("bound", &MemoryReport::bound)
      .def_readonly("bound_ok", &MemoryReport::bound_ok);
  py::class_<StreamResult>(m, "StreamResult")
      .def_readonly("estimate", &StreamResult::estimate)
      .def_readonly("memory", &StreamResult::memory)
      .def_readonly("passes", &StreamResult::passes)
      .def_readonly("m", &StreamResult::m)
      .def_readonly("n", &StreamResult::n)
      .def_readonly("heavy", &StreamResult::heavy);
  m.def(
      "stream_estimate",
      [](const Graph& g, std::optional<std::uint64_t> budget, double d, bool verify_pass,
         std::optional<std::uint64_t> threshold, std::uint64_t seed) {
        GraphEdgeStream stream(g);
        return run_stream(stream, budget, d, verify_pass, threshold, seed);
      },
      py::arg("g"), py::arg("budget") = py::none(), py::arg("d") = 2.0,
      py::arg("verify_pass") = true, py::arg("threshold") = py::none(), py::arg("seed") = 1);
  m.def(
      "stream_file",
      [](const std::filesystem::path& path, std::optional<std::uint64_t> budget, double d,
         bool verify_pass, std::optional<std::uint64_t> threshold, std::uint64_t seed) {
        BinaryFileEdgeStream stream(path);
        return run_stream(stream, budget, d, verify_pass, threshold, seed);
      },
      py::arg("path"), py::arg("budget") = py::none(), py::arg("d") = 2.0,
      py::arg("verify_pass") = true, py::arg("threshold") = py::none(), py::arg("seed") = 1);

  py::class_<ProjectionReport>(m, "ProjectionReport")
      .def_readonly("y_values", &ProjectionReport::y_values)
      .def_readonly("t_hat_mean", &ProjectionReport::t_hat_mean)
      .def_readonly("y_stddev", &ProjectionReport::y_stddev)
      .def_property_readonly("walks6",
                             [](const ProjectionReport& r) -> py::object {
                               if (!r.walks6) return py::none();
                               return walk_count_to_int(*r.walks6);
                             })
      .def_readonly("condition_ratio", &ProjectionReport::condition_ratio);
  m.def(
      "project_count",
      [](const Graph& g, std::uint64_t k, std::uint64_t trials, std::uint64_t seed,
         bool diagnose) {
        const ProjectionParams params{k, trials, seed};
        return diagnose ? project_and_diagnose(g, params) : project_count(g, params);
      },
      py::arg("g"), py::arg("k") = 32, py::arg("trials") = 1, py::arg("seed") = 1,
      py::arg("diagnose") = false);
  m.def(
      "closed_walks_6", [](const Graph& g) { return walk_count_to_int(closed_walks_6(g)); },
      py::arg("g"));
  m.def("condition_check", [](const Graph& g) { return condition_check(g); }, py::arg("g"));
}
