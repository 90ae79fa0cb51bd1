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

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tricount/cli.hpp"
#include "tricount/graph.hpp"
#include "tricount/io.hpp"

using namespace tricount;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tricount_cli_" + name);
}

std::string write_text(const std::string& name, const std::string& body) {
  const auto path = temp_path(name);
  std::ofstream(path) << body;
  return path.string();
}

std::string write_gnp(const std::string& name, std::uint64_t n, double p, std::uint64_t seed) {
  const Graph g = testing::gnp(n, p, seed);
  std::ostringstream body;
  g.for_each_edge([&](VertexId u, VertexId v) { body << u << ' ' << v << '\n'; });
  return write_text(name, body.str());
}

json strip_timing(json j) {
  j.erase("elapsed_ms");
  if (j.contains("rows")) {
    for (auto& row : j["rows"]) row.erase("time_ms");
  }
  return j;
}

const char* kK4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_CASE("exact on K4") {
  const auto r = run({"exact", write_text("k4.txt", kK4)});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["t"] == 4);
  CHECK(j.contains("elapsed_ms"));
  CHECK(r.err.empty());

  const auto pe = run({"exact", write_text("k4.txt", kK4), "--per-edge"});
  CHECK(json::parse(pe.out)["delta_max"] == 2);
}

TEST_CASE("bench on K4") {
  const auto r = run({"bench", write_text("k4.txt", kK4), "--trials", "5"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 6);
  int exact_full = 0;
  for (const auto& row : j["rows"]) {
    if (row["variant"] == "exact" && row["p"] == 1.0) {
      CHECK(row["err_pct"] == 0.0);
      CHECK(row["mean_t_hat"] == 4.0);
      ++exact_full;
    }
  }
  CHECK(exact_full == 1);
}

TEST_CASE("bench rows do not depend on the job count") {
  const auto path = write_gnp("bench.txt", 200, 0.08, 3);
  const auto a = run({"bench", path, "--trials", "4", "--seed", "5", "--jobs", "1"});
  const auto b = run({"bench", path, "--trials", "4", "--seed", "5", "--jobs", "3"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(strip_timing(json::parse(a.out)) == strip_timing(json::parse(b.out)));
}

TEST_CASE("randomized subcommands are reproducible") {
  const auto text = write_gnp("g.txt", 300, 0.05, 1);
  const auto bin = temp_path("g.bin").string();
  REQUIRE(run({"convert", text, bin}).code == 0);
  const std::vector<std::vector<std::string>> commands{
      {"sample", bin, "--mode", "hybrid", "--samples", "1000", "--seed", "7"},
      {"sample", text, "--mode", "simple", "--p", "0.5", "--seed", "7"},
      {"sparsify", text, "--p", "0.3", "--seed", "3"},
      {"stream", bin, "--budget", "2000", "--seed", "4"},
      {"rp", text, "--k", "8", "--trials", "3", "--seed", "2", "--diagnose"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd);
    const auto b = run(cmd);
    REQUIRE(a.code == 0);
    CHECK(strip_timing(json::parse(a.out)) == strip_timing(json::parse(b.out)));
  }
  const auto s7 = json::parse(run(commands[0]).out);
  auto other = commands[0];
  other.back() = "8";
  CHECK(s7["t_hat"] != json::parse(run(other).out)["t_hat"]);
}

TEST_CASE("seed from the environment") {
  const auto text = write_gnp("env.txt", 200, 0.05, 2);
  setenv(cli::kSeedEnv, "41", 1);
  const auto from_env = json::parse(run({"sample", text, "--samples", "300"}).out);
  unsetenv(cli::kSeedEnv);
  const auto from_flag = json::parse(run({"sample", text, "--samples", "300", "--seed", "41"}).out);
  CHECK(from_env["seed"] == 41);
  CHECK(from_env["t_hat"] == from_flag["t_hat"]);
  CHECK(json::parse(run({"sample", text, "--samples", "300"}).out)["seed"] == 1);
}

TEST_CASE("convert round trip") {
  const auto text = write_gnp("rt.txt", 150, 0.1, 4);
  const auto bin = temp_path("rt.bin").string();
  REQUIRE(run({"convert", text, bin}).code == 0);
  CHECK(load_graph(bin) == load_graph(text));
  CHECK(load_graph(bin, GraphFormat::kBinary) == load_graph(text, GraphFormat::kText));
  const auto e1 = json::parse(run({"exact", text}).out);
  const auto e2 = json::parse(run({"exact", bin, "--format", "bin"}).out);
  CHECK(e1["t"] == e2["t"]);
}

TEST_CASE("stream output fields") {
  const auto text = write_gnp("st.txt", 200, 0.05, 6);
  const auto bin = temp_path("st.bin").string();
  REQUIRE(run({"convert", text, bin}).code == 0);
  const auto j = json::parse(run({"stream", bin, "--seed", "3"}).out);
  CHECK(j["passes"] == 4);
  CHECK(j["bound_ok"] == true);
  CHECK(j.contains("peak_items"));
  CHECK(json::parse(run({"stream", bin, "--no-verify-pass"}).out)["passes"] == 3);
}

TEST_CASE("sparsify formulas") {
  const auto text = write_gnp("sp.txt", 200, 0.1, 7);
  const auto j = json::parse(
      run({"sparsify", text, "--t-guess", "1000", "--eps", "0.5", "--delta-max", "5", "--d", "1"})
          .out);
  CHECK(j.contains("recommended_p"));
  CHECK(j.contains("sufficient_p"));
  const auto sweep = json::parse(run({"sparsify", text, "--p-grid", "0.2,0.5,1"}).out);
  CHECK(sweep["sweep"].size() == 3);
}

TEST_CASE("usage and input errors") {
  CHECK(run({"frobnicate"}).code != 0);
  CHECK(run({}).code != 0);
  CHECK(run({"exact", write_text("k4.txt", kK4), "--bogus"}).code != 0);
  const auto missing = run({"exact", temp_path("does_not_exist.txt").string()});
  CHECK(missing.code == 1);
  CHECK(missing.out.empty());
  CHECK(missing.err.find("error") != std::string::npos);
  const auto bad = run({"exact", write_text("bad.txt", "1 2\n2 x\n")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("2") != std::string::npos);
  CHECK(run({"sample", write_text("k4.txt", kK4), "--p", "0"}).code != 0);
}
