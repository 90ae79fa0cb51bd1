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
#include <sstream>

#include "support.hpp"
#include "tricount/error.hpp"
#include "tricount/io.hpp"

using namespace tricount;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tricount_io_" + name);
}

}  // namespace

TEST_CASE("binary layout is length-prefixed little-endian u64") {
  // Path 0 - 1 plus an isolated vertex 2.
  const Graph g = tricount::testing::from_pairs({{0, 1}}, 3);
  std::ostringstream out;
  write_binary(g, out);
  const std::string bytes = out.str();
  REQUIRE(bytes.size() == 8 * (1 + 2 + 2 + 1));
  auto word = [&](std::size_t i) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | static_cast<unsigned char>(bytes[8 * i + b]);
    return v;
  };
  CHECK(word(0) == 3);  // n
  CHECK(word(1) == 1);  // |N(0)|
  CHECK(word(2) == 1);
  CHECK(word(3) == 1);  // |N(1)|
  CHECK(word(4) == 0);
  CHECK(word(5) == 0);  // |N(2)|
  CHECK(static_cast<unsigned char>(bytes[0]) == 3);
}

TEST_CASE("binary round trip preserves the graph") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = tricount::testing::gnp(120, 0.07, seed);
    std::stringstream buf;
    write_binary(g, buf);
    CHECK(read_binary(buf) == g);
  }
}

TEST_CASE("truncated or inconsistent binary input is rejected") {
  const Graph g = tricount::testing::complete(4);
  std::ostringstream out;
  write_binary(g, out);
  std::string bytes = out.str();

  std::istringstream truncated(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(read_binary(truncated), IoError);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_binary(empty), IoError);

  // Drop vertex 3 from vertex 0's list by rewriting the last neighbor id.
  bytes[8 * 4] = 2;
  std::istringstream bad(bytes);
  CHECK_THROWS_AS(read_binary(bad), IoError);
}

TEST_CASE("load_graph chooses the format by extension") {
  const auto text = temp_path("k4.txt");
  const auto bin = temp_path("k4.bin");
  {
    std::ofstream f(text);
    f << "# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  }
  const Graph from_text = load_graph(text);
  save_binary(from_text, bin);
  CHECK(load_graph(bin) == from_text);
  CHECK(load_graph(bin, GraphFormat::kBinary) == from_text);
  CHECK_THROWS_AS(load_graph(temp_path("missing.txt")), IoError);
  CHECK_THROWS_AS(parse_format("csv"), ParameterError);
  std::filesystem::remove(text);
  std::filesystem::remove(bin);
}
