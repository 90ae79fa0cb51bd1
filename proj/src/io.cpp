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

#include "tricount/io.hpp"

#include <array>
#include <fstream>
#include <limits>

#include "tricount/error.hpp"

namespace tricount {

GraphFormat parse_format(const std::string& name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "text" || name == "txt") return GraphFormat::kText;
  if (name == "bin" || name == "binary") return GraphFormat::kBinary;
  throw ParameterError("unknown graph format '" + name + "' (expected text|bin)");
}

GraphFormat resolve_format(const std::filesystem::path& path, GraphFormat format) {
  if (format != GraphFormat::kAuto) return format;
  return path.extension() == ".bin" ? GraphFormat::kBinary : GraphFormat::kText;
}

void write_u64(std::ostream& out, std::uint64_t value) {
  std::array<char, 8> bytes;
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  out.write(bytes.data(), bytes.size());
}

bool read_u64(std::istream& in, std::uint64_t& value) {
  std::array<unsigned char, 8> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (in.gcount() == 0 && in.eof()) return false;
  if (in.gcount() != 8) throw IoError("truncated binary adjacency file");
  value = 0;
  for (int i = 7; i >= 0; --i) value = (value << 8) | bytes[i];
  return true;
}

void write_binary(const Graph& g, std::ostream& out) {
  write_u64(out, g.n());
  for (std::uint64_t u = 0; u < g.n(); ++u) {
    auto list = g.neighbors_unchecked(static_cast<VertexId>(u));
    write_u64(out, list.size());
    for (VertexId v : list) write_u64(out, v);
  }
  if (!out) throw IoError("failed to write binary adjacency data");
}

Graph read_binary(std::istream& in) {
  std::uint64_t n = 0;
  if (!read_u64(in, n)) throw IoError("empty binary adjacency file");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw IoError("vertex count exceeds 32-bit range");
  }
  std::vector<std::uint64_t> offsets(n + 1, 0);
  std::vector<VertexId> neighbors;
  for (std::uint64_t u = 0; u < n; ++u) {
    std::uint64_t len = 0;
    if (!read_u64(in, len)) throw IoError("truncated binary adjacency file");
    for (std::uint64_t i = 0; i < len; ++i) {
      std::uint64_t v = 0;
      if (!read_u64(in, v)) throw IoError("truncated binary adjacency file");
      if (v >= n) throw IoError("neighbor id out of range in binary file");
      neighbors.push_back(static_cast<VertexId>(v));
    }
    offsets[u + 1] = neighbors.size();
  }
  try {
    return Graph::from_csr(std::move(offsets), std::move(neighbors));
  } catch (const ContractError& e) {
    throw IoError(std::string("malformed binary adjacency file: ") + e.what());
  }
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  format = resolve_format(path, format);
  std::ifstream in(path, format == GraphFormat::kBinary ? std::ios::binary : std::ios::in);
  if (!in) throw IoError("cannot open " + path.string());
  if (format == GraphFormat::kBinary) return read_binary(in);
  return build_graph(parse_edge_list(in));
}

void save_binary(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_binary(g, out);
}

}  // namespace tricount
