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

// Graph file formats.
//
// Text: one "u v" pair per line (see parse_edge_list).
//
// Binary adjacency: all integers little-endian unsigned 64-bit. A header
// holding n, then for every vertex in id order the length of its neighbor
// list followed by that many neighbor ids in ascending order. Each
// undirected edge therefore appears in both endpoint lists.

#ifndef TRICOUNT_IO_HPP_
#define TRICOUNT_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "tricount/graph.hpp"

namespace tricount {

enum class GraphFormat { kAuto, kText, kBinary };

// "text", "bin" or "auto". Throws ParameterError for anything else.
GraphFormat parse_format(const std::string& name);

// kAuto resolves to kBinary for a ".bin" extension and kText otherwise.
GraphFormat resolve_format(const std::filesystem::path& path, GraphFormat format);

void write_binary(const Graph& g, std::ostream& out);
Graph read_binary(std::istream& in);

Graph load_graph(const std::filesystem::path& path, GraphFormat format = GraphFormat::kAuto);
void save_binary(const Graph& g, const std::filesystem::path& path);

// Little-endian u64 helpers shared with the sequential stream reader.
void write_u64(std::ostream& out, std::uint64_t value);
// Returns false on a clean end of input before any byte was read; throws
// IoError on a truncated value.
bool read_u64(std::istream& in, std::uint64_t& value);

}  // namespace tricount

#endif  // TRICOUNT_IO_HPP_
