// Copyright 2026 The detourkit Authors.
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

// Plain-text graph files and a few deterministic generators.
//
// Format: the first non-comment line is "n m", followed by m lines "u v"
// with 0 <= u, v < n. Blank lines and lines starting with '#' are ignored.

#ifndef DETOURKIT_GRAPH_IO_H_
#define DETOURKIT_GRAPH_IO_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "detourkit/layered_graph.h"

namespace detourkit {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError with a line number on malformed input, including
// self-loops, repeated edges and out-of-range ids.
Graph ParseGraph(std::string_view text);
std::string SerializeGraph(const Graph& g);
Graph ReadGraphFile(const std::string& path);

// n whitespace-separated tokens, each 1 (V1) or 2 (V2); '#' starts a comment
// that runs to the end of the line.
Bipartition ParsePartition(std::string_view text, int num_vertices);
Bipartition ReadPartitionFile(const std::string& path, int num_vertices);

Graph PathGraph(int n);
Graph CycleGraph(int n);  // n >= 3
// side x side grid; vertex (r, c) has id r * side + c.
Graph GridGraph(int side);
// Each pair {u, v}, u < v, in lexicographic order, is kept with probability p.
Graph Gnp(int n, double p, uint64_t seed);
Graph PetersenGraph();

// FNV-1a over the bytes.
uint64_t Fnv1a64(std::string_view bytes);

}  // namespace detourkit

#endif  // DETOURKIT_GRAPH_IO_H_
