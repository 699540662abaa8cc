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

#include "detourkit/graph_io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "detourkit/rng.h"

namespace detourkit {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j]))) {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ToInt(std::string_view token, int64_t& value) {
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && end == token.data() + token.size();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Graph ParseGraph(std::string_view text) {
  int64_t n = -1, m = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = Tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    int64_t a = 0, b = 0;
    if (tokens.size() != 2 || !ToInt(tokens[0], a) || !ToInt(tokens[1], b)) {
      throw ParseError(where + "expected two integers");
    }
    if (n < 0) {
      if (a < 0 || b < 0 || a > (int64_t{1} << 30)) {
        throw ParseError(where + "bad header '" + std::string(line) + "'");
      }
      n = a;
      m = b;
      continue;
    }
    if (static_cast<int64_t>(edges.size()) == m) {
      throw ParseError(where + "more than " + std::to_string(m) + " edges");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError(where + "vertex id out of range [0, " +
                       std::to_string(n) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw ParseError("missing 'n m' header");
  if (static_cast<int64_t>(edges.size()) != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

std::string SerializeGraph(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph ReadGraphFile(const std::string& path) {
  return ParseGraph(ReadFile(path));
}

Bipartition ParsePartition(std::string_view text, int num_vertices) {
  std::vector<Part> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    for (std::string_view token : Tokens(line)) {
      if (token == "1") {
        parts.push_back(Part::kV1);
      } else if (token == "2") {
        parts.push_back(Part::kV2);
      } else {
        throw ParseError("partition token '" + std::string(token) +
                         "' is not 1 or 2");
      }
    }
  }
  if (static_cast<int>(parts.size()) != num_vertices) {
    throw ParseError("partition lists " + std::to_string(parts.size()) +
                     " vertices, graph has " + std::to_string(num_vertices));
  }
  return Bipartition(std::move(parts));
}

Bipartition ReadPartitionFile(const std::string& path, int num_vertices) {
  return ParsePartition(ReadFile(path), num_vertices);
}

Graph PathGraph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph CycleGraph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph GridGraph(int side) {
  if (side < 1) throw std::invalid_argument("grid needs side >= 1");
  std::vector<Edge> edges;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      const int v = r * side + c;
      if (c + 1 < side) edges.emplace_back(v, v + 1);
      if (r + 1 < side) edges.emplace_back(v, v + side);
    }
  }
  return Graph(side * side, edges);
}

Graph Gnp(int n, double p, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gnp needs 0 <= p <= 1");
  }
  // Compare 53-bit draws against an integer threshold so the output does not
  // depend on the platform's floating-point distribution code.
  const uint64_t threshold = static_cast<uint64_t>(std::ldexp(p, 53));
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detourkit
