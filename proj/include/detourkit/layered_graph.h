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

// Undirected simple graphs, BFS layering from a source, and the induced
// subgraph views the detour dynamic program works on.
//
// With d(u) the BFS depth of u from the source:
//   Interval(x, y) = {x} + {w : d(x) < d(w) <= d(y)}
//   Tail(x)        = {x} + {w : d(x) < d(w)}
// Unreachable vertices belong to neither. Interval(x, y) and Tail(y) share
// exactly the vertex y.

#ifndef DETOURKIT_LAYERED_GRAPH_H_
#define DETOURKIT_LAYERED_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "detourkit/rng.h"

namespace detourkit {

using Vertex = int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kUnreachable = -1;

class Graph {
 public:
  Graph() = default;
  // Throws std::out_of_range for ids outside [0, n) and std::invalid_argument
  // for self-loops or repeated edges.
  Graph(int num_vertices, std::span<const Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Edges in input order, each stored with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const int32_t> incident_edges(Vertex v) const {
    return {adj_edge_.data() + offsets_[v], adj_edge_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // -1 when {u, v} is not an edge.
  int EdgeId(Vertex u, Vertex v) const;
  bool HasEdge(Vertex u, Vertex v) const { return EdgeId(u, v) >= 0; }
  bool IsVertex(Vertex v) const { return v >= 0 && v < num_vertices_; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<int32_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<int32_t> adj_edge_;
};

enum class EdgeClass { kForward, kBackward, kStable };

const char* ToString(EdgeClass c);

class LayeredGraph {
 public:
  LayeredGraph() = default;

  const Graph& graph() const { return graph_; }
  Vertex source() const { return source_; }
  int num_vertices() const { return graph_.num_vertices(); }

  // BFS depth from the source, or kUnreachable.
  int dist(Vertex v) const { return dist_[v]; }
  bool reachable(Vertex v) const { return dist_[v] != kUnreachable; }
  std::span<const int> distances() const { return dist_; }

  // Largest finite depth.
  int max_depth() const { return static_cast<int>(layers_.size()) - 1; }
  // Vertices at depth d in ascending id order; empty outside [0, max_depth].
  std::span<const Vertex> layer(int d) const;

  // Direction-dependent class of traversing u -> v. Throws
  // std::invalid_argument for non-edges or unreachable endpoints.
  EdgeClass Classify(Vertex u, Vertex v) const;

 private:
  friend LayeredGraph BfsLayers(const Graph& g, Vertex source);

  Graph graph_;
  Vertex source_ = 0;
  std::vector<int> dist_;
  std::vector<std::vector<Vertex>> layers_;
};

// Throws std::out_of_range when `source` is not a vertex.
LayeredGraph BfsLayers(const Graph& g, Vertex source);

EdgeClass ClassifyEdge(const LayeredGraph& lg, Vertex u, Vertex v);

enum class Part : uint8_t { kV1, kV2 };

class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<Part> parts) : parts_(std::move(parts)) {}

  int size() const { return static_cast<int>(parts_.size()); }
  Part part(Vertex v) const { return parts_[v]; }
  bool in_v1(Vertex v) const { return parts_[v] == Part::kV1; }
  bool in_v2(Vertex v) const { return parts_[v] == Part::kV2; }
  int count_v1() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<Part> parts_;
};

// Odd depths in V1, even depths in V2; unreachable vertices in V2.
Bipartition ParityPartition(const LayeredGraph& lg);

// Each vertex independently uniform over {V1, V2}.
Bipartition RandomPartition(const Graph& g, Rng& rng);

class SubgraphView {
 public:
  enum class Kind { kInterval, kTail, kFull };

  // G_(x,y]. Throws std::invalid_argument unless x and y are reachable and
  // d(x) < d(y).
  static SubgraphView Interval(const LayeredGraph& lg, Vertex x, Vertex y);
  // G_(x,y] for any y at `depth`; the vertex set depends only on d(y).
  static SubgraphView IntervalToDepth(const LayeredGraph& lg, Vertex x,
                                      int depth);
  // G_(x,inf). Throws std::invalid_argument when x is unreachable.
  static SubgraphView Tail(const LayeredGraph& lg, Vertex x);
  // Every vertex of the graph, reachable or not.
  static SubgraphView Full(const LayeredGraph& lg);

  const LayeredGraph& layered() const { return *lg_; }
  const Graph& graph() const { return lg_->graph(); }
  Kind kind() const { return kind_; }
  Vertex anchor() const { return anchor_; }
  // Deepest admitted depth for intervals; -1 otherwise.
  int upper_depth() const { return upper_depth_; }

  bool Contains(Vertex v) const {
    return v >= 0 && v < static_cast<Vertex>(member_.size()) && member_[v];
  }
  // Ascending ids.
  std::span<const Vertex> vertices() const { return vertices_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }

  template <class Fn>
  void ForEachNeighbor(Vertex v, Fn&& fn) const {
    for (Vertex w : lg_->graph().neighbors(v)) {
      if (member_[w]) fn(w);
    }
  }

  // Stable identifier of (kind, anchor, upper depth) for seeding and caching.
  uint64_t Key() const;

 private:
  SubgraphView(const LayeredGraph& lg, Kind kind, Vertex anchor,
               int upper_depth);

  const LayeredGraph* lg_ = nullptr;
  Kind kind_ = Kind::kFull;
  Vertex anchor_ = -1;
  int upper_depth_ = -1;
  std::vector<char> member_;
  std::vector<Vertex> vertices_;
};

}  // namespace detourkit

#endif  // DETOURKIT_LAYERED_GRAPH_H_
