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

#include "detourkit/layered_graph.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace detourkit {

Graph::Graph(int num_vertices, std::span<const Edge> edges)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  std::vector<int32_t> degree(num_vertices, 0);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (!IsVertex(u) || !IsVertex(v)) {
      throw std::out_of_range("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") has an invalid endpoint");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
    ++degree[u];
    ++degree[v];
  }

  offsets_.assign(num_vertices + 1, 0);
  for (int v = 0; v < num_vertices; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adj_.resize(offsets_.back());
  adj_edge_.resize(offsets_.back());
  std::vector<int32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (int id = 0; id < num_edges(); ++id) {
    auto [u, v] = edges_[id];
    adj_[fill[u]] = v;
    adj_edge_[fill[u]++] = id;
    adj_[fill[v]] = u;
    adj_edge_[fill[v]++] = id;
  }

  std::vector<std::pair<Vertex, int32_t>> scratch;
  for (int v = 0; v < num_vertices; ++v) {
    scratch.clear();
    for (int i = offsets_[v]; i < offsets_[v + 1]; ++i) {
      scratch.emplace_back(adj_[i], adj_edge_[i]);
    }
    std::sort(scratch.begin(), scratch.end());
    for (size_t i = 0; i < scratch.size(); ++i) {
      if (i > 0 && scratch[i].first == scratch[i - 1].first) {
        throw std::invalid_argument("duplicate edge {" + std::to_string(v) +
                                    ", " + std::to_string(scratch[i].first) +
                                    "}");
      }
      adj_[offsets_[v] + i] = scratch[i].first;
      adj_edge_[offsets_[v] + i] = scratch[i].second;
    }
  }
}

int Graph::EdgeId(Vertex u, Vertex v) const {
  if (!IsVertex(u) || !IsVertex(v)) return -1;
  auto nbrs = neighbors(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return -1;
  return adj_edge_[offsets_[u] + (it - nbrs.begin())];
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.num_vertices_ != b.num_vertices_) return false;
  std::vector<Edge> ea = a.edges_, eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

const char* ToString(EdgeClass c) {
  switch (c) {
    case EdgeClass::kForward:
      return "forward";
    case EdgeClass::kBackward:
      return "backward";
    case EdgeClass::kStable:
      return "stable";
  }
  return "?";
}

LayeredGraph BfsLayers(const Graph& g, Vertex source) {
  if (!g.IsVertex(source)) {
    throw std::out_of_range("source " + std::to_string(source) +
                            " is not a vertex");
  }
  LayeredGraph lg;
  lg.graph_ = g;
  lg.source_ = source;
  lg.dist_.assign(g.num_vertices(), kUnreachable);
  std::deque<Vertex> queue{source};
  lg.dist_[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (lg.dist_[w] == kUnreachable) {
        lg.dist_[w] = lg.dist_[u] + 1;
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const int d = lg.dist_[v];
    if (d == kUnreachable) continue;
    if (d >= static_cast<int>(lg.layers_.size())) lg.layers_.resize(d + 1);
    lg.layers_[d].push_back(v);
  }
  return lg;
}

std::span<const Vertex> LayeredGraph::layer(int d) const {
  if (d < 0 || d > max_depth()) return {};
  return layers_[d];
}

EdgeClass LayeredGraph::Classify(Vertex u, Vertex v) const {
  if (!graph_.HasEdge(u, v)) {
    throw std::invalid_argument("{" + std::to_string(u) + ", " +
                                std::to_string(v) + "} is not an edge");
  }
  if (!reachable(u) || !reachable(v)) {
    throw std::invalid_argument("edge endpoint unreachable from the source");
  }
  const int delta = dist_[v] - dist_[u];
  if (delta == 1) return EdgeClass::kForward;
  if (delta == -1) return EdgeClass::kBackward;
  return EdgeClass::kStable;
}

EdgeClass ClassifyEdge(const LayeredGraph& lg, Vertex u, Vertex v) {
  return lg.Classify(u, v);
}

int Bipartition::count_v1() const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), Part::kV1));
}

Bipartition ParityPartition(const LayeredGraph& lg) {
  std::vector<Part> parts(lg.num_vertices(), Part::kV2);
  for (Vertex v = 0; v < lg.num_vertices(); ++v) {
    if (lg.reachable(v) && lg.dist(v) % 2 == 1) parts[v] = Part::kV1;
  }
  return Bipartition(std::move(parts));
}

Bipartition RandomPartition(const Graph& g, Rng& rng) {
  std::vector<Part> parts(g.num_vertices());
  for (auto& p : parts) p = (rng() >> 63) ? Part::kV1 : Part::kV2;
  return Bipartition(std::move(parts));
}

SubgraphView::SubgraphView(const LayeredGraph& lg, Kind kind, Vertex anchor,
                           int upper_depth)
    : lg_(&lg), kind_(kind), anchor_(anchor), upper_depth_(upper_depth) {
  const int n = lg.num_vertices();
  member_.assign(n, 0);
  for (Vertex w = 0; w < n; ++w) {
    bool in = false;
    switch (kind) {
      case Kind::kFull:
        in = true;
        break;
      case Kind::kTail:
        in = w == anchor || (lg.reachable(w) && lg.dist(w) > lg.dist(anchor));
        break;
      case Kind::kInterval:
        in = w == anchor || (lg.reachable(w) && lg.dist(w) > lg.dist(anchor) &&
                             lg.dist(w) <= upper_depth);
        break;
    }
    if (in) {
      member_[w] = 1;
      vertices_.push_back(w);
    }
  }
}

SubgraphView SubgraphView::Interval(const LayeredGraph& lg, Vertex x,
                                    Vertex y) {
  if (!lg.graph().IsVertex(x) || !lg.graph().IsVertex(y)) {
    throw std::out_of_range("interval endpoint is not a vertex");
  }
  if (!lg.reachable(y)) {
    throw std::invalid_argument("interval endpoint " + std::to_string(y) +
                                " is unreachable");
  }
  return IntervalToDepth(lg, x, lg.dist(y));
}

SubgraphView SubgraphView::IntervalToDepth(const LayeredGraph& lg, Vertex x,
                                           int depth) {
  if (!lg.graph().IsVertex(x)) throw std::out_of_range("anchor is not a vertex");
  if (!lg.reachable(x)) {
    throw std::invalid_argument("interval anchor " + std::to_string(x) +
                                " is unreachable");
  }
  if (lg.dist(x) >= depth) {
    throw std::invalid_argument("interval needs d(x) < d(y)");
  }
  return SubgraphView(lg, Kind::kInterval, x, depth);
}

SubgraphView SubgraphView::Tail(const LayeredGraph& lg, Vertex x) {
  if (!lg.graph().IsVertex(x)) throw std::out_of_range("anchor is not a vertex");
  if (!lg.reachable(x)) {
    throw std::invalid_argument("tail anchor " + std::to_string(x) +
                                " is unreachable");
  }
  return SubgraphView(lg, Kind::kTail, x, -1);
}

SubgraphView SubgraphView::Full(const LayeredGraph& lg) {
  return SubgraphView(lg, Kind::kFull, -1, -1);
}

uint64_t SubgraphView::Key() const {
  return (static_cast<uint64_t>(kind_) << 60) ^
         (static_cast<uint64_t>(static_cast<uint32_t>(anchor_)) << 24) ^
         static_cast<uint64_t>(static_cast<uint32_t>(upper_depth_) & 0xFFFFFF);
}

}  // namespace detourkit
