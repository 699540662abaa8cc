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

#include "detourkit/brute_oracle.h"

#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "detourkit/errors.h"

namespace detourkit {
namespace {

constexpr int kFar = std::numeric_limits<int>::max() / 2;

void CheckLimits(const SubgraphView& view, int max_len,
                 const OracleLimits& limits) {
  if (limits.force) return;
  if (view.num_vertices() > limits.max_vertices) {
    throw LimitExceeded("oracle refuses a view with " +
                        std::to_string(view.num_vertices()) + " vertices");
  }
  if (max_len > limits.max_length) {
    throw LimitExceeded("oracle refuses paths longer than " +
                        std::to_string(limits.max_length));
  }
}

// Distance to `to` inside the view, for length pruning.
std::vector<int> DistancesTo(const SubgraphView& view, Vertex to) {
  std::vector<int> dist(view.graph().num_vertices(), kFar);
  if (!view.Contains(to)) return dist;
  std::deque<Vertex> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    view.ForEachNeighbor(u, [&](Vertex w) {
      if (dist[w] == kFar) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

// Depth-first enumeration of simple paths; `visit` sees each complete path.
template <class Visit>
void Dfs(const SubgraphView& view, Vertex from, Vertex to, int max_len,
         Visit&& visit) {
  if (!view.Contains(from) || !view.Contains(to) || max_len < 0) return;
  const std::vector<int> remaining = DistancesTo(view, to);
  if (remaining[from] > max_len) return;
  std::vector<char> on_path(view.graph().num_vertices(), 0);
  std::vector<Vertex> path{from};
  on_path[from] = 1;

  auto step = [&](auto&& self) -> void {
    const Vertex v = path.back();
    if (v == to) {
      visit(path);
      return;
    }
    const int len = static_cast<int>(path.size()) - 1;
    view.ForEachNeighbor(v, [&](Vertex w) {
      if (on_path[w] || len + 1 + remaining[w] > max_len) return;
      on_path[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[w] = 0;
    });
  };
  step(step);
}

PathRecord MakeRecord(const std::vector<Vertex>& path, const LayeredGraph& lg,
                      const Bipartition& partition) {
  PathRecord r;
  r.vertices = path;
  r.length = static_cast<int>(path.size()) - 1;
  for (Vertex v : path) r.k1 += partition.in_v1(v) ? 1 : 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const Vertex u = path[i], w = path[i + 1];
    if (partition.in_v2(u) && partition.in_v2(w)) ++r.l2;
    if (!lg.reachable(u) || !lg.reachable(w)) continue;
    switch (lg.Classify(u, w)) {
      case EdgeClass::kForward:
        ++r.forward;
        break;
      case EdgeClass::kBackward:
        ++r.backward;
        break;
      case EdgeClass::kStable:
        ++r.stable;
        break;
    }
  }
  return r;
}

}  // namespace

void Enumerate(const SubgraphView& view, Vertex from, Vertex to, int max_len,
               const Bipartition& partition, const PathSink& sink,
               const OracleLimits& limits) {
  CheckLimits(view, max_len, limits);
  Dfs(view, from, to, max_len, [&](const std::vector<Vertex>& path) {
    sink(MakeRecord(path, view.layered(), partition));
  });
}

void Enumerate(const SubgraphView& view, Vertex from, Vertex to, int max_len,
               const PathSink& sink, const OracleLimits& limits) {
  Enumerate(view, from, to, max_len, ParityPartition(view.layered()), sink,
            limits);
}

std::vector<PathRecord> EnumerateAll(const SubgraphView& view, Vertex from,
                                     Vertex to, int max_len,
                                     const OracleLimits& limits) {
  std::vector<PathRecord> out;
  Enumerate(
      view, from, to, max_len,
      [&](const PathRecord& r) { out.push_back(r); }, limits);
  return out;
}

std::vector<bool> PathLengths(const SubgraphView& view, Vertex from, Vertex to,
                              int max_len, const OracleLimits& limits) {
  CheckLimits(view, max_len, limits);
  std::vector<bool> found(std::max(max_len, -1) + 1, false);
  Dfs(view, from, to, max_len, [&](const std::vector<Vertex>& path) {
    found[path.size() - 1] = true;
  });
  return found;
}

bool BipartitionedExists(const SubgraphView& view, Vertex from, Vertex to,
                         int length, int k1, int l2,
                         const Bipartition& partition,
                         const OracleLimits& limits) {
  CheckLimits(view, length, limits);
  bool found = false;
  Dfs(view, from, to, length, [&](const std::vector<Vertex>& path) {
    if (found || static_cast<int>(path.size()) - 1 != length) return;
    int v1 = 0, v2v2 = 0;
    for (Vertex v : path) v1 += partition.in_v1(v) ? 1 : 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      if (partition.in_v2(path[i]) && partition.in_v2(path[i + 1])) ++v2v2;
    }
    found = v1 == k1 && v2v2 == l2;
  });
  return found;
}

bool DetourExists(const Graph& g, Vertex s, Vertex t, int k,
                  const OracleLimits& limits) {
  if (!g.IsVertex(s) || !g.IsVertex(t)) {
    throw std::out_of_range("detour endpoints must be vertices");
  }
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const LayeredGraph lg = BfsLayers(g, s);
  if (!lg.reachable(t)) return false;
  const int target = lg.dist(t) + k;
  const SubgraphView whole = SubgraphView::Tail(lg, s);
  return PathLengths(whole, s, t, target, limits)[target];
}

bool CheckSplitClaim(const PathRecord& record, const LayeredGraph& lg, int k) {
  const auto& p = record.vertices;
  const int dx = lg.dist(record.first());
  const int dt = lg.dist(record.last());
  const int m = record.stable;
  if (record.length > dt - dx + k) return true;
  // d(x) <= d(t) - ceil((k - m) / 2) - 1, i.e. 2 (d(t) - d(x) - 1) >= k - m
  // after rounding (k - m) / 2 up.
  const int ceil_half = (k - m + 1) / 2;
  if (dx > dt - ceil_half - 1) return true;
  for (size_t i = 1; i < p.size(); ++i) {
    const int dy = lg.dist(p[i]);
    // d(x) + 1 <= d(y) and 2 (d(y) - d(x) - 1) <= k - m.
    if (dy < dx + 1 || 2 * (dy - dx - 1) > k - m) continue;
    bool after_deeper = true;
    for (size_t j = i + 1; j < p.size() && after_deeper; ++j) {
      after_deeper = lg.dist(p[j]) > dy;
    }
    bool before_shallower = true;
    for (size_t j = 0; j <= i && before_shallower; ++j) {
      before_shallower = lg.dist(p[j]) <= dy;
    }
    if (after_deeper && before_shallower) return true;
  }
  return false;
}

bool CheckSplitClaim(const PathRecord& record, const LayeredGraph& lg) {
  const int offset =
      record.length - (lg.dist(record.last()) - lg.dist(record.first()));
  return CheckSplitClaim(record, lg, offset);
}

bool CheckLabelBound(const PathRecord& record) {
  return 2 * (record.k1 + record.l2) <= record.length + record.stable + 1;
}

}  // namespace detourkit
