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

#include "tests/oracles/oracles.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "detourkit/brute_oracle.h"
#include "detourkit/graph_io.h"

namespace detourkit::testing {

uint64_t MulBitSerial(uint64_t a, uint64_t b) {
  uint64_t acc = 0;
  for (int i = 0; i < 64; ++i) {
    if (b >> i & 1) acc ^= a;
    const bool carry = a >> 63;
    a <<= 1;
    if (carry) a ^= 0x1B;
  }
  return acc;
}

std::vector<int> RelaxationDistances(const Graph& g, Vertex s) {
  const int n = g.num_vertices();
  const int inf = n + 1;
  std::vector<int> d(n, inf);
  d[s] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [u, v] : g.edges()) {
      if (d[u] + 1 < d[v]) d[v] = d[u] + 1, changed = true;
      if (d[v] + 1 < d[u]) d[u] = d[v] + 1, changed = true;
    }
  }
  for (int& x : d) {
    if (x == inf) x = -1;
  }
  return d;
}

namespace {

struct Labeled {
  bool is_vertex;
  int id;  // vertex id or edge id
};

// Sum over bijections elements -> labels of prod y(element_j, label), by
// dynamic programming over the set of labels used so far.
FieldElem LabelSum(const std::vector<Labeled>& elems, const VarAssignment& v) {
  const int n = static_cast<int>(elems.size());
  std::vector<FieldElem> ways(size_t{1} << n, FieldElem::Zero());
  ways[0] = FieldElem::One();
  for (uint32_t mask = 0; mask < ways.size(); ++mask) {
    if (ways[mask].is_zero()) continue;
    const int j = std::popcount(mask);
    if (j == n) continue;
    for (int c = 0; c < n; ++c) {
      if (mask >> c & 1) continue;
      const FieldElem y = elems[j].is_vertex ? v.vertex_label(elems[j].id, c)
                                             : v.edge_label(elems[j].id, c);
      ways[mask | 1u << c] += ways[mask] * y;
    }
  }
  return ways.back();
}

}  // namespace

FieldElem LabeledWalkSum(const SubgraphView& view, const Bipartition& part,
                         Vertex from, Vertex to, int length, int k1, int l2,
                         const VarAssignment& vars, WalkClass walks,
                         const EdgeVar& edge_var) {
  const Graph& g = view.graph();
  auto x = [&](Vertex u, Vertex w) {
    return edge_var ? edge_var(u, w) : vars.edge(g.EdgeId(u, w));
  };
  FieldElem total = FieldElem::Zero();
  std::vector<Vertex> walk{from};
  std::vector<Labeled> elems;
  if (part.in_v1(from)) elems.push_back({true, from});

  auto extend = [&](auto&& self, int v1_seen, int v2v2_seen) -> void {
    if (v1_seen > k1 || v2v2_seen > l2) return;
    const Vertex v = walk.back();
    if (static_cast<int>(walk.size()) - 1 == length) {
      if (v != to || v1_seen != k1 || v2v2_seen != l2) return;
      FieldElem product = FieldElem::One();
      for (size_t i = 0; i + 1 < walk.size(); ++i) {
        product *= x(walk[i], walk[i + 1]);
      }
      total += product * LabelSum(elems, vars);
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (!view.Contains(w)) continue;
      if (walks == WalkClass::kSimple &&
          std::find(walk.begin(), walk.end(), w) != walk.end()) {
        continue;
      }
      if (walks == WalkClass::kAdmissible && walk.size() >= 2) {
        const Vertex p = walk[walk.size() - 2];
        if (w == p && part.in_v2(p) && part.in_v1(v)) continue;
      }
      int next_v1 = v1_seen, next_v2v2 = v2v2_seen;
      size_t pushed = 0;
      if (part.in_v1(w)) {
        elems.push_back({true, w});
        ++next_v1;
        ++pushed;
      } else if (part.in_v2(v)) {
        elems.push_back({false, g.EdgeId(v, w)});
        ++next_v2v2;
        ++pushed;
      }
      walk.push_back(w);
      self(self, next_v1, next_v2v2);
      walk.pop_back();
      elems.resize(elems.size() - pushed);
    }
  };
  extend(extend, part.in_v1(from) ? 1 : 0, 0);
  return total;
}

std::vector<Graph> ConnectedGraphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
  for (size_t i = 0; i < slots.size(); ++i) {
    slot_of[slots[i].first][slots[i].second] = static_cast<int>(i);
    slot_of[slots[i].second][slots[i].first] = static_cast<int>(i);
  }

  std::set<uint32_t> seen;
  std::vector<Graph> out;
  for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    uint32_t canonical = mask;
    for (const auto& q : perms) {
      uint32_t image = 0;
      for (size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1) {
          image |= 1u << slot_of[q[slots[i].first]][q[slots[i].second]];
        }
      }
      canonical = std::min(canonical, image);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<Edge> edges;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (canonical >> i & 1) edges.push_back(slots[i]);
    }
    Graph g(n, edges);
    const auto d = RelaxationDistances(g, 0);
    if (std::find(d.begin(), d.end(), -1) == d.end()) out.push_back(g);
  }
  return out;
}

Graph RandomConnectedGraph(int n, double p, Rng& rng) {
  for (;;) {
    Graph g = Gnp(n, p, rng());
    const auto d = RelaxationDistances(g, 0);
    if (std::find(d.begin(), d.end(), -1) == d.end()) return g;
  }
}

OffsetTable TruthTable(const Graph& g, Vertex s, Vertex t, int k) {
  const LayeredGraph lg = BfsLayers(g, s);
  OffsetTable truth(g.num_vertices(), k);
  if (!lg.reachable(t)) return truth;
  OracleLimits unguarded;
  unguarded.force = true;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (!lg.reachable(x) || lg.dist(x) > lg.dist(t)) continue;
    truth.Track(x);
    const SubgraphView tail = SubgraphView::Tail(lg, x);
    if (!tail.Contains(t)) continue;
    const int gap = lg.dist(t) - lg.dist(x);
    const auto lengths = PathLengths(tail, x, t, gap + k, unguarded);
    for (int r = 0; r <= k; ++r) {
      if (lengths[gap + r]) truth.Set(x, r);
    }
  }
  return truth;
}

}  // namespace detourkit::testing
