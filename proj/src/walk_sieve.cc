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

#include "detourkit/walk_sieve.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "detourkit/errors.h"

namespace detourkit {

void ValidateQuery(const SieveQuery& q, int label_cap) {
  if (q.view == nullptr || q.partition == nullptr) {
    throw std::invalid_argument("sieve query needs a view and a partition");
  }
  if (q.partition->size() != q.view->graph().num_vertices()) {
    throw std::invalid_argument("partition size does not match the graph");
  }
  if (!q.view->Contains(q.from) || !q.view->Contains(q.to)) {
    throw std::invalid_argument("query endpoints must belong to the view");
  }
  if (q.length < 0 || q.k1 < 0 || q.l2 < 0) {
    throw std::invalid_argument("length, k1 and l2 must be nonnegative");
  }
  if (q.length + 1 < q.k1 + 2 * q.l2) {
    throw std::invalid_argument(
        "bipartitioned path query needs length + 1 >= k1 + 2 * l2");
  }
  if (q.num_labels() > label_cap) {
    throw LimitExceeded("k1 + l2 = " + std::to_string(q.num_labels()) +
                        " exceeds the label cap " + std::to_string(label_cap));
  }
}

VarAssignment::VarAssignment(int num_vertices, int num_edges, int num_labels)
    : num_labels_(num_labels),
      edge_(num_edges),
      vertex_label_(static_cast<size_t>(num_vertices) * num_labels),
      edge_label_(static_cast<size_t>(num_edges) * num_labels) {}

VarAssignment VarAssignment::Sample(const Graph& g, int num_labels, Rng& rng) {
  VarAssignment vars(g.num_vertices(), g.num_edges(), num_labels);
  for (auto& x : vars.edge_) x = SampleUniform(rng);
  for (auto& y : vars.vertex_label_) y = SampleUniform(rng);
  for (auto& y : vars.edge_label_) y = SampleUniform(rng);
  return vars;
}

namespace {

// Walk context: the current vertex, plus the previous vertex when the last
// step went V2 -> V1 (that vertex is then forbidden as the next step).
struct Context {
  int vertex;    // local id
  int previous;  // local id or -1
};

struct Arc {
  int target;      // local id
  int target_ctx;  // context reached by taking this arc
  int edge_id;
};

}  // namespace

WalkSieveTable WalkSieveTable::Build(const SubgraphView& view,
                                     const Bipartition& partition,
                                     Vertex from, const SieveLimits& limits,
                                     const VarAssignment& vars,
                                     int label_cap) {
  if (limits.max_labels > label_cap) {
    throw LimitExceeded("label universe of " +
                        std::to_string(limits.max_labels) +
                        " exceeds the cap " + std::to_string(label_cap));
  }
  if (limits.max_length < 0 || limits.max_k1 < 0 || limits.max_l2 < 0 ||
      limits.max_labels < 0) {
    throw std::invalid_argument("sieve limits must be nonnegative");
  }
  if (!view.Contains(from)) {
    throw std::invalid_argument("start vertex is outside the view");
  }
  if (vars.num_labels() < limits.max_labels) {
    throw std::invalid_argument("assignment has too few label variables");
  }

  const Graph& g = view.graph();
  WalkSieveTable table;
  table.limits_ = limits;
  table.local_of_.assign(g.num_vertices(), -1);
  const auto members = view.vertices();
  table.num_local_ = static_cast<int>(members.size());
  for (int i = 0; i < table.num_local_; ++i) table.local_of_[members[i]] = i;

  const int num_local = table.num_local_;
  const int max_k1 = limits.max_k1;
  const int max_l2 = limits.max_l2;
  const int num_labels = limits.max_labels;
  const int k1_slots = max_k1 + 1;
  const int l2_slots = max_l2 + 1;
  const int max_length = limits.max_length;
  table.results_.assign(static_cast<size_t>(max_length + 1) * num_local *
                            k1_slots * l2_slots,
                        FieldElem::Zero());

  std::vector<char> in_v1(num_local);
  for (int i = 0; i < num_local; ++i) in_v1[i] = partition.in_v1(members[i]);

  // Contexts: one plain context per vertex, then one per (V1 vertex, V2
  // neighbor) pair.
  std::vector<Context> contexts;
  std::vector<int> plain_ctx(num_local);
  for (int i = 0; i < num_local; ++i) {
    plain_ctx[i] = static_cast<int>(contexts.size());
    contexts.push_back({i, -1});
  }
  std::vector<std::vector<Arc>> arcs(num_local);
  for (int i = 0; i < num_local; ++i) {
    const Vertex v = members[i];
    const auto nbrs = g.neighbors(v);
    const auto eids = g.incident_edges(v);
    for (size_t j = 0; j < nbrs.size(); ++j) {
      const int w = table.local_of_[nbrs[j]];
      if (w < 0) continue;
      arcs[i].push_back({w, -1, eids[j]});
    }
  }
  for (int i = 0; i < num_local; ++i) {
    for (Arc& arc : arcs[i]) {
      if (!in_v1[i] && in_v1[arc.target]) {
        arc.target_ctx = static_cast<int>(contexts.size());
        contexts.push_back({arc.target, i});
      } else {
        arc.target_ctx = plain_ctx[arc.target];
      }
    }
  }

  const size_t num_masks = size_t{1} << num_labels;
  const size_t layer_size = contexts.size() * num_masks * k1_slots;
  auto index = [&](size_t ctx, size_t mask, int k1) {
    return (ctx * num_masks + mask) * k1_slots + k1;
  };
  std::vector<FieldElem> cur(layer_size), next(layer_size);
  std::vector<char> cur_hit(layer_size, 0), next_hit(layer_size, 0);

  auto record = [&](int length, const std::vector<FieldElem>& layer,
                    const std::vector<char>& hit) {
    for (size_t ctx = 0; ctx < contexts.size(); ++ctx) {
      const int v = contexts[ctx].vertex;
      for (int labels = 0; labels <= num_labels; ++labels) {
        const size_t mask = (size_t{1} << labels) - 1;
        for (int k1 = 0; k1 <= std::min(labels, max_k1); ++k1) {
          const int l2 = labels - k1;
          if (l2 > max_l2) continue;
          const size_t at = index(ctx, mask, k1);
          if (!hit[at]) continue;
          const size_t out =
              ((static_cast<size_t>(length) * num_local + v) * k1_slots + k1) *
                  l2_slots +
              l2;
          table.results_[out] += layer[at];
        }
      }
    }
  };

  // Length-0 walk at the start vertex; a V1 start consumes a label at once.
  const int start = table.local_of_[from];
  if (in_v1[start]) {
    if (max_k1 >= 1 && num_labels >= 1) {
      for (int c = 0; c < num_labels; ++c) {
        const size_t at = index(plain_ctx[start], size_t{1} << c, 1);
        cur[at] = vars.vertex_label(from, c);
        cur_hit[at] = 1;
        ++table.states_touched_;
      }
    }
  } else {
    const size_t at = index(plain_ctx[start], 0, 0);
    cur[at] = FieldElem::One();
    cur_hit[at] = 1;
    ++table.states_touched_;
  }
  record(0, cur, cur_hit);

  for (int length = 0; length < max_length; ++length) {
    std::fill(next.begin(), next.end(), FieldElem::Zero());
    std::fill(next_hit.begin(), next_hit.end(), 0);
    bool any = false;
    for (size_t ctx = 0; ctx < contexts.size(); ++ctx) {
      const int v = contexts[ctx].vertex;
      const int previous = contexts[ctx].previous;
      const bool v_in_v1 = in_v1[v];
      for (size_t mask = 0; mask < num_masks; ++mask) {
        const int used = std::popcount(mask);
        if (used > length + 1) continue;
        for (int k1 = 0; k1 <= std::min(used, max_k1); ++k1) {
          const size_t at = index(ctx, mask, k1);
          if (!cur_hit[at]) continue;
          const FieldElem value = cur[at];
          const int l2 = used - k1;
          for (const Arc& arc : arcs[v]) {
            if (arc.target == previous) continue;
            const FieldElem step = value * vars.edge(arc.edge_id);
            if (in_v1[arc.target]) {
              if (k1 + 1 > max_k1 || used + 1 > num_labels) continue;
              const Vertex w = members[arc.target];
              for (int c = 0; c < num_labels; ++c) {
                if (mask >> c & 1) continue;
                const size_t to = index(arc.target_ctx, mask | size_t{1} << c,
                                        k1 + 1);
                next[to] += step * vars.vertex_label(w, c);
                next_hit[to] = 1;
              }
            } else if (!v_in_v1) {
              if (l2 + 1 > max_l2 || used + 1 > num_labels) continue;
              for (int c = 0; c < num_labels; ++c) {
                if (mask >> c & 1) continue;
                const size_t to =
                    index(arc.target_ctx, mask | size_t{1} << c, k1);
                next[to] += step * vars.edge_label(arc.edge_id, c);
                next_hit[to] = 1;
              }
            } else {
              const size_t to = index(arc.target_ctx, mask, k1);
              next[to] += step;
              next_hit[to] = 1;
            }
            any = true;
          }
        }
      }
    }
    for (char h : next_hit) table.states_touched_ += static_cast<uint64_t>(h);
    cur.swap(next);
    cur_hit.swap(next_hit);
    record(length + 1, cur, cur_hit);
    if (!any) break;
  }
  return table;
}

FieldElem WalkSieveTable::Value(Vertex to, int length, int k1, int l2) const {
  if (to < 0 || to >= static_cast<Vertex>(local_of_.size())) {
    return FieldElem::Zero();
  }
  const int v = local_of_[to];
  if (v < 0 || length < 0 || length > limits_.max_length || k1 < 0 ||
      l2 < 0 || k1 > limits_.max_k1 || l2 > limits_.max_l2 ||
      k1 + l2 > limits_.max_labels) {
    return FieldElem::Zero();
  }
  const size_t k1_slots = limits_.max_k1 + 1;
  const size_t l2_slots = limits_.max_l2 + 1;
  return results_[((static_cast<size_t>(length) * num_local_ + v) * k1_slots +
                   k1) *
                      l2_slots +
                  l2];
}

namespace {

WalkSieveTable BuildForQuery(const SieveQuery& q, const VarAssignment& vars) {
  const SieveLimits limits{q.length, q.k1, q.l2, q.num_labels()};
  return WalkSieveTable::Build(*q.view, *q.partition, q.from, limits, vars);
}

}  // namespace

FieldElem EvaluatePolynomial(const SieveQuery& q, const VarAssignment& vars,
                             SieveStats* stats) {
  ValidateQuery(q);
  const WalkSieveTable table = BuildForQuery(q, vars);
  if (stats != nullptr) {
    stats->dp_states_touched += table.states_touched();
    ++stats->evaluations;
  }
  return table.Value(q.to, q.length, q.k1, q.l2);
}

bool Decide(const SieveQuery& q, Rng& rng, int reps, SieveStats* stats) {
  ValidateQuery(q);
  if (reps < 1) throw std::invalid_argument("reps must be positive");
  for (int r = 0; r < reps; ++r) {
    const VarAssignment vars =
        VarAssignment::Sample(q.view->graph(), q.num_labels(), rng);
    if (!EvaluatePolynomial(q, vars, stats).is_zero()) return true;
  }
  return false;
}

uint64_t DpStateCount(const SieveQuery& q) {
  ValidateQuery(q);
  Rng rng(kDefaultSeed);
  const VarAssignment vars =
      VarAssignment::Sample(q.view->graph(), q.num_labels(), rng);
  return BuildForQuery(q, vars).states_touched();
}

}  // namespace detourkit
