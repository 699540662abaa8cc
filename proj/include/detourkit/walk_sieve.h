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

// Algebraic sieve for the bipartitioned path problem: given a vertex
// partition V1 | V2, is there a simple path from `from` to `to` with exactly
// `length` edges, `k1` vertices in V1 and `l2` edges inside V2?
//
// The sieve sums a monomial f(W) over labeled walks W that
//   1. have exactly `length` edges,
//   2. start at `from` and end at `to`,
//   3. never step V2 -> V1 -> (the same V2 vertex),
//   4. visit V1 exactly k1 times and traverse exactly l2 V2-V2 edges,
//   5. carry k1 + l2 distinct labels from L = {0, ..., k1 + l2 - 1}, one on
//      every V1 visit and every V2-V2 traversal.
// f(W) multiplies x_{u,v} for every traversed edge and y_{e,c} for every
// labeled element e with label c. Over GF(2^64) the non-simple walks cancel
// in pairs, so the sum is a nonzero polynomial exactly when a qualifying
// simple path exists. Evaluating it at a random point gives a one-sided
// test: a nonzero value is a proof, a zero is wrong with probability at most
// (length + k1 + l2) / 2^64.
//
// Edge variables are keyed by the unordered edge, label variables by element
// identity and label. Both symmetries are what make the cancelling pairs
// (label swaps and closed-subwalk reversals) produce equal monomials.

#ifndef DETOURKIT_WALK_SIEVE_H_
#define DETOURKIT_WALK_SIEVE_H_

#include <cstdint>
#include <vector>

#include "detourkit/field64.h"
#include "detourkit/layered_graph.h"
#include "detourkit/rng.h"

namespace detourkit {

inline constexpr int kDefaultLabelCap = 30;

struct SieveQuery {
  const SubgraphView* view = nullptr;
  const Bipartition* partition = nullptr;
  Vertex from = 0;
  Vertex to = 0;
  int length = 0;
  int k1 = 0;
  int l2 = 0;

  int num_labels() const { return k1 + l2; }
};

// Throws std::invalid_argument on a malformed query (including
// length + 1 < k1 + 2 * l2) and LimitExceeded when k1 + l2 > label_cap.
void ValidateQuery(const SieveQuery& q, int label_cap = kDefaultLabelCap);

class VarAssignment {
 public:
  VarAssignment() = default;
  VarAssignment(int num_vertices, int num_edges, int num_labels);

  // Independent uniform values for every edge and every (element, label).
  static VarAssignment Sample(const Graph& g, int num_labels, Rng& rng);

  int num_labels() const { return num_labels_; }

  FieldElem edge(int edge_id) const { return edge_[edge_id]; }
  FieldElem vertex_label(Vertex v, int label) const {
    return vertex_label_[static_cast<size_t>(v) * num_labels_ + label];
  }
  FieldElem edge_label(int edge_id, int label) const {
    return edge_label_[static_cast<size_t>(edge_id) * num_labels_ + label];
  }

  void set_edge(int edge_id, FieldElem value) { edge_[edge_id] = value; }
  void set_vertex_label(Vertex v, int label, FieldElem value) {
    vertex_label_[static_cast<size_t>(v) * num_labels_ + label] = value;
  }
  void set_edge_label(int edge_id, int label, FieldElem value) {
    edge_label_[static_cast<size_t>(edge_id) * num_labels_ + label] = value;
  }

 private:
  int num_labels_ = 0;
  std::vector<FieldElem> edge_;
  std::vector<FieldElem> vertex_label_;
  std::vector<FieldElem> edge_label_;
};

struct SieveLimits {
  int max_length = 0;
  int max_k1 = 0;
  int max_l2 = 0;
  // Size of the label universe; also caps k1 + l2.
  int max_labels = 0;
};

// One pass of the labeled-walk dynamic program from a fixed start vertex.
// The table answers every (to, length, k1, l2) inside its limits: the entry
// for label set {0, ..., k1 + l2 - 1} equals the walk polynomial of that
// query. The lemma precondition length + 1 >= k1 + 2 * l2 is not needed for
// the cancellation and is not enforced here.
class WalkSieveTable {
 public:
  // Throws LimitExceeded when limits.max_labels > label_cap, and
  // std::invalid_argument when `from` is outside the view or `vars` has
  // fewer labels than limits.max_labels.
  static WalkSieveTable Build(const SubgraphView& view,
                              const Bipartition& partition, Vertex from,
                              const SieveLimits& limits,
                              const VarAssignment& vars,
                              int label_cap = kDefaultLabelCap);

  // Zero outside the limits or for vertices outside the view.
  FieldElem Value(Vertex to, int length, int k1, int l2) const;

  const SieveLimits& limits() const { return limits_; }
  // Distinct (length, vertex, context, label set, V1 count) states reached.
  uint64_t states_touched() const { return states_touched_; }

 private:
  SieveLimits limits_;
  std::vector<int> local_of_;  // global id -> local id, or -1
  int num_local_ = 0;
  std::vector<FieldElem> results_;
  uint64_t states_touched_ = 0;
};

struct SieveStats {
  uint64_t dp_states_touched = 0;
  uint64_t evaluations = 0;
};

// Exact value of the walk polynomial of `q` at `vars`.
FieldElem EvaluatePolynomial(const SieveQuery& q, const VarAssignment& vars,
                             SieveStats* stats = nullptr);

// True if any of `reps` independent random evaluations is nonzero.
bool Decide(const SieveQuery& q, Rng& rng, int reps = 1,
            SieveStats* stats = nullptr);

// States touched by one evaluation of `q`.
uint64_t DpStateCount(const SieveQuery& q);

}  // namespace detourkit

#endif  // DETOURKIT_WALK_SIEVE_H_
