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

// Independent reference implementations used only by tests. None of them
// share code with the library paths they check.

#ifndef DETOURKIT_TESTS_ORACLES_ORACLES_H_
#define DETOURKIT_TESTS_ORACLES_ORACLES_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "detourkit/detour_dp.h"
#include "detourkit/field64.h"
#include "detourkit/layered_graph.h"
#include "detourkit/rng.h"
#include "detourkit/walk_sieve.h"

namespace detourkit::testing {

// Bit-at-a-time multiply: add a shifted copy of `a` per set bit of `b`,
// reducing after every shift.
uint64_t MulBitSerial(uint64_t a, uint64_t b);

// Distances by repeated edge relaxation until nothing changes; -1 when
// unreachable.
std::vector<int> RelaxationDistances(const Graph& g, Vertex s);

enum class WalkClass {
  kAdmissible,            // never V2 -> V1 -> same V2 vertex
  kSimple,                // no repeated vertex
  kWithImmediateReturns,  // the return filter switched off
};

using EdgeVar = std::function<FieldElem(Vertex from, Vertex to)>;

// Sum of f(W) over explicitly enumerated labeled walks of the given class
// with exactly `length` edges, k1 V1 occurrences and l2 V2-V2 traversals.
// Each walk contributes its edge product times the sum over all bijections
// of labels {0..k1+l2-1} onto its labeled elements.
FieldElem LabeledWalkSum(const SubgraphView& view, const Bipartition& part,
                         Vertex from, Vertex to, int length, int k1, int l2,
                         const VarAssignment& vars, WalkClass walks,
                         const EdgeVar& edge_var = nullptr);

// One representative per isomorphism class of connected graphs on n
// vertices (n <= 6).
std::vector<Graph> ConnectedGraphs(int n);

// G(n, p) redrawn until connected.
Graph RandomConnectedGraph(int n, double p, Rng& rng);

// Exhaustive offset table: (x, r) set iff a path of length d(t) - d(x) + r joins x and
// t inside G_(x,inf). Tracks the same vertices the solver does.
OffsetTable TruthTable(const Graph& g, Vertex s, Vertex t, int k);

}  // namespace detourkit::testing

#endif  // DETOURKIT_TESTS_ORACLES_ORACLES_H_
