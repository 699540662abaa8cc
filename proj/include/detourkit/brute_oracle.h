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

// Exhaustive reference answers: simple-path enumeration with per-path
// signatures, plus checkers for the structural facts the detour dynamic
// program relies on.

#ifndef DETOURKIT_BRUTE_ORACLE_H_
#define DETOURKIT_BRUTE_ORACLE_H_

#include <functional>
#include <vector>

#include "detourkit/layered_graph.h"

namespace detourkit {

struct OracleLimits {
  int max_vertices = 16;
  int max_length = 16;
  // Skip both guards.
  bool force = false;
};

struct PathRecord {
  std::vector<Vertex> vertices;
  int length = 0;
  int k1 = 0;        // vertices in V1
  int l2 = 0;        // edges with both ends in V2
  int stable = 0;    // edge classes w.r.t. the view's BFS depths
  int backward = 0;
  int forward = 0;

  Vertex first() const { return vertices.front(); }
  Vertex last() const { return vertices.back(); }
};

using PathSink = std::function<void(const PathRecord&)>;

// Calls `sink` once for every simple path from `from` to `to` inside `view`
// with at most `max_len` edges, in lexicographic order of vertex sequences.
// k1 and l2 refer to `partition`. Throws LimitExceeded when the view or
// max_len exceeds the limits.
void Enumerate(const SubgraphView& view, Vertex from, Vertex to, int max_len,
               const Bipartition& partition, const PathSink& sink,
               const OracleLimits& limits = {});

// Same, using the parity partition of the view's layering.
void Enumerate(const SubgraphView& view, Vertex from, Vertex to, int max_len,
               const PathSink& sink, const OracleLimits& limits = {});

std::vector<PathRecord> EnumerateAll(const SubgraphView& view, Vertex from,
                                     Vertex to, int max_len,
                                     const OracleLimits& limits = {});

// result[l] is true iff a simple path of exactly l edges joins the endpoints.
std::vector<bool> PathLengths(const SubgraphView& view, Vertex from, Vertex to,
                              int max_len, const OracleLimits& limits = {});

bool BipartitionedExists(const SubgraphView& view, Vertex from, Vertex to,
                         int length, int k1, int l2,
                         const Bipartition& partition,
                         const OracleLimits& limits = {});

// Is there a simple s-t path of length dist(s, t) + k? False when t is
// unreachable.
bool DetourExists(const Graph& g, Vertex s, Vertex t, int k,
                  const OracleLimits& limits = {});

// Split-vertex property for a path from x to t (its first and last vertex)
// of length at most d(t) - d(x) + k, with m = record.stable: when
// d(x) <= d(t) - ceil((k - m) / 2) - 1, some y on the path has
//   d(x) + 1 <= d(y) <= d(x) + (k - m) / 2 + 1,
//   every vertex after y strictly deeper than y,
//   every vertex up to y no deeper than y.
// Vacuously true when the precondition or the length bound fails.
bool CheckSplitClaim(const PathRecord& record, const LayeredGraph& lg, int k);
// Uses the tightest k, the record's own offset length - (d(t) - d(x)).
bool CheckSplitClaim(const PathRecord& record, const LayeredGraph& lg);

// 2 * (k1 + l2) <= length + stable + 1.
bool CheckLabelBound(const PathRecord& record);

}  // namespace detourkit

#endif  // DETOURKIT_BRUTE_ORACLE_H_
