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

// Layered dynamic program for k-Detour: is there a simple s-t path of length
// exactly dist(s, t) + k?
//
// Vertices are processed by decreasing BFS depth. For each vertex x with
// d(x) <= d(t) the program records L(x), the lengths of x-t paths inside
// G_(x,inf), as offsets r = length - (d(t) - d(x)) in [0, k]. Vertices close
// to t get L(x) from a direct path search. Deeper in the recursion a path
// from x either has few stable edges, and then has few labeled elements
// under the parity partition so the bipartitioned sieve catches it (on the
// whole tail, or on an interval prefix glued to a known L(y)), or it has
// many stable edges and therefore splits early at a vertex y close to x.
// The split parameter alpha trades the two cases.

#ifndef DETOURKIT_DETOUR_DP_H_
#define DETOURKIT_DETOUR_DP_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "detourkit/layered_graph.h"
#include "detourkit/path_solver.h"
#include "detourkit/rng.h"

namespace detourkit {

// Exact rational in [0, 1).
struct Alpha {
  int64_t num = 55814;
  int64_t den = 100000;

  // Parses "num/den" or a bare integer numerator over 1 ("0"). Throws
  // std::invalid_argument unless 0 <= num < den.
  static Alpha Parse(std::string_view text);
  std::string ToString() const;

  friend bool operator==(const Alpha&, const Alpha&) = default;
};

// Label budgets for the low-stable-edge case.
enum class LabelBudget {
  // 4 (k1 + l2) <= 3k + m + 2 for both the whole-tail and the prefix query.
  kListing,
  // 4 (k1 + l2) <= 3k + m + 4 for the whole tail and 3k + m + 6 for the
  // prefix. A path whose two endpoints both lie in V1 carries up to
  // (q + m + 2) / 2 labels, one more than the listing assumes.
  kCorrected,
};

struct DetourConfig {
  Alpha alpha;
  PathSolverConfig solver;
  uint64_t seed = kDefaultSeed;
  // Random evaluations per bipartitioned sieve table.
  int sieve_reps = 1;
  LabelBudget label_budget = LabelBudget::kCorrected;
  // Also require length + 1 >= k1 + 2 l2 for the bipartitioned queries.
  // Real paths can violate it, so it is off by default.
  bool narrow_feasibility_filter = false;
};

// Per-vertex offset bitsets. (x, r) set means a path of length
// d(t) - d(x) + r from x to t inside G_(x,inf) was found.
class OffsetTable {
 public:
  OffsetTable() = default;
  OffsetTable(int num_vertices, int k);

  int k() const { return k_; }
  int num_vertices() const { return static_cast<int>(tracked_.size()); }

  // Vertices with d(x) <= d(t).
  bool tracked(Vertex x) const { return tracked_[x] != 0; }
  void Track(Vertex x) { tracked_[x] = 1; }

  bool Has(Vertex x, int r) const {
    return r >= 0 && r <= k_ && bits_[Index(x, r)] != 0;
  }
  void Set(Vertex x, int r) { bits_[Index(x, r)] = 1; }
  std::vector<int> Offsets(Vertex x) const;

  friend bool operator==(const OffsetTable&, const OffsetTable&) = default;

 private:
  size_t Index(Vertex x, int r) const {
    return static_cast<size_t>(x) * (k_ + 1) + r;
  }

  int k_ = 0;
  std::vector<char> tracked_;
  std::vector<char> bits_;
};

struct DetourStats {
  uint64_t dp_states_touched = 0;
  uint64_t sieve_queries = 0;
  uint64_t sieve_tables = 0;
  uint64_t path_solver_calls = 0;
};

struct DetourResult {
  bool answer = false;
  bool target_reachable = false;
  // -1 when t is unreachable.
  int dist_st = -1;
  OffsetTable table;
  DetourStats stats;
};

// Runs the full program. For k = 0 the answer is reachability and the table
// is still computed. Throws std::out_of_range for bad vertex ids and
// std::invalid_argument for negative k or a malformed config.
DetourResult SolveDetour(const Graph& g, Vertex s, Vertex t, int k,
                         const DetourConfig& cfg = {});

// Decision only; k = 0 short-circuits to reachability of t.
bool Solve(const Graph& g, Vertex s, Vertex t, int k,
           const DetourConfig& cfg = {});

// Empty table (nothing tracked) when t is unreachable.
OffsetTable ComputeOffsetTable(const Graph& g, Vertex s, Vertex t, int k,
                               const DetourConfig& cfg = {},
                               DetourStats* stats = nullptr);

}  // namespace detourkit

#endif  // DETOURKIT_DETOUR_DP_H_
