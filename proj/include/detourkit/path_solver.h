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

// Exact-length simple path detection inside a subgraph view.
//
// The sieve strategy draws R uniform random bipartitions. A fixed path of
// length l has about (l + 1) / 2 vertices in V1 and l / 4 edges inside V2,
// so with constant probability its signature (k1, l2) fits the label budget
// k1 + l2 <= ceil(3 (l + 1) / 4) + slack, and the bipartitioned sieve finds
// it. Answers are one-sided: `true` is always correct.

#ifndef DETOURKIT_PATH_SOLVER_H_
#define DETOURKIT_PATH_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "detourkit/layered_graph.h"
#include "detourkit/rng.h"

namespace detourkit {

enum class Strategy { kSieve, kBruteForce, kAuto };

const char* ToString(Strategy s);
// Accepts "sieve", "brute" and "auto".
std::optional<Strategy> ParseStrategy(std::string_view text);

struct PathSolverConfig {
  int budget_slack = 2;
  int repetitions = 32;
  Strategy strategy = Strategy::kAuto;
  uint64_t master_seed = kDefaultSeed;
  // Auto switches to brute force for views this small or lengths this short.
  int auto_max_vertices = 14;
  int auto_max_length = 4;
  // Random evaluations per bipartition.
  int sieve_reps = 1;
};

struct PathSolverStats {
  uint64_t dp_states_touched = 0;
  uint64_t sieve_queries = 0;
  uint64_t bipartitions = 0;
  uint64_t brute_force_calls = 0;
};

// ceil(3 (length + 1) / 4) + slack.
int PathLabelBudget(int length, int slack);

// Throws std::invalid_argument for endpoints outside the view, a negative
// length or a malformed config, and LimitExceeded when the label budget
// exceeds the sieve's cap.
bool ExistsPathOfLength(const SubgraphView& view, Vertex from, Vertex to,
                        int length, const PathSolverConfig& cfg = {},
                        PathSolverStats* stats = nullptr);

// result[l] for l in [0, cap]: whether a path of exactly l edges was found.
// One DP table per bipartition answers every length.
std::vector<bool> ExistsPathUpTo(const SubgraphView& view, Vertex from,
                                 Vertex to, int cap,
                                 const PathSolverConfig& cfg = {},
                                 PathSolverStats* stats = nullptr);

}  // namespace detourkit

#endif  // DETOURKIT_PATH_SOLVER_H_
