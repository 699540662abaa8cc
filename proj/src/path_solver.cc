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

#include "detourkit/path_solver.h"

#include <algorithm>
#include <stdexcept>

#include "detourkit/brute_oracle.h"
#include "detourkit/walk_sieve.h"

namespace detourkit {

const char* ToString(Strategy s) {
  switch (s) {
    case Strategy::kSieve:
      return "sieve";
    case Strategy::kBruteForce:
      return "brute";
    case Strategy::kAuto:
      return "auto";
  }
  return "?";
}

std::optional<Strategy> ParseStrategy(std::string_view text) {
  if (text == "sieve") return Strategy::kSieve;
  if (text == "brute") return Strategy::kBruteForce;
  if (text == "auto") return Strategy::kAuto;
  return std::nullopt;
}

int PathLabelBudget(int length, int slack) {
  return (3 * (length + 1) + 3) / 4 + slack;
}

namespace {

void Validate(const SubgraphView& view, Vertex from, Vertex to, int cap,
              const PathSolverConfig& cfg) {
  if (!view.Contains(from) || !view.Contains(to)) {
    throw std::invalid_argument("path endpoints must belong to the view");
  }
  if (cap < 0) throw std::invalid_argument("path length must be nonnegative");
  if (cfg.repetitions < 1 || cfg.sieve_reps < 1) {
    throw std::invalid_argument("repetitions must be positive");
  }
  if (cfg.budget_slack < 0) {
    throw std::invalid_argument("budget slack must be nonnegative");
  }
}

std::vector<bool> SieveUpTo(const SubgraphView& view, Vertex from, Vertex to,
                            int cap, bool only_cap,
                            const PathSolverConfig& cfg,
                            PathSolverStats* stats) {
  std::vector<bool> found(cap + 1, false);
  const Graph& g = view.graph();
  const int universe = PathLabelBudget(cap, cfg.budget_slack);
  // Feasibility l + 1 >= k1 + 2 l2 bounds both counts by the longest length.
  const SieveLimits limits{cap, std::min(universe, cap + 1),
                           std::min(universe, (cap + 1) / 2), universe};
  int remaining = only_cap ? 1 : cap + 1;
  for (int rep = 0; rep < cfg.repetitions && remaining > 0; ++rep) {
    Rng rng(DeriveSeed(cfg.master_seed,
                       {view.Key(), static_cast<uint64_t>(from),
                        static_cast<uint64_t>(to), static_cast<uint64_t>(cap),
                        static_cast<uint64_t>(rep)}));
    const Bipartition partition = RandomPartition(g, rng);
    if (stats != nullptr) ++stats->bipartitions;
    for (int eval = 0; eval < cfg.sieve_reps && remaining > 0; ++eval) {
      const VarAssignment vars = VarAssignment::Sample(g, universe, rng);
      const WalkSieveTable table =
          WalkSieveTable::Build(view, partition, from, limits, vars);
      if (stats != nullptr) stats->dp_states_touched += table.states_touched();
      for (int len = only_cap ? cap : 0; len <= cap; ++len) {
        if (found[len]) continue;
        const int budget = PathLabelBudget(len, cfg.budget_slack);
        for (int k1 = 0; k1 <= budget && !found[len]; ++k1) {
          for (int l2 = 0; k1 + l2 <= budget; ++l2) {
            if (len + 1 < k1 + 2 * l2) break;
            if (stats != nullptr) ++stats->sieve_queries;
            if (!table.Value(to, len, k1, l2).is_zero()) {
              found[len] = true;
              --remaining;
              break;
            }
          }
        }
      }
    }
  }
  return found;
}

bool UseBruteForce(const SubgraphView& view, int cap,
                   const PathSolverConfig& cfg) {
  switch (cfg.strategy) {
    case Strategy::kBruteForce:
      return true;
    case Strategy::kSieve:
      return false;
    case Strategy::kAuto:
      return view.num_vertices() <= cfg.auto_max_vertices ||
             cap <= cfg.auto_max_length;
  }
  return true;
}

std::vector<bool> Solve(const SubgraphView& view, Vertex from, Vertex to,
                        int cap, bool only_cap, const PathSolverConfig& cfg,
                        PathSolverStats* stats) {
  Validate(view, from, to, cap, cfg);
  if (UseBruteForce(view, cap, cfg)) {
    if (stats != nullptr) ++stats->brute_force_calls;
    OracleLimits unguarded;
    unguarded.force = true;
    return PathLengths(view, from, to, cap, unguarded);
  }
  return SieveUpTo(view, from, to, cap, only_cap, cfg, stats);
}

}  // namespace

std::vector<bool> ExistsPathUpTo(const SubgraphView& view, Vertex from,
                                 Vertex to, int cap,
                                 const PathSolverConfig& cfg,
                                 PathSolverStats* stats) {
  return Solve(view, from, to, cap, /*only_cap=*/false, cfg, stats);
}

bool ExistsPathOfLength(const SubgraphView& view, Vertex from, Vertex to,
                        int length, const PathSolverConfig& cfg,
                        PathSolverStats* stats) {
  return Solve(view, from, to, length, /*only_cap=*/true, cfg, stats)[length];
}

}  // namespace detourkit
