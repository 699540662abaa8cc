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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "detourkit/brute_oracle.h"
#include "detourkit/graph_io.h"
#include "tests/oracles/oracles.h"

namespace detourkit {
namespace {

PathSolverConfig With(Strategy s) {
  PathSolverConfig cfg;
  cfg.strategy = s;
  return cfg;
}

TEST(PathSolver, PathThroughMiddle) {
  // s - a - t
  const LayeredGraph lg = BfsLayers(PathGraph(3), 0);
  const SubgraphView full = SubgraphView::Full(lg);
  for (Strategy s : {Strategy::kSieve, Strategy::kBruteForce, Strategy::kAuto}) {
    EXPECT_TRUE(ExistsPathOfLength(full, 0, 2, 2, With(s))) << ToString(s);
    EXPECT_FALSE(ExistsPathOfLength(full, 0, 2, 1, With(s)));
    EXPECT_FALSE(ExistsPathOfLength(full, 0, 2, 3, With(s)));
  }
}

TEST(PathSolver, PetersenAdjacentPair) {
  const LayeredGraph lg = BfsLayers(PetersenGraph(), 0);
  const SubgraphView full = SubgraphView::Full(lg);
  const Vertex t = PetersenGraph().neighbors(0).front();
  const auto want = PathLengths(full, 0, t, 9);
  for (int len = 1; len <= 9; ++len) {
    EXPECT_EQ(ExistsPathOfLength(full, 0, t, len, With(Strategy::kSieve)),
              want[len])
        << "length " << len;
  }
}

TEST(PathSolver, CycleUpTo) {
  const LayeredGraph lg = BfsLayers(CycleGraph(5), 0);
  const SubgraphView full = SubgraphView::Full(lg);
  const std::vector<bool> want{false, true, false, false, true, false};
  EXPECT_EQ(ExistsPathUpTo(full, 0, 1, 5, With(Strategy::kSieve)), want);
  EXPECT_EQ(ExistsPathUpTo(full, 0, 1, 5, With(Strategy::kBruteForce)), want);
}

TEST(PathSolver, RandomGraphMatchesOracle) {
  const Graph g = Gnp(10, 0.4, 7);
  const LayeredGraph lg = BfsLayers(g, 0);
  const SubgraphView full = SubgraphView::Full(lg);
  for (Vertex t = 1; t < 10; ++t) {
    EXPECT_EQ(ExistsPathUpTo(full, 0, t, 6, With(Strategy::kSieve)),
              PathLengths(full, 0, t, 6))
        << "t = " << t;
  }
}

TEST(PathSolver, LengthZero) {
  const LayeredGraph lg = BfsLayers(PathGraph(3), 0);
  const SubgraphView full = SubgraphView::Full(lg);
  for (Strategy s : {Strategy::kSieve, Strategy::kBruteForce}) {
    EXPECT_TRUE(ExistsPathOfLength(full, 1, 1, 0, With(s)));
    EXPECT_FALSE(ExistsPathOfLength(full, 0, 1, 0, With(s)));
  }
}

TEST(PathSolver, RestrictedToView) {
  // 5-cycle, Tail(1) = {1, 2, 3}: only the direct edge 1-2 survives and
  // vertex 4 is outside.
  const LayeredGraph lg = BfsLayers(CycleGraph(5), 0);
  const SubgraphView tail = SubgraphView::Tail(lg, 1);
  const std::vector<bool> want{false, true, false};
  EXPECT_EQ(ExistsPathUpTo(tail, 1, 2, 2, With(Strategy::kSieve)), want);
  EXPECT_THROW(ExistsPathOfLength(tail, 1, 4, 1, With(Strategy::kSieve)),
               std::invalid_argument);
}

// One-sided error: a sieve "yes" is always backed by a real path.
TEST(PathSolver, SieveNeverClaimsAMissingPath) {
  Rng rng(11);
  PathSolverConfig cfg = With(Strategy::kSieve);
  cfg.repetitions = 2;  // weak amplification, still no false positives
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomConnectedGraph(8, 0.35, rng);
    const LayeredGraph lg = BfsLayers(g, 0);
    const SubgraphView full = SubgraphView::Full(lg);
    const Vertex t = 1 + trial % 7;
    cfg.master_seed = rng();
    const auto got = ExistsPathUpTo(full, 0, t, 7, cfg);
    const auto want = PathLengths(full, 0, t, 7);
    for (int l = 0; l <= 7; ++l) {
      if (got[l]) {
        EXPECT_TRUE(want[l]) << "trial " << trial << " l " << l;
      }
    }
  }
}

TEST(PathSolver, DefaultRepetitionsRarelyMiss) {
  Rng rng(12);
  int positives = 0, misses = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomConnectedGraph(9, 0.3, rng);
    const LayeredGraph lg = BfsLayers(g, 0);
    const SubgraphView full = SubgraphView::Full(lg);
    PathSolverConfig cfg = With(Strategy::kSieve);
    cfg.master_seed = rng();
    const Vertex t = 1 + trial % 8;
    const auto got = ExistsPathUpTo(full, 0, t, 7, cfg);
    const auto want = PathLengths(full, 0, t, 7);
    for (int l = 0; l <= 7; ++l) {
      positives += want[l];
      misses += want[l] && !got[l];
    }
  }
  ASSERT_GT(positives, 50);
  EXPECT_LE(misses * 100, positives);
}

TEST(PathSolver, RelabelingInvariance) {
  const Graph g = Gnp(9, 0.4, 3);
  std::vector<Vertex> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  const Graph h(9, edges);
  const LayeredGraph lg = BfsLayers(g, 0), lh = BfsLayers(h, perm[0]);
  for (Vertex t = 1; t < 9; ++t) {
    EXPECT_EQ(ExistsPathUpTo(SubgraphView::Full(lg), 0, t, 6,
                             With(Strategy::kSieve)),
              ExistsPathUpTo(SubgraphView::Full(lh), perm[0], perm[t], 6,
                             With(Strategy::kSieve)));
  }
}

TEST(PathSolver, DeterministicPerSeedAndStats) {
  const Graph g = Gnp(10, 0.35, 4);
  const LayeredGraph lg = BfsLayers(g, 0);
  const SubgraphView full = SubgraphView::Full(lg);
  PathSolverStats a, b;
  const auto ra = ExistsPathUpTo(full, 0, 5, 6, With(Strategy::kSieve), &a);
  const auto rb = ExistsPathUpTo(full, 0, 5, 6, With(Strategy::kSieve), &b);
  EXPECT_EQ(ra, rb);
  EXPECT_EQ(a.dp_states_touched, b.dp_states_touched);
  EXPECT_GT(a.sieve_queries, 0u);
  EXPECT_GT(a.bipartitions, 0u);
  EXPECT_EQ(a.brute_force_calls, 0u);

  PathSolverStats c;
  ExistsPathUpTo(full, 0, 5, 3, {}, &c);  // auto: cap <= 4
  EXPECT_EQ(c.brute_force_calls, 1u);
  EXPECT_EQ(c.sieve_queries, 0u);
}

TEST(PathSolver, LabelBudget) {
  EXPECT_EQ(PathLabelBudget(0, 0), 1);
  EXPECT_EQ(PathLabelBudget(3, 0), 3);
  EXPECT_EQ(PathLabelBudget(7, 2), 8);
}

TEST(PathSolver, Errors) {
  const LayeredGraph lg = BfsLayers(CycleGraph(5), 0);
  const SubgraphView full = SubgraphView::Full(lg);
  EXPECT_THROW(ExistsPathOfLength(full, 0, 1, -1), std::invalid_argument);
  EXPECT_THROW(ExistsPathOfLength(full, 0, 7, 2), std::invalid_argument);
  const SubgraphView tail = SubgraphView::Tail(lg, 1);
  EXPECT_THROW(ExistsPathOfLength(tail, 0, 1, 1), std::invalid_argument);
  PathSolverConfig bad;
  bad.repetitions = 0;
  EXPECT_THROW(ExistsPathOfLength(full, 0, 1, 1, bad), std::invalid_argument);
  EXPECT_EQ(ParseStrategy("brute"), Strategy::kBruteForce);
  EXPECT_EQ(ParseStrategy("sieve"), Strategy::kSieve);
  EXPECT_EQ(ParseStrategy("auto"), Strategy::kAuto);
  EXPECT_FALSE(ParseStrategy("fast").has_value());
}

}  // namespace
}  // namespace detourkit
