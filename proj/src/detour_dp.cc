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

#include "detourkit/detour_dp.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <stdexcept>
#include <utility>

#include "detourkit/walk_sieve.h"

namespace detourkit {

Alpha Alpha::Parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw std::invalid_argument("alpha must look like NUM/DEN, got '" +
                                  std::string(text) + "'");
    }
    return value;
  };
  Alpha a;
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    a.num = parse_int(text);
    a.den = 1;
  } else {
    a.num = parse_int(text.substr(0, slash));
    a.den = parse_int(text.substr(slash + 1));
  }
  if (a.den <= 0 || a.den > 1'000'000'000 || a.num < 0 || a.num >= a.den) {
    throw std::invalid_argument("alpha must satisfy 0 <= num/den < 1 with "
                                "0 < den <= 10^9, got '" +
                                std::string(text) + "'");
  }
  return a;
}

std::string Alpha::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

OffsetTable::OffsetTable(int num_vertices, int k)
    : k_(k),
      tracked_(num_vertices, 0),
      bits_(static_cast<size_t>(num_vertices) * (k + 1), 0) {}

std::vector<int> OffsetTable::Offsets(Vertex x) const {
  std::vector<int> out;
  for (int r = 0; r <= k_; ++r) {
    if (Has(x, r)) out.push_back(r);
  }
  return out;
}

namespace {

void ValidateConfig(const DetourConfig& cfg) {
  const Alpha& a = cfg.alpha;
  if (a.den <= 0 || a.num < 0 || a.num >= a.den) {
    throw std::invalid_argument("alpha must satisfy 0 <= num/den < 1");
  }
  if (cfg.sieve_reps < 1) {
    throw std::invalid_argument("sieve reps must be positive");
  }
}

class Runner {
 public:
  Runner(const LayeredGraph& lg, Vertex t, int k, const DetourConfig& cfg,
         DetourStats* stats)
      : lg_(lg),
        t_(t),
        k_(k),
        dt_(lg.dist(t)),
        cfg_(cfg),
        stats_(stats),
        partition_(ParityPartition(lg)),
        table_(lg.num_vertices(), k) {
    const int64_t num = cfg.alpha.num, den = cfg.alpha.den;
    base_depth_ = static_cast<int>((den - num) * k / (2 * den));
    base_cap_ = static_cast<int>((3 * den - num) * k / (2 * den));
    // The few-stable-edges split runs for m < alpha k.
    for (int m = 0; m * den < k * num; ++m) stable_counts_.push_back(m);
    solver_cfg_ = cfg.solver;
    solver_cfg_.master_seed = DeriveSeed(cfg.seed, {cfg.solver.master_seed});
  }

  OffsetTable Run() {
    for (Vertex x = 0; x < lg_.num_vertices(); ++x) {
      if (lg_.reachable(x) && lg_.dist(x) <= dt_) table_.Track(x);
    }
    table_.Set(t_, 0);
    const int first_inductive = dt_ - base_depth_ - 1;
    for (int d = std::max(0, first_inductive + 1); d <= dt_; ++d) {
      for (Vertex x : lg_.layer(d)) BaseCase(x);
    }
    for (int d = first_inductive; d >= 0; --d) {
      for (Vertex x : lg_.layer(d)) {
        LowStable(x);
        HighStable(x);
      }
    }
    return std::move(table_);
  }

 private:
  int Gap(Vertex x) const { return dt_ - lg_.dist(x); }

  // Records a path of `length` edges from x to t.
  void Insert(Vertex x, int length) {
    const int r = length - Gap(x);
    if (r >= 0 && r <= k_) table_.Set(x, r);
  }

  // Records a + L(y) for a path of `a` edges from x to y.
  void InsertShifted(Vertex x, int a, Vertex y) {
    const int shift = a - (lg_.dist(y) - lg_.dist(x));
    for (int r = 0; r <= k_; ++r) {
      if (table_.Has(y, r) && r + shift >= 0 && r + shift <= k_) {
        table_.Set(x, r + shift);
      }
    }
  }

  bool HasAny(Vertex y) const {
    for (int r = 0; r <= k_; ++r) {
      if (table_.Has(y, r)) return true;
    }
    return false;
  }

  std::vector<bool> Paths(const SubgraphView& view, Vertex from, Vertex to,
                          int cap) {
    PathSolverStats ps;
    auto lengths = ExistsPathUpTo(view, from, to, cap, solver_cfg_, &ps);
    if (stats_ != nullptr) {
      ++stats_->path_solver_calls;
      stats_->dp_states_touched += ps.dp_states_touched;
      stats_->sieve_queries += ps.sieve_queries;
    }
    return lengths;
  }

  // Close to t: every length up to the base cap, searched directly.
  void BaseCase(Vertex x) {
    if (x != t_ && lg_.dist(x) >= dt_) return;
    const int cap = std::min(base_cap_, Gap(x) + k_);
    const SubgraphView tail = SubgraphView::Tail(lg_, x);
    const std::vector<bool> lengths = Paths(tail, x, t_, cap);
    for (int len = Gap(x); len <= cap; ++len) {
      if (lengths[len]) Insert(x, len);
    }
  }

  int LabelLimit(int m, bool prefix) const {
    int extra = 2;
    if (cfg_.label_budget == LabelBudget::kCorrected) extra = prefix ? 6 : 4;
    return (3 * k_ + m + extra) / 4;
  }

  // Label pairs (k1, l2) admitted for a query of `length` edges.
  bool Admits(int length, int k1, int l2) const {
    return !cfg_.narrow_feasibility_filter || length + 1 >= k1 + 2 * l2;
  }

  const std::vector<WalkSieveTable>& Tables(const SubgraphView& view,
                                            Vertex from,
                                            const SieveLimits& limits) {
    const std::pair<uint64_t, Vertex> key{view.Key(), from};
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    Rng rng(DeriveSeed(cfg_.seed, {view.Key(), static_cast<uint64_t>(from)}));
    std::vector<WalkSieveTable> tables;
    for (int rep = 0; rep < cfg_.sieve_reps; ++rep) {
      const VarAssignment vars =
          VarAssignment::Sample(lg_.graph(), limits.max_labels, rng);
      tables.push_back(
          WalkSieveTable::Build(view, partition_, from, limits, vars));
      if (stats_ != nullptr) {
        stats_->dp_states_touched += tables.back().states_touched();
        ++stats_->sieve_tables;
      }
    }
    return tables_.emplace(key, std::move(tables)).first->second;
  }

  // Memoized bipartitioned query against the batch tables of (view, from).
  bool Bipartitioned(const SubgraphView& view, Vertex from, Vertex to,
                     int length, int k1, int l2, const SieveLimits& limits) {
    const std::array<uint64_t, 6> key{view.Key(),
                                      static_cast<uint64_t>(from),
                                      static_cast<uint64_t>(to),
                                      static_cast<uint64_t>(length),
                                      static_cast<uint64_t>(k1),
                                      static_cast<uint64_t>(l2)};
    auto it = answers_.find(key);
    if (it != answers_.end()) return it->second;
    if (stats_ != nullptr) ++stats_->sieve_queries;
    bool found = false;
    for (const WalkSieveTable& table : Tables(view, from, limits)) {
      if (!table.Value(to, length, k1, l2).is_zero()) {
        found = true;
        break;
      }
    }
    answers_.emplace(key, found);
    return found;
  }

  // Paths with m < alpha k stable edges carry few labels under the parity
  // partition.
  void LowStable(Vertex x) {
    if (stable_counts_.empty()) return;
    const int dx = lg_.dist(x);
    const SubgraphView tail = SubgraphView::Tail(lg_, x);
    const int tail_labels = LabelLimit(stable_counts_.back(), false);
    const SieveLimits tail_limits{std::min(2 * tail_labels, Gap(x) + k_),
                                  tail_labels, tail_labels, tail_labels};
    const int prefix_labels = LabelLimit(stable_counts_.back(), true);

    for (int m : stable_counts_) {
      // Whole path x -> t in the tail.
      const int budget = LabelLimit(m, false);
      for (int k1 = 0; k1 <= budget; ++k1) {
        for (int l2 = 0; k1 + l2 <= budget; ++l2) {
          const int top = std::min(2 * k1 + l2, Gap(x) + k_);
          for (int len = Gap(x); len <= top; ++len) {
            if (table_.Has(x, len - Gap(x)) || !Admits(len, k1, l2)) continue;
            if (Bipartitioned(tail, x, t_, len, k1, l2, tail_limits)) {
              Insert(x, len);
            }
          }
        }
      }

      // Prefix x -> y in an interval, glued to L(y).
      const int prefix_budget = LabelLimit(m, true);
      const int top_depth = std::min(dt_, dx + (3 * k_ - m) / 2 + 1);
      for (int dy = dx + 1; dy <= top_depth; ++dy) {
        const SubgraphView interval = SubgraphView::IntervalToDepth(lg_, x, dy);
        const SieveLimits limits{std::min(2 * prefix_labels, dy - dx + k_),
                                 prefix_labels, prefix_labels, prefix_labels};
        for (Vertex y : lg_.layer(dy)) {
          if (!HasAny(y)) continue;
          for (int k1 = 0; k1 <= prefix_budget; ++k1) {
            for (int l2 = 0; k1 + l2 <= prefix_budget; ++l2) {
              const int top = std::min(2 * k1 + l2, dy - dx + k_);
              for (int a = dy - dx; a <= top; ++a) {
                if (!Admits(a, k1, l2)) continue;
                if (Bipartitioned(interval, x, y, a, k1, l2, limits)) {
                  InsertShifted(x, a, y);
                }
              }
            }
          }
        }
      }
    }
  }

  // Paths with at least alpha k stable edges split at a y close to x. The
  // search does not depend on m, so it runs once.
  void HighStable(Vertex x) {
    const int dx = lg_.dist(x);
    const int top_depth = std::min(dt_, dx + base_depth_ + 1);
    for (int dy = dx + 1; dy <= top_depth; ++dy) {
      const SubgraphView interval = SubgraphView::IntervalToDepth(lg_, x, dy);
      const int cap = std::min(base_cap_ + 1, dy - dx + k_);
      for (Vertex y : lg_.layer(dy)) {
        if (!HasAny(y)) continue;
        const std::vector<bool> lengths = Paths(interval, x, y, cap);
        for (int a = dy - dx; a <= cap; ++a) {
          if (lengths[a]) InsertShifted(x, a, y);
        }
      }
    }
  }

  const LayeredGraph& lg_;
  const Vertex t_;
  const int k_;
  const int dt_;
  const DetourConfig& cfg_;
  DetourStats* stats_;
  const Bipartition partition_;
  OffsetTable table_;
  int base_depth_ = 0;
  int base_cap_ = 0;
  std::vector<int> stable_counts_;
  PathSolverConfig solver_cfg_;
  std::map<std::pair<uint64_t, Vertex>, std::vector<WalkSieveTable>> tables_;
  std::map<std::array<uint64_t, 6>, bool> answers_;
};

void ValidateQuery(const Graph& g, Vertex s, Vertex t, int k) {
  if (!g.IsVertex(s) || !g.IsVertex(t)) {
    throw std::out_of_range("s and t must be vertices of the graph");
  }
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
}

}  // namespace

OffsetTable ComputeOffsetTable(const Graph& g, Vertex s, Vertex t, int k,
                               const DetourConfig& cfg, DetourStats* stats) {
  ValidateQuery(g, s, t, k);
  ValidateConfig(cfg);
  const LayeredGraph lg = BfsLayers(g, s);
  if (!lg.reachable(t)) return OffsetTable(g.num_vertices(), k);
  return Runner(lg, t, k, cfg, stats).Run();
}

DetourResult SolveDetour(const Graph& g, Vertex s, Vertex t, int k,
                         const DetourConfig& cfg) {
  ValidateQuery(g, s, t, k);
  ValidateConfig(cfg);
  DetourResult result;
  const LayeredGraph lg = BfsLayers(g, s);
  result.target_reachable = lg.reachable(t);
  if (!result.target_reachable) {
    result.table = OffsetTable(g.num_vertices(), k);
    return result;
  }
  result.dist_st = lg.dist(t);
  result.table = Runner(lg, t, k, cfg, &result.stats).Run();
  result.answer = k == 0 || result.table.Has(s, k);
  return result;
}

bool Solve(const Graph& g, Vertex s, Vertex t, int k, const DetourConfig& cfg) {
  ValidateQuery(g, s, t, k);
  ValidateConfig(cfg);
  if (k == 0) return BfsLayers(g, s).reachable(t);
  return SolveDetour(g, s, t, k, cfg).answer;
}

}  // namespace detourkit
