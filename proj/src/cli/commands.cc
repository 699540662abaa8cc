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

#include <charconv>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "detourkit/brute_oracle.h"
#include "detourkit/cli.h"
#include "detourkit/detour_dp.h"
#include "detourkit/errors.h"
#include "detourkit/graph_io.h"
#include "detourkit/path_solver.h"
#include "detourkit/walk_sieve.h"
#include "json.hpp"

namespace detourkit {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Raised for bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  int s = 0;
  int t = 0;
  int k = 0;
  int len = 0;
  int k1 = 0;
  int l2 = 0;
  std::string alpha = "55814/100000";
  uint64_t seed = 0;
  int reps = 0;
  int budget_slack = 2;
  std::string strategy = "auto";
  std::string partition = "parity";
  std::string family;
  int n = 0;
  double p = 0.5;
  int kmax = 0;
  std::string csv;
};

struct LoadedGraph {
  Graph graph;
  std::string digest;
};

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LoadedGraph Load(const std::string& path) {
  const std::string text = ReadAll(path);
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(text)));
  return {ParseGraph(text), std::string("fnv1a64:") + hex};
}

uint64_t ParseU64(const std::string& text, const std::string& what) {
  uint64_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(what + " must be an unsigned 64-bit integer, got '" +
                     text + "'");
  }
  return value;
}

// --seed, else DETOURKIT_SEED, else the library default.
uint64_t ResolveSeed(const CLI::App& sub, const Options& o) {
  if (sub.count("--seed") > 0) return o.seed;
  if (const char* env = std::getenv("DETOURKIT_SEED"); env != nullptr) {
    return ParseU64(env, "DETOURKIT_SEED");
  }
  return kDefaultSeed;
}

Strategy ResolveStrategy(const Options& o) {
  const auto s = ParseStrategy(o.strategy);
  if (!s) throw UsageError("unknown strategy '" + o.strategy + "'");
  return *s;
}

void CheckVertex(const Graph& g, int v, const char* flag) {
  if (!g.IsVertex(v)) {
    throw UsageError(std::string(flag) + " " + std::to_string(v) +
                     " is not a vertex of the graph");
  }
}

double MillisSince(Clock::time_point start) {
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      Clock::now() - start)
                      .count();
  return static_cast<double>(us) / 1000.0;
}

Json Report(const std::string& command, const std::string& digest,
            Json parameters, bool answer, int dist_st, double elapsed_ms,
            uint64_t states, uint64_t queries) {
  Json r;
  r["command"] = command;
  r["input_digest"] = digest;
  r["parameters"] = std::move(parameters);
  r["answer"] = answer;
  r["dist_st"] = dist_st >= 0 ? Json(dist_st) : Json(nullptr);
  r["elapsed_ms"] = elapsed_ms;
  r["dp_states_touched"] = states;
  r["sieve_queries_issued"] = queries;
  return r;
}

int DistanceOrMinus(const Graph& g, int s, int t) {
  const LayeredGraph lg = BfsLayers(g, s);
  return lg.reachable(t) ? lg.dist(t) : -1;
}

int Emit(std::ostream& out, const Json& report) {
  out << report.dump(2) << "\n";
  return report["answer"].get<bool>() ? kExitYes : kExitNo;
}

int CmdDetour(const CLI::App& sub, const Options& o, std::ostream& out) {
  const LoadedGraph in = Load(o.graph);
  CheckVertex(in.graph, o.s, "--s");
  CheckVertex(in.graph, o.t, "--t");
  if (o.k < 0) throw UsageError("--k must be nonnegative");
  DetourConfig cfg;
  cfg.alpha = Alpha::Parse(o.alpha);
  cfg.seed = ResolveSeed(sub, o);
  cfg.solver.strategy = ResolveStrategy(o);
  cfg.solver.budget_slack = o.budget_slack;
  cfg.solver.repetitions = o.reps > 0 ? o.reps : PathSolverConfig{}.repetitions;
  const auto start = Clock::now();
  const DetourResult res = SolveDetour(in.graph, o.s, o.t, o.k, cfg);
  const double ms = MillisSince(start);
  Json params;
  params["s"] = o.s;
  params["t"] = o.t;
  params["k"] = o.k;
  params["alpha"] = cfg.alpha.ToString();
  params["seed"] = cfg.seed;
  params["reps"] = cfg.solver.repetitions;
  params["budget_slack"] = cfg.solver.budget_slack;
  params["strategy"] = ToString(cfg.solver.strategy);
  Json report = Report("detour", in.digest, std::move(params), res.answer,
                       res.dist_st, ms, res.stats.dp_states_touched,
                       res.stats.sieve_queries);
  report["target_reachable"] = res.target_reachable;
  return Emit(out, report);
}

Bipartition ResolvePartition(const Options& o, const LayeredGraph& lg) {
  if (o.partition == "parity") return ParityPartition(lg);
  return ReadPartitionFile(o.partition, lg.num_vertices());
}

int CmdBipath(const CLI::App& sub, const Options& o, std::ostream& out,
              bool oracle) {
  const LoadedGraph in = Load(o.graph);
  CheckVertex(in.graph, o.s, "--s");
  CheckVertex(in.graph, o.t, "--t");
  const LayeredGraph lg = BfsLayers(in.graph, o.s);
  const Bipartition partition = ResolvePartition(o, lg);
  const SubgraphView view = SubgraphView::Full(lg);
  Json params;
  params["s"] = o.s;
  params["t"] = o.t;
  params["len"] = o.len;
  params["k1"] = o.k1;
  params["l2"] = o.l2;
  params["partition"] = o.partition;
  const auto start = Clock::now();
  bool answer = false;
  SieveStats stats;
  if (oracle) {
    answer = BipartitionedExists(view, o.s, o.t, o.len, o.k1, o.l2, partition);
  } else {
    const uint64_t seed = ResolveSeed(sub, o);
    const int reps = o.reps > 0 ? o.reps : 1;
    params["seed"] = seed;
    params["reps"] = reps;
    const SieveQuery q{&view, &partition, o.s, o.t, o.len, o.k1, o.l2};
    Rng rng(seed);
    answer = Decide(q, rng, reps, &stats);
  }
  const double ms = MillisSince(start);
  return Emit(out, Report(oracle ? "oracle bipath" : "bipath", in.digest,
                          std::move(params), answer,
                          DistanceOrMinus(in.graph, o.s, o.t), ms,
                          stats.dp_states_touched, stats.evaluations));
}

int CmdPath(const CLI::App& sub, const Options& o, std::ostream& out,
            bool oracle) {
  const LoadedGraph in = Load(o.graph);
  CheckVertex(in.graph, o.s, "--s");
  CheckVertex(in.graph, o.t, "--t");
  if (o.len < 0) throw UsageError("--len must be nonnegative");
  const LayeredGraph lg = BfsLayers(in.graph, o.s);
  const SubgraphView view = SubgraphView::Full(lg);
  Json params;
  params["s"] = o.s;
  params["t"] = o.t;
  params["len"] = o.len;
  const auto start = Clock::now();
  bool answer = false;
  PathSolverStats stats;
  if (oracle) {
    answer = PathLengths(view, o.s, o.t, o.len)[o.len];
  } else {
    PathSolverConfig cfg;
    cfg.master_seed = ResolveSeed(sub, o);
    cfg.strategy = ResolveStrategy(o);
    cfg.budget_slack = o.budget_slack;
    if (o.reps > 0) cfg.repetitions = o.reps;
    params["seed"] = cfg.master_seed;
    params["reps"] = cfg.repetitions;
    params["budget_slack"] = cfg.budget_slack;
    params["strategy"] = ToString(cfg.strategy);
    answer = ExistsPathOfLength(view, o.s, o.t, o.len, cfg, &stats);
  }
  const double ms = MillisSince(start);
  return Emit(out, Report(oracle ? "oracle path" : "path", in.digest,
                          std::move(params), answer,
                          DistanceOrMinus(in.graph, o.s, o.t), ms,
                          stats.dp_states_touched, stats.sieve_queries));
}

int CmdOracleDetour(const Options& o, std::ostream& out) {
  const LoadedGraph in = Load(o.graph);
  CheckVertex(in.graph, o.s, "--s");
  CheckVertex(in.graph, o.t, "--t");
  if (o.k < 0) throw UsageError("--k must be nonnegative");
  Json params;
  params["s"] = o.s;
  params["t"] = o.t;
  params["k"] = o.k;
  const auto start = Clock::now();
  const bool answer = DetourExists(in.graph, o.s, o.t, o.k);
  const double ms = MillisSince(start);
  return Emit(out, Report("oracle detour", in.digest, std::move(params),
                          answer, DistanceOrMinus(in.graph, o.s, o.t), ms, 0,
                          0));
}

int CmdGen(const CLI::App& sub, const Options& o, std::ostream& out) {
  Graph g;
  if (o.family == "path") {
    g = PathGraph(o.n);
  } else if (o.family == "cycle") {
    g = CycleGraph(o.n);
  } else if (o.family == "grid") {
    const int side = static_cast<int>(std::lround(std::sqrt(o.n)));
    if (side * side != o.n || o.n < 1) {
      throw UsageError("grid needs --n to be a positive perfect square");
    }
    g = GridGraph(side);
  } else if (o.family == "gnp") {
    g = Gnp(o.n, o.p, ResolveSeed(sub, o));
  } else if (o.family == "petersen") {
    if (sub.count("--n") > 0 && o.n != 10) {
      throw UsageError("the Petersen graph has 10 vertices");
    }
    g = PetersenGraph();
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  out << SerializeGraph(g);
  return kExitYes;
}

int CmdBench(const CLI::App& sub, const Options& o, std::ostream& out) {
  const LoadedGraph in = Load(o.graph);
  CheckVertex(in.graph, o.s, "--s");
  CheckVertex(in.graph, o.t, "--t");
  if (o.kmax < 1) throw UsageError("--kmax must be positive");
  DetourConfig cfg;
  cfg.alpha = Alpha::Parse(o.alpha);
  cfg.seed = ResolveSeed(sub, o);
  cfg.solver.strategy = ResolveStrategy(o);
  std::ostringstream csv;
  csv << "k,elapsed_ms,dp_states_touched,sieve_queries\n";
  for (int k = 1; k <= o.kmax; ++k) {
    const auto start = Clock::now();
    const DetourResult res = SolveDetour(in.graph, o.s, o.t, k, cfg);
    const double ms = MillisSince(start);
    csv << k << "," << ms << "," << res.stats.dp_states_touched << ","
        << res.stats.sieve_queries << "\n";
  }
  if (o.csv.empty()) {
    out << csv.str();
  } else {
    std::ofstream file(o.csv, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + o.csv + "'");
    file << csv.str();
  }
  return kExitYes;
}

void AddGraphFlags(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph, "graph file")->required();
  sub->add_option("--s", o.s, "source vertex id")->required();
  sub->add_option("--t", o.t, "target vertex id")->required();
}

void AddSeed(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "master seed (default: $DETOURKIT_SEED)");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"k-Detour and bipartitioned path solvers"};
  app.name("detourkit");
  app.require_subcommand(1);
  Options o;

  auto* detour = app.add_subcommand("detour", "s-t path of length dist + k");
  AddGraphFlags(detour, o);
  detour->add_option("--k", o.k, "offset over dist(s, t)")->required();
  detour->add_option("--alpha", o.alpha, "split parameter NUM/DEN");
  AddSeed(detour, o);
  detour->add_option("--reps", o.reps, "random bipartitions per path query");
  detour->add_option("--budget-slack", o.budget_slack, "extra label budget");
  detour->add_option("--strategy", o.strategy, "sieve|brute|auto");

  auto* bipath = app.add_subcommand("bipath", "bipartitioned path query");
  AddGraphFlags(bipath, o);
  bipath->add_option("--len", o.len, "path length")->required();
  bipath->add_option("--k1", o.k1, "vertices in V1")->required();
  bipath->add_option("--l2", o.l2, "edges inside V2")->required();
  bipath->add_option("--partition", o.partition, "parity or a FILE of 1/2");
  AddSeed(bipath, o);
  bipath->add_option("--reps", o.reps, "random evaluations");

  auto* path = app.add_subcommand("path", "exact-length path query");
  AddGraphFlags(path, o);
  path->add_option("--len", o.len, "path length")->required();
  AddSeed(path, o);
  path->add_option("--reps", o.reps, "random bipartitions");
  path->add_option("--budget-slack", o.budget_slack, "extra label budget");
  path->add_option("--strategy", o.strategy, "sieve|brute|auto");

  auto* oracle = app.add_subcommand("oracle", "exhaustive reference answers");
  oracle->require_subcommand(1);
  auto* o_detour = oracle->add_subcommand("detour", "exhaustive k-Detour");
  AddGraphFlags(o_detour, o);
  o_detour->add_option("--k", o.k, "offset over dist(s, t)")->required();
  auto* o_path = oracle->add_subcommand("path", "exhaustive path query");
  AddGraphFlags(o_path, o);
  o_path->add_option("--len", o.len, "path length")->required();
  auto* o_bipath = oracle->add_subcommand("bipath", "exhaustive bipath query");
  AddGraphFlags(o_bipath, o);
  o_bipath->add_option("--len", o.len, "path length")->required();
  o_bipath->add_option("--k1", o.k1, "vertices in V1")->required();
  o_bipath->add_option("--l2", o.l2, "edges inside V2")->required();
  o_bipath->add_option("--partition", o.partition, "parity or a FILE of 1/2");

  auto* gen = app.add_subcommand("gen", "print a generated graph file");
  gen->add_option("--family", o.family, "path|cycle|grid|gnp|petersen")
      ->required();
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--p", o.p, "edge probability for gnp");
  AddSeed(gen, o);

  auto* bench = app.add_subcommand("bench", "detour sweep over k = 1..kmax");
  AddGraphFlags(bench, o);
  bench->add_option("--kmax", o.kmax, "largest k")->required();
  bench->add_option("--alpha", o.alpha, "split parameter NUM/DEN");
  bench->add_option("--csv", o.csv, "write CSV here instead of stdout");
  bench->add_option("--strategy", o.strategy, "sieve|brute|auto");
  AddSeed(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  std::string command;
  try {
    if (detour->parsed()) {
      command = "detour";
      return CmdDetour(*detour, o, out);
    }
    if (bipath->parsed()) {
      command = "bipath";
      return CmdBipath(*bipath, o, out, /*oracle=*/false);
    }
    if (path->parsed()) {
      command = "path";
      return CmdPath(*path, o, out, /*oracle=*/false);
    }
    if (o_detour->parsed()) {
      command = "oracle detour";
      return CmdOracleDetour(o, out);
    }
    if (o_path->parsed()) {
      command = "oracle path";
      return CmdPath(*o_path, o, out, /*oracle=*/true);
    }
    if (o_bipath->parsed()) {
      command = "oracle bipath";
      return CmdBipath(*o_bipath, o, out, /*oracle=*/true);
    }
    if (gen->parsed()) {
      command = "gen";
      return CmdGen(*gen, o, out);
    }
    if (bench->parsed()) {
      command = "bench";
      return CmdBench(*bench, o, out);
    }
  } catch (const std::exception& e) {
    err << "detourkit: " << e.what() << "\n";
    if (command != "gen" && command != "bench") {
      Json report;
      report["command"] = command;
      report["error"] = {{"message", e.what()}};
      out << report.dump(2) << "\n";
    }
    return kExitError;
  }
  err << "detourkit: no command\n";
  return kExitError;
}

}  // namespace detourkit
