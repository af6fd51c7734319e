// Copyright 2026 The setmax Authors.
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

#ifndef SETMAX_BB_H_
#define SETMAX_BB_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setmax/astral.h"
#include "setmax/decompose.h"
#include "setmax/ground.h"
#include "setmax/subset.h"

namespace setmax {

// Upper bound f_u used in the relaxed subproblems.
enum class FuMode {
  kModular,  // f_u(S) = sum of f(v): separable, solved in closed form
  kTight,    // f_u = f
};

// Solver for tight subproblems. Modular subproblems always use the closed
// form.
enum class Engine {
  kClosedForm,
  kInterval,     // exact preservation-rule search
  kLocalSearch,  // approximate local search, with exact fallback on small sets
};

enum class NodePolicy {
  // Highest parent bound first, newest first among equals.
  kBestParentBound,
  kDepthFirst,
};

struct BBConfig {
  FuMode fu_mode = FuMode::kModular;
  // Optional per-depth schedule; depth d uses fu_schedule[min(d, size-1)].
  std::vector<FuMode> fu_schedule;
  Engine engine = Engine::kClosedForm;
  double epsilon = 1.0;
  // rho >= 1: the relaxation value times rho bounds the subproblem optimum.
  // Must be 1 for exact engines.
  double approx_factor = 1.0;
  NodePolicy node_policy = NodePolicy::kBestParentBound;
  // Test mode: never prune or fathom, so every reachable astral is visited.
  bool disable_pruning = false;
  std::optional<int64_t> node_cap;
  // Leave every node deeper than this open.
  std::optional<int> interrupt_depth;
  int threads = 1;
  bool record_trace = false;

  FuMode FuAt(int depth) const;
};

// Throws ArgumentError for inconsistent settings.
void ValidateConfig(const BBConfig& cfg);

struct SubproblemResult {
  Subset v1;
  Subset v2;
  double theta1 = 0.0;  // relaxation value at v1
  double theta2 = 0.0;  // objective of the better of v1, v2
  Subset candidate;     // that better set

  // rho for this node and the bound rho * theta1 on the objective over F-hat.
  double rho = 1.0;
  double bound = 0.0;
  // No member of F-hat with objective equal to `bound` precedes this set in the
  // total order. Lets prune/fathom tests respect the lexicographic tie-break.
  Subset bound_floor;
};

// Relaxed subproblem at one node for unconstrained maximization of f - cut.
SubproblemResult SolveSubproblem(const Astral& node, const Decomposition& dec,
                                 const BBConfig& cfg, int depth);

enum class NodeAction { kPruned, kFathomed, kBranched, kClosed };

struct NodeTrace {
  Subset indep;
  int depth = 0;
  SubproblemResult result;
  NodeAction action = NodeAction::kClosed;
  bool incumbent_updated = false;
  double z_star_after = 0.0;
  Subset incumbent_after;
};

struct BBStats {
  int64_t nodes_visited = 0;
  int64_t nodes_pruned = 0;
  int64_t nodes_fathomed = 0;
  int64_t nodes_branched = 0;
  int max_depth = 0;
};

// Snapshot of the search when it stopped.
struct BBState {
  Subset incumbent;
  double z_star = 0.0;
  bool complete = false;
  int64_t open_nodes = 0;
  int min_open_depth = -1;      // -1 when nothing is open
  int max_processed_depth = -1;
  // Per depth, over processed nodes: max of bound - theta2, and max bound.
  std::vector<double> max_gap_at_depth;
  std::vector<double> max_bound_at_depth;
};

struct InterruptBound {
  bool valid = false;
  int frontier_depth = -1;
  double delta_max = 0.0;
  // Upper bound on the objective of the global maximizer.
  double bound = 0.0;
};

// (f - cut)(Z) + max gap over the deepest depth whose nodes are all closed.
// Invalid (bound = +inf) if the root was never solved.
InterruptBound BBInterruptBound(const BBState& state);

struct BBResult {
  Subset best;
  double value = 0.0;  // objective units
  BBStats stats;
  BBState state;
  InterruptBound gap;
  bool complete = false;
  std::vector<NodeTrace> trace;  // filled when cfg.record_trace
};

// Maps a node to its solved subproblem. Must be safe to call concurrently.
using SubproblemSolver =
    std::function<SubproblemResult(const Astral& node, int depth)>;

// The astral search loop shared by the unconstrained and constrained solvers.
BBResult RunAstralSearch(const Decomposition& dec, const BBConfig& cfg,
                         const SubproblemSolver& solve);

// Global maximizer of f - cut (equivalently of theta) under the total order.
BBResult BBMaximize(const Decomposition& dec, const BBConfig& cfg);

std::string ToString(NodeAction action);
std::string ToString(FuMode mode);
std::string ToString(Engine engine);

}  // namespace setmax

#endif  // SETMAX_BB_H_
