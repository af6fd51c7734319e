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

#include "setmax/bb.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <limits>
#include <mutex>
#include <queue>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "setmax/errors.h"
#include "setmax/submax.h"

namespace setmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// True when nothing bounded by (bound, floor) can beat the incumbent (z, Z):
// every candidate has objective <= bound, and at objective == bound it does
// not precede floor.
bool CannotBeat(double bound, const Subset& floor, double z,
                const Subset& incumbent) {
  return bound < z || (bound == z && incumbent.bits() <= floor.bits());
}

// Lowest-ordered set that could reach `bound` when nothing better is known:
// the empty set has objective 0, so a positive bound needs a non-empty set,
// whose bits are at least those of the lowest singleton of the domain.
Subset FallbackFloor(double bound, const Subset& domain) {
  const int n = domain.width();
  if (bound <= 0 || domain.empty()) return Subset::Empty(n);
  return Subset::Singleton(n, domain.First());
}

void SetCandidate(const Decomposition& dec, SubproblemResult& r) {
  const double o1 = dec.Objective(r.v1);
  const double o2 = r.v2 == r.v1 ? o1 : dec.Objective(r.v2);
  if (Beats(o2, r.v2, o1, r.v1)) {
    r.candidate = r.v2;
    r.theta2 = o2;
  } else {
    r.candidate = r.v1;
    r.theta2 = o1;
  }
}

SubproblemResult SolveCompleteNode(const Decomposition& dec) {
  const int n = dec.size();
  Scored best{Subset::Empty(n), 0.0};
  for (int v = 0; v < n; ++v) {
    const Subset s = Subset::Singleton(n, v);
    const double value = dec.Objective(s);
    if (Beats(value, s, best.value, best.set)) best = {s, value};
  }
  SubproblemResult r;
  r.v1 = r.v2 = r.candidate = best.set;
  r.theta1 = r.theta2 = best.value;
  r.rho = 1.0;
  r.bound = best.value;
  r.bound_floor = best.set;
  return r;
}

struct OpenNode {
  Astral node;
  double priority;
  int64_t seq;
};

struct OpenNodeOrder {
  bool depth_first = false;
  bool operator()(const OpenNode& a, const OpenNode& b) const {
    if (!depth_first && a.priority != b.priority) {
      return a.priority < b.priority;
    }
    return a.seq < b.seq;
  }
};

}  // namespace

FuMode BBConfig::FuAt(int depth) const {
  if (fu_schedule.empty()) return fu_mode;
  const auto i = std::min<std::size_t>(depth, fu_schedule.size() - 1);
  return fu_schedule[i];
}

void ValidateConfig(const BBConfig& cfg) {
  bool any_tight = cfg.fu_mode == FuMode::kTight;
  if (!cfg.fu_schedule.empty()) {
    any_tight = std::find(cfg.fu_schedule.begin(), cfg.fu_schedule.end(),
                          FuMode::kTight) != cfg.fu_schedule.end();
  }
  if (cfg.engine == Engine::kClosedForm && any_tight) {
    throw ArgumentError("the closed-form engine needs modular f_u");
  }
  if (!(cfg.approx_factor >= 1.0)) {
    throw ArgumentError("approximation factor must be >= 1");
  }
  if (cfg.approx_factor > 1.0 && cfg.engine != Engine::kLocalSearch) {
    throw ArgumentError("approximation factor > 1 needs the ls engine");
  }
  if (cfg.engine == Engine::kLocalSearch && cfg.approx_factor == 1.0) {
    throw ArgumentError("the ls engine needs an approximation factor > 1");
  }
  if (!(cfg.epsilon > 0)) throw ArgumentError("epsilon must be positive");
  if (cfg.threads < 1) throw ArgumentError("threads must be >= 1");
  if (cfg.node_cap && *cfg.node_cap < 0) {
    throw ArgumentError("node cap must be non-negative");
  }
  if (cfg.interrupt_depth && *cfg.interrupt_depth < 0) {
    throw ArgumentError("interrupt depth must be non-negative");
  }
}

SubproblemResult SolveSubproblem(const Astral& node, const Decomposition& dec,
                                 const BBConfig& cfg, int depth) {
  if (node.IsComplete()) return SolveCompleteNode(dec);

  const int n = dec.size();
  const Graph& g = dec.graph();
  const Subset indep = node.indep();
  SubproblemResult r;
  r.v2 = indep;

  if (cfg.FuAt(depth) == FuMode::kModular) {
    // f(v) - d-hat(v) = objective({v}) + (edges from v into I).
    std::vector<double> weights(n, 0.0);
    Subset positive = Subset::Empty(n);
    for (int v : indep.Elements()) {
      weights[v] = dec.Objective(Subset::Singleton(n, v)) +
                   std::popcount(g.NeighborBits(v) & indep.bits());
      if (weights[v] > 0) positive = positive.with(v);
    }
    const Scored best = MaximizeModular(weights, indep);
    r.v1 = best.set;
    r.theta1 = best.value;
    r.rho = 1.0;
    r.bound = r.theta1;
    r.bound_floor = positive;
  } else {
    // On subsets S of I, f(S) - d-hat(S) = objective(S) + bicut(S, I \ S).
    const Decomposition* d = &dec;
    const SetFunction relaxed(
        n,
        [d, indep](const Subset& s) {
          return d->Objective(s) + Bicut(d->graph(), s, indep - s);
        },
        kInf);
    const int r_size = indep.size();
    const bool use_ls = cfg.engine == Engine::kLocalSearch &&
                        cfg.approx_factor * LsGuarantee(r_size, cfg.epsilon) >=
                            1.0;
    if (use_ls) {
      const LSResult ls = LsMax(relaxed, indep, cfg.epsilon);
      r.v1 = ls.best;
      r.theta1 = ls.value;
      r.rho = cfg.approx_factor;
      r.bound = r.rho * r.theta1;
      r.bound_floor = FallbackFloor(r.bound, indep);
    } else {
      const Scored best = IntervalMax(relaxed, {Subset::Empty(n), indep});
      r.v1 = best.set;
      r.theta1 = best.value;
      r.rho = 1.0;
      r.bound = r.theta1;
      r.bound_floor = best.set;
    }
  }
  SetCandidate(dec, r);
  return r;
}

InterruptBound BBInterruptBound(const BBState& state) {
  InterruptBound out;
  out.bound = kInf;
  if (state.max_processed_depth < 0) return out;
  const int frontier =
      state.complete ? state.max_processed_depth : state.min_open_depth - 1;
  if (frontier < 0) return out;
  out.valid = true;
  out.frontier_depth = frontier;
  double gap = 0.0;
  double top = -kInf;
  if (frontier < static_cast<int>(state.max_gap_at_depth.size())) {
    gap = std::max(0.0, state.max_gap_at_depth[frontier]);
    top = state.max_bound_at_depth[frontier];
  }
  out.delta_max = gap;
  // z + (bound - theta2) >= bound whenever theta2 <= z; taking the max keeps
  // that true after rounding.
  out.bound = std::max({state.z_star + gap, top, state.z_star});
  return out;
}

BBResult RunAstralSearch(const Decomposition& dec, const BBConfig& cfg,
                         const SubproblemSolver& solve) {
  ValidateConfig(cfg);
  const int n = dec.size();
  BBResult result;

  BBState& state = result.state;
  state.incumbent = Subset::Empty(n);
  state.z_star = dec.Objective(state.incumbent);

  if (n < 2) {
    const Scored best =
        BruteForceArgmaxWithin(dec.ObjectiveFunction(), Subset::Full(n));
    state.incumbent = best.set;
    state.z_star = best.value;
    state.complete = true;
    result.best = best.set;
    result.value = best.value;
    result.complete = true;
    result.gap = {true, 0, 0.0, best.value};
    return result;
  }

  const bool depth_first = cfg.node_policy == NodePolicy::kDepthFirst;
  std::priority_queue<OpenNode, std::vector<OpenNode>, OpenNodeOrder> open(
      OpenNodeOrder{depth_first});
  std::vector<Astral> deferred;
  std::unordered_set<uint64_t> visited;
  int64_t seq = 0;
  int64_t started = 0;
  int active = 0;
  bool stop = false;
  std::exception_ptr failure;
  std::mutex mu;
  std::condition_variable cv;

  const Astral root = Astral::Root(n);
  visited.insert(root.key());
  open.push({root, kInf, seq++});
  state.max_gap_at_depth.assign(n, -kInf);
  state.max_bound_at_depth.assign(n, -kInf);

  // Applies the prune / update / fathom / branch rules. Caller holds mu.
  auto decide = [&](const Astral& node, int depth, const SubproblemResult& r) {
    BBStats& stats = result.stats;
    ++stats.nodes_visited;
    stats.max_depth = std::max(stats.max_depth, depth);
    state.max_processed_depth = std::max(state.max_processed_depth, depth);
    state.max_gap_at_depth[depth] =
        std::max(state.max_gap_at_depth[depth], r.bound - r.theta2);
    state.max_bound_at_depth[depth] =
        std::max(state.max_bound_at_depth[depth], r.bound);

    NodeAction action;
    bool updated = false;
    if (!cfg.disable_pruning &&
        CannotBeat(r.bound, r.bound_floor, state.z_star, state.incumbent)) {
      action = NodeAction::kPruned;
      ++stats.nodes_pruned;
    } else {
      if (Beats(r.theta2, r.candidate, state.z_star, state.incumbent)) {
        state.incumbent = r.candidate;
        state.z_star = r.theta2;
        updated = true;
      }
      if (updated && !cfg.disable_pruning &&
          CannotBeat(r.bound, r.bound_floor, state.z_star, state.incumbent)) {
        action = NodeAction::kFathomed;
        ++stats.nodes_fathomed;
      } else if (node.IsComplete()) {
        action = NodeAction::kClosed;
      } else {
        action = NodeAction::kBranched;
        ++stats.nodes_branched;
        for (const Astral& child : node.Children()) {
          if (visited.insert(child.key()).second) {
            open.push({child, r.theta1, seq++});
          }
        }
      }
    }
    if (cfg.record_trace) {
      result.trace.push_back({node.indep(), depth, r, action, updated,
                              state.z_star, state.incumbent});
    }
  };

  auto worker = [&]() {
    std::unique_lock<std::mutex> lock(mu);
    while (true) {
      cv.wait(lock, [&] { return stop || !open.empty() || active == 0; });
      if (stop || open.empty()) break;
      if (cfg.node_cap && started >= *cfg.node_cap) {
        stop = true;
        break;
      }
      OpenNode item = open.top();
      open.pop();
      const int depth = item.node.depth();
      if (cfg.interrupt_depth && depth > *cfg.interrupt_depth) {
        deferred.push_back(item.node);
        continue;
      }
      ++started;
      ++active;
      lock.unlock();
      SubproblemResult r;
      bool ok = true;
      try {
        r = solve(item.node, depth);
      } catch (...) {
        ok = false;
        lock.lock();
        if (!failure) failure = std::current_exception();
        stop = true;
        --active;
        cv.notify_all();
        lock.unlock();
      }
      if (!ok) {
        lock.lock();
        break;
      }
      lock.lock();
      decide(item.node, depth, r);
      --active;
      cv.notify_all();
    }
    cv.notify_all();
  };

  if (cfg.threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(cfg.threads);
    for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  state.open_nodes = static_cast<int64_t>(open.size() + deferred.size());
  int min_depth = std::numeric_limits<int>::max();
  while (!open.empty()) {
    min_depth = std::min(min_depth, open.top().node.depth());
    open.pop();
  }
  for (const Astral& a : deferred) min_depth = std::min(min_depth, a.depth());
  state.min_open_depth = state.open_nodes > 0 ? min_depth : -1;
  state.complete = state.open_nodes == 0;

  result.best = state.incumbent;
  result.value = state.z_star;
  result.complete = state.complete;
  result.gap = BBInterruptBound(state);
  return result;
}

BBResult BBMaximize(const Decomposition& dec, const BBConfig& cfg) {
  ValidateConfig(cfg);
  if (cfg.engine == Engine::kLocalSearch) {
    for (int v = 0; v < dec.size(); ++v) {
      if (dec.Objective(Subset::Singleton(dec.size(), v)) < 0) {
        throw ContractError(
            "the ls engine needs a non-negative objective; singleton " +
            std::to_string(v + 1) + " is negative");
      }
    }
  }
  return RunAstralSearch(dec, cfg, [&](const Astral& node, int depth) {
    return SolveSubproblem(node, dec, cfg, depth);
  });
}

std::string ToString(NodeAction action) {
  switch (action) {
    case NodeAction::kPruned:
      return "pruned";
    case NodeAction::kFathomed:
      return "fathomed";
    case NodeAction::kBranched:
      return "branched";
    case NodeAction::kClosed:
      return "closed";
  }
  return "unknown";
}

std::string ToString(FuMode mode) {
  return mode == FuMode::kModular ? "modular" : "tight";
}

std::string ToString(Engine engine) {
  switch (engine) {
    case Engine::kClosedForm:
      return "closed-form";
    case Engine::kInterval:
      return "interval";
    case Engine::kLocalSearch:
      return "ls";
  }
  return "unknown";
}

}  // namespace setmax
