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

#include "setmax/constrained.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "setmax/errors.h"
#include "setmax/submax.h"

namespace setmax {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Subproblems at or below this size are solved by enumerating F-hat.
constexpr int kEnumerateFeasibleCap = 12;

void CheckSystemSize(const SubsetSystem& sys, int n) {
  if (sys.size() != n) {
    throw ArgumentError("subset system size " + std::to_string(sys.size()) +
                        " does not match ground set size " + std::to_string(n));
  }
}

Subset FallbackFloor(double bound, const Subset& domain) {
  const int n = domain.width();
  if (bound <= 0 || domain.empty()) return Subset::Empty(n);
  return Subset::Singleton(n, domain.First());
}

// Order-minimal maximizer of g over the members of sys inside domain.
Scored ExactOverFeasible(const SetFunction& g, const SubsetSystem& sys,
                         const Subset& domain) {
  if (domain.size() <= kEnumerateFeasibleCap) {
    const int n = domain.width();
    Scored best{Subset::Empty(n), g.EvaluateUnchecked(Subset::Empty(n))};
    ForEachSubsetOf(domain, [&](const Subset& s) {
      if (!sys.Contains(s)) return;
      const double v = g.EvaluateUnchecked(s);
      if (Beats(v, s, best.value, best.set)) best = {s, v};
    });
    return best;
  }
  return IntervalMax(g, {Subset::Empty(domain.width()), domain},
                     [&sys](const Subset& s) { return sys.Contains(s); });
}

}  // namespace

SubsetSystem SubsetSystem::All(int n) {
  SubsetSystem sys(n, Kind::kAll, [](const Subset&) { return 0.0; });
  return sys;
}

SubsetSystem SubsetSystem::Cardinality(int n, int k) {
  if (k < 0) throw ArgumentError("cardinality bound must be non-negative");
  SubsetSystem sys(n, Kind::kCardinality, [k](const Subset& s) {
    return static_cast<double>(s.size() - k);
  });
  sys.k_ = k;
  return sys;
}

SubsetSystem SubsetSystem::GraphIndependence(Graph g) {
  auto shared = std::make_shared<const Graph>(std::move(g));
  SubsetSystem sys(shared->size(), Kind::kGraphIndependence,
                   [shared](const Subset& s) {
                     return static_cast<double>(InducedEdges(*shared, s));
                   });
  sys.graph_ = shared;
  return sys;
}

SubsetSystem SubsetSystem::ExplicitMaximal(int n,
                                           std::vector<Subset> maximal_sets) {
  for (std::size_t i = 0; i < maximal_sets.size(); ++i) {
    if (maximal_sets[i].width() != n) {
      throw ArgumentError("maximal set width does not match system size");
    }
    for (std::size_t j = 0; j < maximal_sets.size(); ++j) {
      if (i != j && maximal_sets[i].IsSubsetOf(maximal_sets[j])) {
        throw ArgumentError("listed set " + maximal_sets[i].ToString() +
                            " is contained in " + maximal_sets[j].ToString() +
                            " and is not maximal");
      }
    }
  }
  auto shared =
      std::make_shared<const std::vector<Subset>>(maximal_sets);
  SubsetSystem sys(n, Kind::kExplicitMaximal, [shared](const Subset& s) {
    if (s.empty()) return 0.0;
    for (const Subset& m : *shared) {
      if (s.IsSubsetOf(m)) return 0.0;
    }
    return 1.0;
  });
  sys.maximal_ = std::move(maximal_sets);
  return sys;
}

SubsetSystem SubsetSystem::Custom(int n,
                                  std::function<double(const Subset&)> p,
                                  std::string description) {
  SubsetSystem sys(n, Kind::kCustom, std::move(p));
  sys.description_ = std::move(description);
  return sys;
}

std::string SubsetSystem::Describe() const {
  switch (kind_) {
    case Kind::kAll:
      return "none";
    case Kind::kCardinality:
      return "cardinality " + std::to_string(k_);
    case Kind::kGraphIndependence:
      return "graph-independence";
    case Kind::kExplicitMaximal:
      return "explicit";
    case Kind::kCustom:
      return description_.empty() ? "custom" : description_;
  }
  return "custom";
}

bool IsDownwardClosed(const std::function<bool(const Subset&)>& member,
                      int n) {
  if (n > 12) throw CapacityError("downward-closure check needs n <= 12");
  if (!member(Subset::Empty(n))) return false;
  bool closed = true;
  ForEachSubsetOf(Subset::Full(n), [&](const Subset& s) {
    if (!closed || !member(s)) return;
    for (int v : s.Elements()) {
      if (!member(s.without(v))) {
        closed = false;
        return;
      }
    }
  });
  return closed;
}

bool IsDownwardClosed(const SubsetSystem& sys) {
  return IsDownwardClosed(
      [&sys](const Subset& s) { return sys.Contains(s); }, sys.size());
}

double QOf(const SubsetSystem& sys, const Subset& s) {
  return sys.Contains(s) ? 0.0 : std::exp(static_cast<double>(s.size()));
}

SetFunction QFunction(const SubsetSystem& sys) {
  return SetFunction(
      sys.size(), [sys](const Subset& s) { return QOf(sys, s); },
      std::nextafter(std::exp(static_cast<double>(sys.size())), kInf), true);
}

PenalizedFunction::PenalizedFunction(SetFunction base, double m,
                                     SubsetSystem system)
    : base_(std::move(base)), m_(m), system_(std::move(system)) {
  CheckSystemSize(system_, base_.size());
}

double PenalizedFunction::operator()(const Subset& s) const {
  return base_.Evaluate(s) - m_ * QOf(system_, s);
}

SetFunction PenalizedFunction::AsSetFunction() const {
  const PenalizedFunction self = *this;
  return SetFunction(
      base_.size(), [self](const Subset& s) { return self(s); },
      std::nextafter(
          base_.bound() +
              m_ * std::exp(static_cast<double>(base_.size())),
          kInf),
      base_.normalized());
}

PenalizedFunction Reformulate(const SetFunction& theta,
                              const SubsetSystem& sys, double m) {
  if (!(m > theta.bound())) {
    throw ArgumentError("penalty M=" + std::to_string(m) +
                        " must exceed the bound " +
                        std::to_string(theta.bound()) + " on |theta|");
  }
  return PenalizedFunction(theta, m, sys);
}

Subset GreedyExtend(const Subset& v1, const Subset& domain,
                    const std::function<bool(const Subset&)>& feasible) {
  if (!feasible(v1)) {
    throw ArgumentError("greedy extension needs a feasible start, got " +
                        v1.ToString());
  }
  Subset out = v1;
  for (int v : domain.Elements()) {
    if (out.contains(v)) continue;
    const Subset next = out.with(v);
    if (feasible(next)) out = next;
  }
  return out;
}

LsaResult LsaMax(const SetFunction& g, const SubsetSystem& sys,
                 const Subset& domain, double epsilon, double m) {
  if (!(epsilon > 0)) throw ArgumentError("epsilon must be positive");
  if (domain.width() != g.size()) {
    throw ArgumentError("domain width does not match set function");
  }
  CheckSystemSize(sys, g.size());
  const int n = g.size();
  if (g.EvaluateUnchecked(Subset::Empty(n)) != 0.0) {
    throw ContractError("constrained local search needs g(empty) = 0");
  }
  for (int x : domain.Elements()) {
    const Subset single = Subset::Singleton(n, x);
    if (!sys.Contains(single)) {
      throw ContractError("singleton " + single.ToString() +
                          " is not in the subset system");
    }
    if (!(g.EvaluateUnchecked(single) > 0)) {
      throw ContractError("constrained local search needs g > 0 on "
                          "singletons; " +
                          single.ToString() + " is not");
    }
  }

  auto h = [&](const Subset& s) {
    return g.EvaluateUnchecked(s) - m * QOf(sys, s);
  };
  LsaResult out;
  Scored best{Subset::Empty(n), 0.0};
  auto offer = [&](const Subset& s) {
    const double v = h(s);
    if (Beats(v, s, best.value, best.set)) best = {s, v};
  };

  Subset current = domain;
  int i = 0;
  while (true) {
    const internal::LocalSearchTrace trace =
        internal::LocalSearch(h, current, epsilon, false);
    LsaIteration it;
    it.domain = current;
    it.r = current.size();
    it.local_optimum = trace.terminal;
    it.complement = current - trace.terminal;
    it.complement_feasible = sys.Contains(it.complement);
    it.subiterations = trace.subiterations;
    out.iterations.push_back(it);
    offer(it.local_optimum);
    offer(it.complement);
    if (!it.complement_feasible) {
      current = it.complement;
      ++i;
      continue;
    }
    // Every subset of the feasible complement is feasible, so g - Mq = g >= 0
    // there and the plain local search applies.
    const internal::LocalSearchTrace last =
        internal::LocalSearch(h, it.complement, epsilon, true);
    out.final_domain = it.complement;
    out.final_local_optimum = last.terminal;
    out.final_complement = it.complement - last.terminal;
    out.final_subiterations = last.subiterations;
    offer(out.final_local_optimum);
    offer(out.final_complement);
    break;
  }
  out.k = i;
  out.best = best.set;
  out.value = best.value;
  return out;
}

double LsaBoundFactor(int k, double epsilon) {
  if (k < 0) throw ArgumentError("k must be non-negative");
  if (!(epsilon > 0)) throw ArgumentError("epsilon must be positive");
  double harmonic = 0.0;
  for (int i = 1; i <= k + 2; ++i) harmonic += 1.0 / i;
  return (k + 4) + epsilon * harmonic + 8.0 * epsilon;
}

double ChooseM(const SetFunction& g, const Subset& domain) {
  double top = 0.0;
  for (int v : domain.Elements()) {
    top = std::max(top, g.Evaluate(Subset::Singleton(g.size(), v)));
  }
  if (!(top > 0)) {
    throw ContractError("ChooseM needs a positive singleton value");
  }
  return domain.size() * top;
}

SubproblemResult SolveConstrainedSubproblem(const Astral& node,
                                            const Decomposition& dec,
                                            const SubsetSystem& sys,
                                            const BBConfig& cfg, int depth) {
  const int n = dec.size();
  SubproblemResult r;
  auto set_candidate = [&]() {
    const double o1 = dec.Objective(r.v1);
    const double o2 = r.v2 == r.v1 ? o1 : dec.Objective(r.v2);
    if (Beats(o2, r.v2, o1, r.v1)) {
      r.candidate = r.v2;
      r.theta2 = o2;
    } else {
      r.candidate = r.v1;
      r.theta2 = o1;
    }
  };

  if (node.IsComplete()) {
    // F-hat = S n {empty, singletons}; every singleton is in S.
    Scored best{Subset::Empty(n), 0.0};
    for (int v = 0; v < n; ++v) {
      const Subset s = Subset::Singleton(n, v);
      const double value = dec.Objective(s);
      if (Beats(value, s, best.value, best.set)) best = {s, value};
    }
    r.v1 = best.set;
    r.theta1 = best.value;
    r.rho = 1.0;
    r.bound = best.value;
    r.bound_floor = best.set;
    r.v2 = GreedyExtend(r.v1, Subset::Full(n), [&sys](const Subset& s) {
      return s.size() <= 1 && sys.Contains(s);
    });
    set_candidate();
    return r;
  }

  const Graph& g = dec.graph();
  const Subset indep = node.indep();
  const Decomposition* d = &dec;
  SetFunction relaxed = [&]() {
    if (cfg.FuAt(depth) == FuMode::kModular) {
      std::vector<double> weights(n, 0.0);
      for (int v : indep.Elements()) {
        weights[v] = dec.Objective(Subset::Singleton(n, v)) +
                     std::popcount(g.NeighborBits(v) & indep.bits());
      }
      return SetFunction::Modular(std::move(weights));
    }
    return SetFunction(
        n,
        [d, indep](const Subset& s) {
          return d->Objective(s) + Bicut(d->graph(), s, indep - s);
        },
        kInf);
  }();

  bool solved = false;
  if (cfg.engine == Engine::kLocalSearch) {
    bool positive = true;
    for (int v : indep.Elements()) {
      if (!(relaxed.EvaluateUnchecked(Subset::Singleton(n, v)) > 0)) {
        positive = false;
        break;
      }
    }
    if (positive) {
      try {
        const LsaResult lsa = LsaMax(relaxed, sys, indep, cfg.epsilon,
                                     ChooseM(relaxed, indep));
        if (sys.Contains(lsa.best)) {
          r.v1 = lsa.best;
          r.theta1 = relaxed.EvaluateUnchecked(lsa.best);
          r.rho = LsaBoundFactor(lsa.k, cfg.epsilon);
          r.bound = r.rho * r.theta1;
          r.bound_floor = FallbackFloor(r.bound, indep);
          solved = true;
        }
      } catch (const ContractError&) {
        // Negative relaxation value inside F-hat; solve exactly instead.
      }
    }
  }
  if (!solved) {
    const Scored best = ExactOverFeasible(relaxed, sys, indep);
    r.v1 = best.set;
    r.theta1 = best.value;
    r.rho = 1.0;
    r.bound = best.value;
    r.bound_floor = best.set;
  }
  r.v2 = GreedyExtend(r.v1, indep,
                      [&sys](const Subset& s) { return sys.Contains(s); });
  set_candidate();
  return r;
}

BBResult BBCMaximize(const Decomposition& dec, const SubsetSystem& sys,
                     const BBConfig& cfg) {
  ValidateConfig(cfg);
  const int n = dec.size();
  CheckSystemSize(sys, n);
  if (!sys.Contains(Subset::Empty(n))) {
    throw ArgumentError("subset system must contain the empty set");
  }
  for (int v = 0; v < n; ++v) {
    if (!sys.Contains(Subset::Singleton(n, v))) {
      throw ArgumentError("singleton {" + std::to_string(v + 1) +
                          "} is not in the subset system; restrict the "
                          "ground set first");
    }
  }
  return RunAstralSearch(dec, cfg, [&](const Astral& node, int depth) {
    return SolveConstrainedSubproblem(node, dec, sys, cfg, depth);
  });
}

}  // namespace setmax
