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

#ifndef SETMAX_CONSTRAINED_H_
#define SETMAX_CONSTRAINED_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setmax/bb.h"
#include "setmax/decompose.h"
#include "setmax/graph.h"
#include "setmax/ground.h"
#include "setmax/subset.h"

namespace setmax {

// A downward-closed family S of subsets, given by a membership function p with
// S = {s : p(s) <= 0}. The empty set is always a member.
//
// Evaluation cost Q(n): O(n) for every built-in kind (a popcount per vertex for
// graph independence, one popcount for cardinality, one subset test per listed
// set for explicit systems).
class SubsetSystem {
 public:
  enum class Kind {
    kAll,                // 2^V
    kCardinality,        // |s| <= k
    kGraphIndependence,  // no edge of the graph inside s
    kExplicitMaximal,    // subsets of listed maximal sets
    kCustom,
  };

  static SubsetSystem All(int n);
  static SubsetSystem Cardinality(int n, int k);
  static SubsetSystem GraphIndependence(Graph g);
  // Throws ArgumentError if a listed set is contained in another listed set.
  static SubsetSystem ExplicitMaximal(int n, std::vector<Subset> maximal_sets);
  static SubsetSystem Custom(int n, std::function<double(const Subset&)> p,
                             std::string description);

  int size() const { return n_; }
  Kind kind() const { return kind_; }
  int cardinality() const { return k_; }
  const Graph& graph() const { return *graph_; }
  const std::vector<Subset>& maximal_sets() const { return maximal_; }
  std::string Describe() const;

  double Membership(const Subset& s) const { return p_(s); }
  bool Contains(const Subset& s) const { return p_(s) <= 0; }

 private:
  SubsetSystem(int n, Kind kind, std::function<double(const Subset&)> p)
      : n_(n), kind_(kind), p_(std::move(p)) {}

  int n_;
  Kind kind_;
  std::function<double(const Subset&)> p_;
  int k_ = 0;
  std::shared_ptr<const Graph> graph_;
  std::vector<Subset> maximal_;
  std::string description_;
};

// Exhaustive downward-closure check. Refuses n > 12.
bool IsDownwardClosed(const std::function<bool(const Subset&)>& member, int n);
bool IsDownwardClosed(const SubsetSystem& sys);

// 0 on members, e^{|s|} outside: a non-negative normalized supermodular
// membership function of sys.
double QOf(const SubsetSystem& sys, const Subset& s);
SetFunction QFunction(const SubsetSystem& sys);

// g - M q. Agrees with g on the system and drops below min g outside it when
// M exceeds max |g|.
class PenalizedFunction {
 public:
  PenalizedFunction(SetFunction base, double m, SubsetSystem system);

  const SetFunction& base() const { return base_; }
  double m() const { return m_; }
  const SubsetSystem& system() const { return system_; }

  double operator()(const Subset& s) const;
  SetFunction AsSetFunction() const;

 private:
  SetFunction base_;
  double m_;
  SubsetSystem system_;
};

// Throws ArgumentError unless m > theta.bound().
PenalizedFunction Reformulate(const SetFunction& theta,
                              const SubsetSystem& sys, double m);

// Scans `domain` in ascending order, adding each element that keeps the set
// feasible. Throws ArgumentError if v1 itself is infeasible.
Subset GreedyExtend(const Subset& v1, const Subset& domain,
                    const std::function<bool(const Subset&)>& feasible);

// One outer iteration of the constrained local search.
struct LsaIteration {
  Subset domain;         // X^(i)
  int r = 0;             // |X^(i)|
  Subset local_optimum;  // X-hat^(i+1)
  Subset complement;     // X^(i) \ X-hat^(i+1)
  bool complement_feasible = false;
  int64_t subiterations = 0;
};

struct LsaResult {
  Subset best;         // X-hat_A
  double value = 0.0;  // (g - Mq)(best)
  int k = 0;           // index of the last outer iteration
  std::vector<LsaIteration> iterations;
  // The closing unconstrained local search on the last (feasible) complement.
  Subset final_domain;
  Subset final_local_optimum;  // X-hat^(k+2)
  Subset final_complement;     // X-hat^(k+2)C
  int64_t final_subiterations = 0;
};

// Local search for g restricted to sys over 2^domain, using the penalized
// g - Mq. Requires g normalized, g({x}) > 0 and {x} in sys for every x in
// domain; throws ContractError otherwise.
LsaResult LsaMax(const SetFunction& g, const SubsetSystem& sys,
                 const Subset& domain, double epsilon, double m);

// (k + 4) + epsilon H(k + 2) + 8 epsilon, H the harmonic numbers.
double LsaBoundFactor(int k, double epsilon);

// |domain| times the best singleton value of g on domain. Throws ContractError
// when no singleton is positive.
double ChooseM(const SetFunction& g, const Subset& domain);

// Relaxed subproblem at one node for maximization over sys.
SubproblemResult SolveConstrainedSubproblem(const Astral& node,
                                            const Decomposition& dec,
                                            const SubsetSystem& sys,
                                            const BBConfig& cfg, int depth);

// Maximizer of f - cut over sys under the total order. Exact engines use brute
// force over F-hat when |I| <= 12 and a constrained interval search above that;
// the ls engine uses LsaMax with the per-node factor LsaBoundFactor(k, eps).
// Every singleton must belong to sys.
BBResult BBCMaximize(const Decomposition& dec, const SubsetSystem& sys,
                     const BBConfig& cfg);

}  // namespace setmax

#endif  // SETMAX_CONSTRAINED_H_
