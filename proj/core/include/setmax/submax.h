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

#ifndef SETMAX_SUBMAX_H_
#define SETMAX_SUBMAX_H_

#include <cstdint>
#include <functional>
#include <span>

#include "setmax/ground.h"
#include "setmax/subset.h"

namespace setmax {

// {S : lo <= S <= hi}.
struct Interval {
  Subset lo;
  Subset hi;
};

// Maximizes sum_{v in S} weights[v] over S within domain: the maximizer keeps
// every element of non-negative weight, zero weights included.
Scored MaximizeModular(std::span<const double> weights, const Subset& domain);

struct PreservationVerdict {
  bool prune_upper = false;  // drop [lo + v, hi]
  bool prune_lower = false;  // drop [lo, hi - v]
};

// The two preservation tests for a submodular g on iv at a free element v:
//   prune_upper <=> g(lo) - g(lo + v) >= 0
//   prune_lower <=> g(hi) - g(hi - v) >= 0
PreservationVerdict PreservationCheck(const SetFunction& g, const Interval& iv,
                                      int v);

using Feasibility = std::function<bool(const Subset&)>;

struct IntervalMaxStats {
  int64_t intervals = 0;
  int64_t evaluations = 0;
};

// Exact maximizer of a submodular g over iv under the total order.
//
// Depth-first over sub-intervals. Each interval is first shrunk to a fixpoint
// of the preservation rules, its endpoints become incumbent candidates, and a
// marginal-gain bound prunes it against the incumbent; otherwise it is split on
// the free element with the largest |g(lo + v) - g(lo)|, the child containing
// that element first.
//
// When `feasible` is given (a downward-closed family), the maximum is taken
// over its members only; only the rule that removes elements stays sound, so
// the other is switched off. lo must then be feasible for anything to be found;
// the empty set is always returned as a fallback candidate.
Scored IntervalMax(const SetFunction& g, const Interval& iv,
                   const Feasibility& feasible = nullptr,
                   IntervalMaxStats* stats = nullptr);

struct LSResult {
  Subset best;
  double value = 0.0;
  int64_t subiterations = 0;
  Subset seed;      // best singleton the search started from
  Subset terminal;  // locally optimal set at termination
};

// Deterministic local search for a non-negative submodular g over 2^domain:
// start from the best singleton, then repeatedly add (or, failing that,
// remove) the first element, by ascending index, that improves g by more than
// a factor 1 + epsilon / r^2, r = |domain|. Returns the better of the terminal
// set and its complement in domain. Throws ContractError if a negative value
// is seen.
LSResult LsMax(const SetFunction& g, const Subset& domain, double epsilon);

// Documented constant C of the subiteration bound below. Each move multiplies
// g by more than 1 + epsilon / r^2 and g never exceeds r times the seed value,
// so there are at most ln r / ln(1 + epsilon / r^2) + 1 moves; for
// epsilon <= r^2 that is below 2 (1/epsilon) r^2 log2 r + 2.
inline constexpr double kLsSubiterationConstant = 2.0;

// C (1/epsilon) r^2 log2(r) + C.
double LsSubiterationBound(int r, double epsilon);

// Guaranteed approximation ratio 1/3 - epsilon / r (may be <= 0 for small r).
double LsGuarantee(int r, double epsilon);

namespace internal {

struct LocalSearchTrace {
  Subset seed;
  Subset terminal;
  int64_t subiterations = 0;
};

// Steps shared by LsMax and the constrained variant: seed with the best
// singleton of domain, then add/remove moves. When the current value is not
// positive the multiplicative test is ill-posed and any strict improvement is
// accepted instead.
LocalSearchTrace LocalSearch(const std::function<double(const Subset&)>& g,
                             const Subset& domain, double epsilon,
                             bool require_nonnegative);

// True if `candidate` improves on `current` under the factor test.
bool Improves(double candidate, double current, double factor);

}  // namespace internal

}  // namespace setmax

#endif  // SETMAX_SUBMAX_H_
