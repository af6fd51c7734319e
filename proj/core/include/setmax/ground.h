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

#ifndef SETMAX_GROUND_H_
#define SETMAX_GROUND_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setmax/subset.h"

namespace setmax {

// Absolute tolerance for the sub/supermodularity checks.
inline constexpr double kDefaultTolerance = 1e-9;

// Size caps for the exhaustive oracles. Above these the routines throw
// CapacityError instead of running for 2^n (or 4^n) evaluations.
inline constexpr int kBruteForceCap = 24;
inline constexpr int kPairwiseCap = 14;

class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label of element i, defaulting to its 1-based index.
  std::string Label(int i) const;

  Subset Empty() const { return Subset::Empty(n_); }
  Subset Full() const { return Subset::Full(n_); }

 private:
  int n_;
  std::vector<std::string> labels_;
};

// A value-giving oracle over the subsets of a ground set of `size()` elements.
//
// The oracle is shared and must be pure: it may be invoked concurrently from
// several threads. `bound()` is a strict bound on |value| and `normalized()`
// promises value(empty) == 0.
class SetFunction {
 public:
  using Oracle = std::function<double(const Subset&)>;

  SetFunction(int n, Oracle oracle, double bound, bool normalized = false);

  int size() const { return n_; }
  double bound() const { return bound_; }
  bool normalized() const { return normalized_; }

  // Throws ArgumentError on a width mismatch.
  double Evaluate(const Subset& s) const;
  double operator()(const Subset& s) const { return Evaluate(s); }

  // Skips the width check; for inner loops that construct their own subsets.
  double EvaluateUnchecked(const Subset& s) const { return (*oracle_)(s); }

  // Table of values indexed by subset bits. Capped at kBruteForceCap.
  std::vector<double> Tabulate() const;

  // Dense table function; values[bits] is the value of that subset.
  static SetFunction Table(int n, std::vector<double> values);
  // Weight-sum function.
  static SetFunction Modular(std::vector<double> weights);
  static SetFunction Constant(int n, double value);

 private:
  int n_;
  std::shared_ptr<const Oracle> oracle_;
  double bound_;
  bool normalized_;
};

// A subset together with its value. `Beats` is the total order used for every
// "best so far" comparison: higher value first, then the smaller subset.
struct Scored {
  Subset set;
  double value = 0.0;
};

inline bool Beats(double value_a, const Subset& a, double value_b,
                  const Subset& b) {
  if (value_a != value_b) return value_a > value_b;
  return a.bits() < b.bits();
}
inline bool Beats(const Scored& a, const Scored& b) {
  return Beats(a.value, a.set, b.value, b.set);
}

double Evaluate(const SetFunction& fn, const Subset& s);

// Maximizer of fn over 2^V under the total order. Throws CapacityError when
// n > cap (cap itself may not exceed kBruteForceCap).
Scored BruteForceArgmax(const SetFunction& fn, const GroundSet& g,
                        int cap = kBruteForceCap);

// Maximizer over the members of a family given by `feasible`. The empty set is
// assumed feasible and seeds the search.
Scored BruteForceArgmaxWhere(const SetFunction& fn,
                             const std::function<bool(const Subset&)>& feasible,
                             int cap = kBruteForceCap);

// Maximizer over the subsets of `domain`.
Scored BruteForceArgmaxWithin(const SetFunction& fn, const Subset& domain,
                              int cap = kBruteForceCap);

// Pairwise checks over all (A, B). All refuse above kPairwiseCap elements.
bool IsSubmodular(const SetFunction& fn, const GroundSet& g,
                  double tolerance = kDefaultTolerance);
bool IsSupermodular(const SetFunction& fn, const GroundSet& g,
                    double tolerance = kDefaultTolerance);
bool IsModular(const SetFunction& fn, const GroundSet& g,
               double tolerance = kDefaultTolerance);

// Pair (A, B) maximizing f(A u B) + f(A n B) - f(A) - f(B), with that excess.
// The fn is submodular within tolerance iff excess <= tolerance.
struct PairExcess {
  Subset a;
  Subset b;
  double excess = 0.0;
};
PairExcess MaxSubmodularViolation(const SetFunction& fn);

// fn - fn(empty).
SetFunction Normalize(const SetFunction& fn);

// Pointwise combinations; the bound of the result is the sum of the bounds.
SetFunction Add(const SetFunction& a, const SetFunction& b);
SetFunction Subtract(const SetFunction& a, const SetFunction& b);
SetFunction Scale(const SetFunction& a, double factor);
SetFunction Shift(const SetFunction& a, double constant);

}  // namespace setmax

#endif  // SETMAX_GROUND_H_
