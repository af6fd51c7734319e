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

#include "setmax/ground.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "setmax/errors.h"

namespace setmax {
namespace {

// Smallest double strictly greater than x.
double StrictlyAbove(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

void CheckPairwiseCap(int n) {
  if (n > kPairwiseCap) {
    throw CapacityError("pairwise check needs n <= " +
                        std::to_string(kPairwiseCap) + ", got " +
                        std::to_string(n));
  }
}

void CheckSameSize(const SetFunction& a, const SetFunction& b) {
  if (a.size() != b.size()) {
    throw ArgumentError("set functions over different ground sets");
  }
}

// Largest value of f(A u B) + f(A n B) - f(A) - f(B) over incomparable pairs,
// scanned on a dense table. Comparable pairs contribute exactly 0.
PairExcess ScanPairs(const std::vector<double>& t, int n, double sign) {
  PairExcess worst{Subset::Empty(n), Subset::Empty(n), 0.0};
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t a = 0; a < count; ++a) {
    const double fa = t[a];
    for (uint64_t b = a + 1; b < count; ++b) {
      const uint64_t meet = a & b;
      if (meet == a || meet == b) continue;
      const double excess = sign * (t[a | b] + t[meet] - fa - t[b]);
      if (excess > worst.excess) {
        worst = {Subset(n, a), Subset(n, b), excess};
      }
    }
  }
  return worst;
}

}  // namespace

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxElements) {
    throw ArgumentError("ground set size must be in [1, 64], got " +
                        std::to_string(n));
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw ArgumentError("label count does not match ground set size");
  }
}

std::string GroundSet::Label(int i) const {
  if (!labels_.empty()) return labels_.at(i);
  return std::to_string(i + 1);
}

SetFunction::SetFunction(int n, Oracle oracle, double bound, bool normalized)
    : n_(n),
      oracle_(std::make_shared<const Oracle>(std::move(oracle))),
      bound_(bound),
      normalized_(normalized) {
  if (n < 0 || n > kMaxElements) {
    throw ArgumentError("set function size must be in [0, 64]");
  }
  if (!(bound > 0)) throw ArgumentError("bound must be positive");
}

double SetFunction::Evaluate(const Subset& s) const {
  if (s.width() != n_) {
    throw ArgumentError("subset width " + std::to_string(s.width()) +
                        " does not match set function size " +
                        std::to_string(n_));
  }
  return (*oracle_)(s);
}

std::vector<double> SetFunction::Tabulate() const {
  if (n_ > kBruteForceCap) {
    throw CapacityError("cannot tabulate a set function with n > " +
                        std::to_string(kBruteForceCap));
  }
  std::vector<double> t(std::size_t{1} << n_);
  for (uint64_t s = 0; s < t.size(); ++s) t[s] = (*oracle_)(Subset(n_, s));
  return t;
}

SetFunction SetFunction::Table(int n, std::vector<double> values) {
  if (n < 0 || n > kBruteForceCap) {
    throw ArgumentError("table functions need n in [0, 24]");
  }
  if (values.size() != (std::size_t{1} << n)) {
    throw ArgumentError("table needs exactly 2^n values");
  }
  double max_abs = 0.0;
  for (double v : values) max_abs = std::max(max_abs, std::abs(v));
  const bool normalized = values[0] == 0.0;
  auto shared = std::make_shared<const std::vector<double>>(std::move(values));
  return SetFunction(
      n, [shared](const Subset& s) { return (*shared)[s.bits()]; },
      StrictlyAbove(max_abs), normalized);
}

SetFunction SetFunction::Modular(std::vector<double> weights) {
  const int n = static_cast<int>(weights.size());
  double total = 0.0;
  for (double w : weights) total += std::abs(w);
  auto shared = std::make_shared<const std::vector<double>>(std::move(weights));
  return SetFunction(
      n,
      [shared](const Subset& s) {
        double sum = 0.0;
        for (uint64_t b = s.bits(); b != 0; b &= b - 1) {
          sum += (*shared)[std::countr_zero(b)];
        }
        return sum;
      },
      StrictlyAbove(total), true);
}

SetFunction SetFunction::Constant(int n, double value) {
  return SetFunction(
      n, [value](const Subset&) { return value; },
      StrictlyAbove(std::abs(value)), value == 0.0);
}

double Evaluate(const SetFunction& fn, const Subset& s) {
  return fn.Evaluate(s);
}

Scored BruteForceArgmax(const SetFunction& fn, const GroundSet& g, int cap) {
  if (g.size() != fn.size()) {
    throw ArgumentError("ground set does not match set function");
  }
  return BruteForceArgmaxWithin(fn, g.Full(), cap);
}

Scored BruteForceArgmaxWithin(const SetFunction& fn, const Subset& domain,
                              int cap) {
  cap = std::min(cap, kBruteForceCap);
  if (domain.size() > cap) {
    throw CapacityError("brute force over " + std::to_string(domain.size()) +
                        " elements exceeds cap " + std::to_string(cap));
  }
  if (domain.width() != fn.size()) {
    throw ArgumentError("domain width does not match set function");
  }
  Scored best{Subset::Empty(fn.size()),
              fn.EvaluateUnchecked(Subset::Empty(fn.size()))};
  ForEachSubsetOf(domain, [&](const Subset& s) {
    const double v = fn.EvaluateUnchecked(s);
    if (Beats(v, s, best.value, best.set)) best = {s, v};
  });
  return best;
}

Scored BruteForceArgmaxWhere(const SetFunction& fn,
                             const std::function<bool(const Subset&)>& feasible,
                             int cap) {
  cap = std::min(cap, kBruteForceCap);
  if (fn.size() > cap) {
    throw CapacityError("constrained brute force exceeds cap " +
                        std::to_string(cap));
  }
  const int n = fn.size();
  Scored best{Subset::Empty(n), fn.EvaluateUnchecked(Subset::Empty(n))};
  ForEachSubsetOf(Subset::Full(n), [&](const Subset& s) {
    if (!feasible(s)) return;
    const double v = fn.EvaluateUnchecked(s);
    if (Beats(v, s, best.value, best.set)) best = {s, v};
  });
  return best;
}

PairExcess MaxSubmodularViolation(const SetFunction& fn) {
  CheckPairwiseCap(fn.size());
  return ScanPairs(fn.Tabulate(), fn.size(), 1.0);
}

bool IsSubmodular(const SetFunction& fn, const GroundSet& g, double tolerance) {
  if (g.size() != fn.size()) {
    throw ArgumentError("ground set does not match set function");
  }
  return MaxSubmodularViolation(fn).excess <= tolerance;
}

bool IsSupermodular(const SetFunction& fn, const GroundSet& g,
                    double tolerance) {
  if (g.size() != fn.size()) {
    throw ArgumentError("ground set does not match set function");
  }
  CheckPairwiseCap(fn.size());
  return ScanPairs(fn.Tabulate(), fn.size(), -1.0).excess <= tolerance;
}

bool IsModular(const SetFunction& fn, const GroundSet& g, double tolerance) {
  return IsSubmodular(fn, g, tolerance) && IsSupermodular(fn, g, tolerance);
}

SetFunction Normalize(const SetFunction& fn) {
  const double base = fn.EvaluateUnchecked(Subset::Empty(fn.size()));
  if (base == 0.0) {
    return SetFunction(
        fn.size(), [fn](const Subset& s) { return fn.EvaluateUnchecked(s); },
        fn.bound(), true);
  }
  return SetFunction(
      fn.size(),
      [fn, base](const Subset& s) { return fn.EvaluateUnchecked(s) - base; },
      StrictlyAbove(fn.bound() + std::abs(base)), true);
}

SetFunction Add(const SetFunction& a, const SetFunction& b) {
  CheckSameSize(a, b);
  return SetFunction(
      a.size(),
      [a, b](const Subset& s) {
        return a.EvaluateUnchecked(s) + b.EvaluateUnchecked(s);
      },
      StrictlyAbove(a.bound() + b.bound()), a.normalized() && b.normalized());
}

SetFunction Subtract(const SetFunction& a, const SetFunction& b) {
  CheckSameSize(a, b);
  return SetFunction(
      a.size(),
      [a, b](const Subset& s) {
        return a.EvaluateUnchecked(s) - b.EvaluateUnchecked(s);
      },
      StrictlyAbove(a.bound() + b.bound()), a.normalized() && b.normalized());
}

SetFunction Scale(const SetFunction& a, double factor) {
  return SetFunction(
      a.size(),
      [a, factor](const Subset& s) { return factor * a.EvaluateUnchecked(s); },
      StrictlyAbove(std::abs(factor) * a.bound()), a.normalized());
}

SetFunction Shift(const SetFunction& a, double constant) {
  return SetFunction(
      a.size(),
      [a, constant](const Subset& s) {
        return a.EvaluateUnchecked(s) + constant;
      },
      StrictlyAbove(a.bound() + std::abs(constant)),
      a.normalized() && constant == 0.0);
}

}  // namespace setmax
