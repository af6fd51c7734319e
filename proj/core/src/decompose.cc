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

#include "setmax/decompose.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "setmax/errors.h"

namespace setmax {
namespace {

void CheckGround(const SetFunction& theta, const GroundSet& g) {
  if (theta.size() != g.size()) {
    throw ArgumentError("ground set does not match set function");
  }
  if (g.size() > kPairwiseCap) {
    throw CapacityError("pairwise scan needs n <= " +
                        std::to_string(kPairwiseCap));
  }
}

}  // namespace

double Decomposition::Objective(const Subset& s) const {
  return (theta_.Evaluate(s) - shift_) / alpha_;
}

SetFunction Decomposition::ObjectiveFunction() const {
  const Decomposition self = *this;
  return SetFunction(
      size(), [self](const Subset& s) { return self.Objective(s); },
      std::nextafter((theta_.bound() + std::abs(shift_)) / alpha_, INFINITY),
      true);
}

double ModularityGap(const SetFunction& theta, const GroundSet& g) {
  CheckGround(theta, g);
  return MaxSubmodularViolation(theta).excess;
}

double MinAlpha(const SetFunction& theta, const GroundSet& g) {
  CheckGround(theta, g);
  const int n = g.size();
  const std::vector<double> t = theta.Tabulate();
  const uint64_t count = uint64_t{1} << n;
  double alpha = kMinAlphaFloor;
  for (uint64_t a = 0; a < count; ++a) {
    for (uint64_t b = a + 1; b < count; ++b) {
      const uint64_t meet = a & b;
      if (meet == a || meet == b) continue;
      const double gap = t[a | b] + t[meet] - t[a] - t[b];
      if (gap <= 0) continue;
      // bicut of K_n between the disjoint parts a \ b and b \ a.
      const int crossing =
          std::popcount(a & ~b) * std::popcount(b & ~a);
      alpha = std::max(alpha, gap / (2.0 * crossing));
    }
  }
  return alpha;
}

std::optional<double> MinAlphaForGraph(const SetFunction& theta,
                                       const Graph& g) {
  CheckGround(theta, GroundSet(g.size()));
  const int n = g.size();
  const std::vector<double> t = theta.Tabulate();
  const uint64_t count = uint64_t{1} << n;
  double alpha = kMinAlphaFloor;
  for (uint64_t a = 0; a < count; ++a) {
    for (uint64_t b = a + 1; b < count; ++b) {
      const uint64_t meet = a & b;
      if (meet == a || meet == b) continue;
      const double gap = t[a | b] + t[meet] - t[a] - t[b];
      if (gap <= 0) continue;
      const int crossing =
          Bicut(g, Subset(n, a & ~b), Subset(n, b & ~a));
      if (crossing == 0) return std::nullopt;
      alpha = std::max(alpha, gap / (2.0 * crossing));
    }
  }
  return alpha;
}

double DefaultAlpha(double bound) {
  if (!(bound > 0)) throw ArgumentError("bound M must be positive");
  return 4.0 * bound;
}

double RoundUpToPowerOfTwo(double alpha) {
  if (!(alpha > 0)) throw ArgumentError("alpha must be positive");
  int exponent = 0;
  const double mantissa = std::frexp(alpha, &exponent);
  // alpha = mantissa * 2^exponent with mantissa in [0.5, 1).
  return mantissa == 0.5 ? alpha : std::ldexp(1.0, exponent);
}

Decomposition Decompose(const SetFunction& theta, double alpha, const Graph& g,
                        const DecomposeOptions& options) {
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    throw ArgumentError("alpha must be positive and finite");
  }
  if (theta.size() != g.size()) {
    throw ArgumentError("graph size does not match set function");
  }
  const int n = theta.size();
  const double shift = theta.EvaluateUnchecked(Subset::Empty(n));
  SetFunction f(
      n,
      [theta, shift, alpha, g](const Subset& s) {
        return (theta.EvaluateUnchecked(s) - shift) / alpha + Cut(g, s);
      },
      std::nextafter((theta.bound() + std::abs(shift)) / alpha +
                         g.edge_count(),
                     INFINITY),
      true);
  if (options.validate && n <= kPairwiseCap) {
    const PairExcess worst = MaxSubmodularViolation(f);
    if (worst.excess > options.tolerance) {
      throw DecompositionError(
          "f = theta/alpha + cut is not submodular at alpha=" +
          std::to_string(alpha) + ": A=" + worst.a.ToString() +
          " B=" + worst.b.ToString() +
          " violates by " + std::to_string(worst.excess));
    }
  }
  return Decomposition(theta, std::move(f), g, alpha, shift);
}

SetFunction ThetaTilde(const SetFunction& theta) {
  const int n = theta.size();
  return SetFunction(
      n,
      [theta, n](const Subset& s) {
        double v = theta.EvaluateUnchecked(s);
        if (!s.empty()) return v;
        for (int i = 0; i < n; ++i) {
          v = std::max(v, theta.EvaluateUnchecked(Subset::Singleton(n, i)));
        }
        return v;
      },
      theta.bound(), false);
}

Prop4Check CheckProp4(const Decomposition& dec, double tolerance) {
  const int n = dec.size();
  const SetFunction tilde = ThetaTilde(dec.theta());
  const Scored best = BruteForceArgmaxWithin(tilde, Subset::Full(n));
  Prop4Check out;
  out.maximizer = best.set;
  out.empty_or_singleton = best.set.size() <= 1;
  out.dominating = IsDominating(dec.graph(), best.set);
  out.no_isolated_vertex = HasNoIsolatedVertex(dec.graph(), best.set);
  if (n <= kPairwiseCap) {
    const Graph& g = dec.graph();
    const double alpha = dec.alpha();
    const SetFunction f_tilde(
        n,
        [tilde, g, alpha](const Subset& s) {
          return tilde.EvaluateUnchecked(s) / alpha + Cut(g, s);
        },
        tilde.bound() / alpha + g.edge_count() + 1.0);
    out.tilde_decomposition_valid =
        MaxSubmodularViolation(f_tilde).excess <= tolerance;
  }
  return out;
}

bool VerifyProp4(const Decomposition& dec) { return CheckProp4(dec).holds(); }

}  // namespace setmax
