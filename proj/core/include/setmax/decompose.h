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

#ifndef SETMAX_DECOMPOSE_H_
#define SETMAX_DECOMPOSE_H_

#include <optional>

#include "setmax/graph.h"
#include "setmax/ground.h"

namespace setmax {

// Floor returned by MinAlpha for functions that are already submodular.
inline constexpr double kMinAlphaFloor = 1e-6;

struct DecomposeOptions {
  double tolerance = kDefaultTolerance;
  // Verify submodularity of f exhaustively when n <= kPairwiseCap.
  bool validate = true;
};

// theta / alpha = f - cut_G with f submodular and normalized.
//
// theta may arrive un-normalized; it is shifted by -theta(empty) first and the
// shift is kept so objective values can be mapped back to theta units.
class Decomposition {
 public:
  const SetFunction& theta() const { return theta_; }
  const SetFunction& f() const { return f_; }
  const Graph& graph() const { return graph_; }
  double alpha() const { return alpha_; }
  double shift() const { return shift_; }
  int size() const { return graph_.size(); }

  // (f - cut)(s), computed as (theta(s) - shift) / alpha so that it orders
  // sets exactly like theta does.
  double Objective(const Subset& s) const;

  // Objective value expressed in theta units.
  double ToThetaUnits(double objective) const {
    return objective * alpha_ + shift_;
  }

  // f - cut as a set function (equal to Objective).
  SetFunction ObjectiveFunction() const;

 private:
  friend Decomposition Decompose(const SetFunction&, double, const Graph&,
                                 const DecomposeOptions&);
  Decomposition(SetFunction theta, SetFunction f, Graph graph, double alpha,
                double shift)
      : theta_(std::move(theta)),
        f_(std::move(f)),
        graph_(std::move(graph)),
        alpha_(alpha),
        shift_(shift) {}

  SetFunction theta_;
  SetFunction f_;
  Graph graph_;
  double alpha_;
  double shift_;
};

// max over (A, B) of theta(A u B) + theta(A n B) - theta(A) - theta(B); never
// negative because A = B contributes 0. Refuses n > kPairwiseCap.
double ModularityGap(const SetFunction& theta, const GroundSet& g);

// Smallest alpha for which theta / alpha + cut_{K_n} is submodular:
// max over incomparable (A, B) of gap(A, B) / (2 |A \ B| |B \ A|), floored at
// kMinAlphaFloor.
double MinAlpha(const SetFunction& theta, const GroundSet& g);

// The same threshold for a general graph g: the bicut of g replaces that of
// K_n. Empty when some pair has a positive gap and no crossing edge, in which
// case no alpha works.
std::optional<double> MinAlphaForGraph(const SetFunction& theta,
                                       const Graph& g);

// 4M, sufficient for any theta with |theta| < M.
double DefaultAlpha(double bound);

// Smallest power of two >= alpha. Dividing by a power of two is exact, which
// keeps ties in theta as ties in the objective.
double RoundUpToPowerOfTwo(double alpha);

// f = (theta - theta(empty)) / alpha + cut_G. Throws DecompositionError naming
// a violating pair when validation is on, n <= kPairwiseCap and f is not
// submodular within tolerance.
Decomposition Decompose(const SetFunction& theta, double alpha, const Graph& g,
                        const DecomposeOptions& options = {});

// theta with the empty set lifted to max{theta(empty), max_v theta({v})}.
SetFunction ThetaTilde(const SetFunction& theta);

// Outcome of checking the structure of the maximizer of theta-tilde.
struct Prop4Check {
  Subset maximizer;
  bool tilde_decomposition_valid = false;  // f~ = theta~/alpha + cut submodular
  bool empty_or_singleton = false;
  bool dominating = false;
  bool no_isolated_vertex = false;  // each member has a neighbor in the set
  bool holds() const { return empty_or_singleton || dominating; }
};

// Brute-forces the maximizer of theta-tilde built from dec.theta() and checks
// whether it is empty, a singleton, or dominating in dec.graph().
Prop4Check CheckProp4(const Decomposition& dec,
                      double tolerance = kDefaultTolerance);
bool VerifyProp4(const Decomposition& dec);

}  // namespace setmax

#endif  // SETMAX_DECOMPOSE_H_
