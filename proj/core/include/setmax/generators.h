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

#ifndef SETMAX_GENERATORS_H_
#define SETMAX_GENERATORS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "setmax/constrained.h"
#include "setmax/graph.h"
#include "setmax/ground.h"
#include "setmax/subset.h"

namespace setmax {

// Every generator draws from this engine only, so a seed fixes the instance.
using Rng = std::mt19937_64;

// Table with every value, the empty set included, uniform in [-1, 1].
SetFunction RandomTable(int n, Rng& rng);

// Table with value 0 at the empty set and uniform [0, 1] elsewhere.
SetFunction RandomNonNegativeTable(int n, Rng& rng);

// G(n, p).
Graph RandomGraph(int n, double p, Rng& rng);

// covers[i] lists the items covered by element i.
using CoverFamily = std::vector<std::vector<int>>;

// Each element covers each of `items` items with probability 1/2.
CoverFamily RandomCoverFamily(int n, int items, Rng& rng);

// Number of distinct items covered by the elements of s.
SetFunction CoverageFunction(int n, const CoverFamily& covers);

// Non-negative, normalized, submodular and usually non-monotone: the cut of a
// random graph plus a random coverage function plus small non-negative
// weights. Tabulated.
SetFunction RandomSubmodular(int n, Rng& rng);

// Normalized submodular function that may take negative values: the above
// plus weights uniform in [-2, 2].
SetFunction RandomSignedSubmodular(int n, Rng& rng);

// theta = f - cut_G for f = RandomSignedSubmodular minus weights chosen so
// that theta({v}) <= theta(empty) = 0. Then theta-tilde = theta and G
// decomposes both with alpha = 1.
struct DecomposedTheta {
  SetFunction theta;
  Graph graph;
};
DecomposedTheta RandomDecomposedTheta(int n, Rng& rng);

// Random downward-closed system containing every singleton: cardinality,
// graph independence on G(n, 0.5), or the subsets of random maximal sets.
SubsetSystem RandomSubsetSystem(int n, Rng& rng);

// Subsets of a few random sets; every element lies in one of them.
SubsetSystem RandomExplicitSystem(int n, Rng& rng);

// Sum of c_j max(0, |s n T_j| - k_j) over a few random (T_j, k_j), c_j > 0:
// non-negative, normalized and supermodular.
SetFunction RandomSupermodularPenalty(int n, Rng& rng);

}  // namespace setmax

#endif  // SETMAX_GENERATORS_H_
