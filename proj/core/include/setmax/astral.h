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

#ifndef SETMAX_ASTRAL_H_
#define SETMAX_ASTRAL_H_

#include <cstdint>
#include <vector>

#include "setmax/graph.h"
#include "setmax/subset.h"

namespace setmax {

// Node of the astral branch and bound.
//
// An astral graph on V is a union of stars centred at the vertices outside a
// distinguished independent set I. The graph is determined by I alone, so I is
// the canonical representation: two astrals are equal iff their sets are. The
// complete graph K_n has no non-trivial independent set and is encoded by the
// empty set; a one-element I never occurs.
class Astral {
 public:
  // Edgeless graph: I = V. Requires n >= 2.
  static Astral Root(int n);
  // The K_n marker.
  static Astral Complete(int n);
  // Throws ArgumentError unless |indep| >= 2 or indep is empty.
  static Astral FromIndependentSet(const Subset& indep);

  int size() const { return indep_.width(); }
  const Subset& indep() const { return indep_; }
  bool IsComplete() const { return indep_.empty(); }
  // Hash/visited-set key.
  uint64_t key() const { return indep_.bits(); }
  // Distance from the root: every branch removes one vertex from I and the
  // last one (|I| = 2) lands on K_n.
  int depth() const;

  // Adds the star centred at v. Requires v in I and a not K_n.
  Astral Branch(int v) const;
  // All children, in ascending order of the branching vertex.
  std::vector<Astral> Children() const;

  // Explicit edge set: all pairs with at least one endpoint outside I.
  std::vector<Edge> Edges() const;
  Graph ToGraph() const;

  // d-hat(v): neighbors of v in g that the astral also joins to v.
  int DHat(const Graph& g, int v) const;
  // Sum of DHat over s. s must be independent in the astral (a subset of I,
  // or at most one vertex for K_n).
  int DeltaHat(const Graph& g, const Subset& s) const;

  friend bool operator==(const Astral&, const Astral&) = default;

 private:
  explicit Astral(Subset indep) : indep_(indep) {}
  Subset indep_;
};

// Checks, by enumerating every independent set of the explicit graph, that the
// astral has exactly one maximal independent set of size >= 2, that it equals
// indep(), and that every maximal independent set of size >= 2 is maximum.
// Refuses n > 12.
bool VerifyFact6(const Astral& a);

}  // namespace setmax

#endif  // SETMAX_ASTRAL_H_
