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

#include "setmax/astral.h"

#include <bit>
#include <string>
#include <vector>

#include "setmax/errors.h"

namespace setmax {

Astral Astral::Root(int n) {
  if (n < 2) throw ArgumentError("astral search needs n >= 2");
  return Astral(Subset::Full(n));
}

Astral Astral::Complete(int n) {
  if (n < 2) throw ArgumentError("astral search needs n >= 2");
  return Astral(Subset::Empty(n));
}

Astral Astral::FromIndependentSet(const Subset& indep) {
  if (indep.width() < 2) throw ArgumentError("astral search needs n >= 2");
  if (indep.size() == 1) {
    throw ArgumentError("an astral independent set has size 0 or >= 2");
  }
  return Astral(indep);
}

int Astral::depth() const {
  const int n = size();
  return IsComplete() ? n - 1 : n - indep_.size();
}

Astral Astral::Branch(int v) const {
  if (IsComplete()) throw ArgumentError("cannot branch on K_n");
  if (!indep_.contains(v)) {
    throw ArgumentError("branch vertex " + std::to_string(v + 1) +
                        " is not in the independent set");
  }
  if (indep_.size() == 2) return Complete(size());
  return Astral(indep_.without(v));
}

std::vector<Astral> Astral::Children() const {
  std::vector<Astral> out;
  if (IsComplete()) return out;
  for (int v : indep_.Elements()) out.push_back(Branch(v));
  return out;
}

std::vector<Edge> Astral::Edges() const {
  const int n = size();
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!indep_.contains(u) || !indep_.contains(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Astral::ToGraph() const { return Graph::FromEdges(size(), Edges()); }

int Astral::DHat(const Graph& g, int v) const {
  if (g.size() != size()) throw ArgumentError("graph size mismatch");
  if (IsComplete()) return Degree(g, v);
  if (!indep_.contains(v)) {
    // Centre of a star: joined to everything.
    return Degree(g, v);
  }
  return std::popcount(g.NeighborBits(v) & ~indep_.bits());
}

int Astral::DeltaHat(const Graph& g, const Subset& s) const {
  if (IsComplete() ? s.size() > 1 : !s.IsSubsetOf(indep_)) {
    throw ArgumentError("set " + s.ToString() +
                        " is not independent in the astral graph");
  }
  int total = 0;
  for (int v : s.Elements()) total += DHat(g, v);
  return total;
}

bool VerifyFact6(const Astral& a) {
  const int n = a.size();
  if (n > 12) throw CapacityError("Fact 6 enumeration needs n <= 12");
  const Graph g = a.ToGraph();
  std::vector<uint64_t> nontrivial_maximal;
  int maximum = 0;
  ForEachSubsetOf(Subset::Full(n), [&](const Subset& s) {
    if (InducedEdges(g, s) != 0) return;
    maximum = std::max(maximum, s.size());
    for (int v = 0; v < n; ++v) {
      if (!s.contains(v) && InducedEdges(g, s.with(v)) == 0) return;
    }
    if (s.size() >= 2) nontrivial_maximal.push_back(s.bits());
  });
  if (a.IsComplete()) return nontrivial_maximal.empty();
  if (nontrivial_maximal.size() != 1) return false;
  if (nontrivial_maximal.front() != a.indep().bits()) return false;
  return a.indep().size() == maximum;
}

}  // namespace setmax
