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

#include "setmax/graph.h"

#include <bit>
#include <string>
#include <vector>

#include "setmax/errors.h"

namespace setmax {
namespace {

void CheckVertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range [0, " +
                        std::to_string(n) + ")");
  }
}

void CheckWidth(const Graph& g, const Subset& s) {
  if (s.width() != g.size()) {
    throw ArgumentError("subset width does not match graph size");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n), adjacency_(n, 0) {
  if (n < 0 || n > kMaxElements) {
    throw ArgumentError("graph size must be in [0, 64]");
  }
}

void Graph::AddEdge(int u, int v) {
  CheckVertex(n_, u);
  CheckVertex(n_, v);
  if (u == v) {
    throw ArgumentError("self-loop at vertex " + std::to_string(u + 1));
  }
  if (HasEdge(u, v)) {
    throw ArgumentError("repeated edge " + std::to_string(u + 1) + " " +
                        std::to_string(v + 1));
  }
  adjacency_[u] |= uint64_t{1} << v;
  adjacency_[v] |= uint64_t{1} << u;
  ++edge_count_;
}

Graph Graph::FromEdges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  return g;
}

Graph Graph::Complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.AddEdge(u, v);
  }
  return g;
}

Graph Graph::Path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.AddEdge(v, v + 1);
  return g;
}

Subset Graph::Neighbors(int v) const {
  CheckVertex(n_, v);
  return Subset(n_, adjacency_[v]);
}

bool Graph::HasEdge(int u, int v) const {
  CheckVertex(n_, u);
  CheckVertex(n_, v);
  return ((adjacency_[u] >> v) & 1u) != 0;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (uint64_t b = adjacency_[u] & ~LowMask(u + 1); b != 0; b &= b - 1) {
      out.emplace_back(u, std::countr_zero(b));
    }
  }
  return out;
}

int Cut(const Graph& g, const Subset& s) {
  CheckWidth(g, s);
  const uint64_t outside = ~s.bits();
  int total = 0;
  for (uint64_t b = s.bits(); b != 0; b &= b - 1) {
    total += std::popcount(g.NeighborBits(std::countr_zero(b)) & outside);
  }
  return total;
}

int Bicut(const Graph& g, const Subset& a, const Subset& b) {
  CheckWidth(g, a);
  CheckWidth(g, b);
  int ordered = 0;
  for (uint64_t x = a.bits(); x != 0; x &= x - 1) {
    ordered += std::popcount(g.NeighborBits(std::countr_zero(x)) & b.bits());
  }
  // Edges inside a n b were counted from both ends.
  return ordered - InducedEdges(g, a & b);
}

int Degree(const Graph& g, int v) {
  CheckVertex(g.size(), v);
  return std::popcount(g.NeighborBits(v));
}

int InducedEdges(const Graph& g, const Subset& s) {
  CheckWidth(g, s);
  int twice = 0;
  for (uint64_t b = s.bits(); b != 0; b &= b - 1) {
    twice += std::popcount(g.NeighborBits(std::countr_zero(b)) & s.bits());
  }
  return twice / 2;
}

bool CheckFact1(const Graph& g, const Subset& a, const Subset& b) {
  const int lhs = Cut(g, a) + Cut(g, b);
  const int rhs = Cut(g, a | b) + Cut(g, a & b) + 2 * Bicut(g, a - b, b - a);
  return lhs == rhs;
}

bool IsDominating(const Graph& g, const Subset& s) {
  CheckWidth(g, s);
  for (int v = 0; v < g.size(); ++v) {
    if (s.contains(v)) continue;
    if ((g.NeighborBits(v) & s.bits()) == 0) return false;
  }
  return true;
}

bool HasNoIsolatedVertex(const Graph& g, const Subset& s) {
  CheckWidth(g, s);
  for (uint64_t b = s.bits(); b != 0; b &= b - 1) {
    if ((g.NeighborBits(std::countr_zero(b)) & s.bits()) == 0) return false;
  }
  return true;
}

SetFunction CutFunction(const Graph& g) {
  return SetFunction(
      g.size(),
      [g](const Subset& s) { return static_cast<double>(Cut(g, s)); },
      g.edge_count() + 1.0, true);
}

}  // namespace setmax
