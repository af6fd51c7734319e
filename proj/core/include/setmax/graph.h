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

#ifndef SETMAX_GRAPH_H_
#define SETMAX_GRAPH_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "setmax/ground.h"
#include "setmax/subset.h"

namespace setmax {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 stored as neighbor bit vectors.
// Immutable after construction.
class Graph {
 public:
  // Edgeless graph.
  explicit Graph(int n);

  // Throws ArgumentError on self-loops, repeated edges or bad endpoints.
  static Graph FromEdges(int n, const std::vector<Edge>& edges);
  static Graph Complete(int n);
  // Path 0 - 1 - ... - (n-1).
  static Graph Path(int n);

  int size() const { return n_; }
  int edge_count() const { return edge_count_; }
  // Neighbors of v as a subset.
  Subset Neighbors(int v) const;
  uint64_t NeighborBits(int v) const { return adjacency_[v]; }
  bool HasEdge(int u, int v) const;
  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> Edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void AddEdge(int u, int v);

  int n_;
  int edge_count_ = 0;
  std::vector<uint64_t> adjacency_;
};

// Edges with exactly one endpoint in s.
int Cut(const Graph& g, const Subset& s);

// Edges with one endpoint in a and the other in b. An edge with both endpoints
// in a n b counts once.
int Bicut(const Graph& g, const Subset& a, const Subset& b);

int Degree(const Graph& g, int v);

// Edges with both endpoints in s.
int InducedEdges(const Graph& g, const Subset& s);

// cut(a) + cut(b) == cut(a u b) + cut(a n b) + 2 bicut(a \ b, b \ a).
bool CheckFact1(const Graph& g, const Subset& a, const Subset& b);

// Every vertex outside s has a neighbor in s. By convention the full vertex
// set dominates, and the empty set dominates only the empty graph.
bool IsDominating(const Graph& g, const Subset& s);

// Every vertex of s has a neighbor inside s.
bool HasNoIsolatedVertex(const Graph& g, const Subset& s);

// The cut function of g as a normalized set function.
SetFunction CutFunction(const Graph& g);

}  // namespace setmax

#endif  // SETMAX_GRAPH_H_
