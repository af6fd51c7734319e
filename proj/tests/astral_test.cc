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

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "setmax/errors.h"
#include "setmax/generators.h"

namespace setmax {
namespace {

// Every astral reachable from the root by repeated branching.
std::set<uint64_t> Reachable(int n) {
  std::set<uint64_t> seen;
  std::vector<Astral> stack = {Astral::Root(n)};
  while (!stack.empty()) {
    const Astral a = stack.back();
    stack.pop_back();
    if (!seen.insert(a.key()).second) continue;
    for (const Astral& c : a.Children()) stack.push_back(c);
  }
  return seen;
}

TEST(AstralTest, Root) {
  const Astral root = Astral::Root(3);
  EXPECT_EQ(root.indep(), Subset::Full(3));
  EXPECT_TRUE(root.Edges().empty());
  EXPECT_EQ(root.Children().size(), 3u);
  EXPECT_EQ(root.depth(), 0);
  EXPECT_THROW(Astral::Root(1), ArgumentError);
}

TEST(AstralTest, Branch) {
  const Astral root = Astral::Root(3);
  const Astral a = root.Branch(0);
  EXPECT_EQ(a.indep(), Subset::Of(3, {1, 2}));
  const Astral k3 = a.Branch(1);
  EXPECT_TRUE(k3.IsComplete());
  EXPECT_EQ(k3.depth(), 2);
  EXPECT_THROW(a.Branch(0), ArgumentError);
  EXPECT_THROW(k3.Branch(0), ArgumentError);
  EXPECT_THROW(Astral::FromIndependentSet(Subset::Of(3, {1})), ArgumentError);
}

TEST(AstralTest, BranchCommutes) {
  const Astral root = Astral::Root(5);
  EXPECT_EQ(root.Branch(0).Branch(1), root.Branch(1).Branch(0));
}

TEST(AstralTest, Edges) {
  const Astral a = Astral::FromIndependentSet(Subset::Of(3, {1, 2}));
  EXPECT_EQ(a.Edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_EQ(Astral::Complete(3).Edges(),
            (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(Astral::Complete(4).ToGraph(), Graph::Complete(4));
}

TEST(AstralTest, DeltaHat) {
  const Graph p3 = Graph::Path(3);
  const Astral a = Astral::FromIndependentSet(Subset::Of(3, {1, 2}));
  EXPECT_EQ(a.DHat(p3, 1), 1);
  EXPECT_EQ(a.DHat(p3, 2), 0);
  EXPECT_EQ(a.DeltaHat(p3, Subset::Of(3, {1, 2})), 1);
  EXPECT_EQ(Astral::Root(3).DeltaHat(p3, Subset::Full(3)), 0);
  EXPECT_EQ(Astral::Complete(3).DeltaHat(p3, Subset::Of(3, {1})), 2);
  EXPECT_THROW(a.DeltaHat(p3, Subset::Of(3, {0})), ArgumentError);
  EXPECT_THROW(Astral::Complete(3).DeltaHat(p3, Subset::Of(3, {0, 1})),
               ArgumentError);
}

TEST(AstralTest, Fact6) {
  for (uint64_t key : Reachable(4)) {
    EXPECT_TRUE(VerifyFact6(Astral::FromIndependentSet(Subset(4, key))));
  }
  EXPECT_TRUE(VerifyFact6(Astral::Root(6)));
  EXPECT_TRUE(
      VerifyFact6(Astral::FromIndependentSet(Subset::Of(3, {1, 2}))));
  EXPECT_THROW(VerifyFact6(Astral::Root(13)), CapacityError);
}

TEST(AstralTest, ReachabilityAndCount) {
  for (int n = 2; n <= 5; ++n) {
    const std::set<uint64_t> got = Reachable(n);
    std::set<uint64_t> want = {0};
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
      if (std::popcount(m) >= 2) want.insert(m);
    }
    EXPECT_EQ(got, want) << "n=" << n;
    EXPECT_EQ(got.size(), (std::size_t{1} << n) - n);
  }
}

TEST(AstralTest, EdgesDetermineIndep) {
  const int n = 6;
  std::set<std::vector<Edge>> edge_sets;
  std::size_t count = 0;
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    if (std::popcount(m) == 1) continue;
    // The empty set and the full set denote different graphs (K_n, empty).
    edge_sets.insert(Astral::FromIndependentSet(Subset(n, m)).Edges());
    ++count;
  }
  EXPECT_EQ(edge_sets.size(), count);
}

TEST(AstralTest, RelaxedCutIsMonotoneAndBounded) {
  Rng rng(41);
  const int n = 7;
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = RandomGraph(n, 0.5, rng);
    Astral a = Astral::Root(n);
    Subset s = a.indep();
    s = Subset(n, rng() & s.bits());
    int previous = a.DeltaHat(g, s);
    // Branch on vertices outside s so s stays feasible.
    for (int v = 0; v < n && a.indep().size() > 2; ++v) {
      if (s.contains(v) || !a.indep().contains(v)) continue;
      if (a.indep().size() - 1 < 2) break;
      a = a.Branch(v);
      const int now = a.DeltaHat(g, s);
      EXPECT_GE(now, previous);
      EXPECT_LE(now, Cut(g, s));
      previous = now;
    }
  }
}

}  // namespace
}  // namespace setmax
