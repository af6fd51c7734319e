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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "setmax/errors.h"
#include "setmax/generators.h"
#include "setmax/graph.h"
#include "setmax/subset.h"

namespace setmax {
namespace {

SetFunction ExampleTable() {
  // {}:0, {1}:1, {2}:2, {1,2}:1.5
  return SetFunction::Table(2, {0.0, 1.0, 2.0, 1.5});
}

TEST(SubsetTest, BasicsAndOrder) {
  const Subset s = Subset::Of(4, {0, 2});
  EXPECT_EQ(s.bits(), 0b0101u);
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.ToString(), "{1,3}");
  EXPECT_EQ(s.Complement(), Subset::Of(4, {1, 3}));
  EXPECT_TRUE(Subset::Of(4, {0}).IsSubsetOf(s));
  EXPECT_FALSE(Subset::Of(4, {1}).ComparableWith(s));
  EXPECT_LT(Subset::Of(4, {1}), Subset::Of(4, {0, 1}));
  EXPECT_EQ(Subset::Empty(3).First(), -1);
  EXPECT_THROW(Subset(3, 0b1000), ArgumentError);
  EXPECT_THROW(Subset::Singleton(3, 3), ArgumentError);
}

TEST(SubsetTest, ForEachSubsetVisitsEverySubsetOnce) {
  const Subset domain = Subset::Of(6, {1, 3, 4});
  std::vector<uint64_t> seen;
  ForEachSubsetOf(domain, [&](const Subset& s) { seen.push_back(s.bits()); });
  ASSERT_EQ(seen.size(), 8u);
  for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_LT(seen[i - 1], seen[i]);
  for (uint64_t b : seen) EXPECT_EQ(b & ~domain.bits(), 0u);
}

TEST(SubsetTest, SixtyFourElements) {
  const Subset full = Subset::Full(64);
  EXPECT_EQ(full.size(), 64);
  EXPECT_TRUE(full.Complement().empty());
  EXPECT_THROW(Subset::Empty(65), ArgumentError);
}

TEST(GroundTest, EvaluateTable) {
  const SetFunction fn = ExampleTable();
  EXPECT_EQ(fn(Subset::Of(2, {1})), 2.0);
  EXPECT_EQ(fn(Subset::Empty(2)), 0.0);
  EXPECT_THROW(fn(Subset::Empty(3)), ArgumentError);
}

TEST(GroundTest, EvaluateCutOfPath) {
  const SetFunction cut = CutFunction(Graph::Path(3));
  EXPECT_EQ(cut(Subset::Of(3, {1})), 2.0);
  EXPECT_TRUE(cut.normalized());
}

TEST(GroundTest, BruteForceArgmaxExamples) {
  const Scored a = BruteForceArgmax(ExampleTable(), GroundSet(2));
  EXPECT_EQ(a.set, Subset::Of(2, {1}));
  EXPECT_EQ(a.value, 2.0);

  const Scored zero = BruteForceArgmax(SetFunction::Constant(3, 0.0),
                                       GroundSet(3));
  EXPECT_EQ(zero.set, Subset::Empty(3));

  const Scored mod = BruteForceArgmax(SetFunction::Modular({3.0, -2.0}),
                                      GroundSet(2));
  EXPECT_EQ(mod.set, Subset::Of(2, {0}));
  EXPECT_EQ(mod.value, 3.0);
}

TEST(GroundTest, BruteForceRefusesAboveCap) {
  EXPECT_THROW(BruteForceArgmax(SetFunction::Constant(25, 0.0), GroundSet(25)),
               CapacityError);
  EXPECT_THROW(BruteForceArgmax(SetFunction::Constant(10, 0.0), GroundSet(10), 8),
               CapacityError);
}

TEST(GroundTest, BruteForceMatchesIndependentOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const SetFunction fn = RandomTable(8, rng);
    const Scored got = BruteForceArgmax(fn, GroundSet(8));
    const testing::Best want =
        testing::ArgmaxOver(8, [&](uint64_t m) { return fn(Subset(8, m)); });
    EXPECT_EQ(got.set.bits(), want.bits);
    EXPECT_EQ(got.value, want.value);
  }
}

TEST(GroundTest, TieBreakIsDeterministic) {
  // Three sets share the maximum; the smallest bit pattern wins every time.
  const SetFunction fn = SetFunction::Table(2, {0.0, 1.0, 1.0, 1.0});
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(BruteForceArgmax(fn, GroundSet(2)).set, Subset::Of(2, {0}));
  }
}

TEST(GroundTest, ArgmaxInvariantUnderShiftAndNormalize) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const SetFunction fn = RandomTable(8, rng);
    const Subset base = BruteForceArgmax(fn, GroundSet(8)).set;
    EXPECT_EQ(BruteForceArgmax(Shift(fn, 3.25), GroundSet(8)).set, base);
    const SetFunction norm = Normalize(fn);
    EXPECT_TRUE(norm.normalized());
    EXPECT_EQ(norm(Subset::Empty(8)), 0.0);
    EXPECT_EQ(BruteForceArgmax(norm, GroundSet(8)).set, base);
  }
}

TEST(GroundTest, NormalizeShiftsByEmptyValue) {
  const SetFunction fn = SetFunction::Table(1, {5.0, 7.0});
  const SetFunction norm = Normalize(fn);
  EXPECT_EQ(norm(Subset::Of(1, {0})), 2.0);
  const SetFunction again = Normalize(norm);
  EXPECT_EQ(again(Subset::Of(1, {0})), 2.0);
}

TEST(GroundTest, ModularityChecks) {
  const GroundSet g(4);
  EXPECT_TRUE(IsSubmodular(CutFunction(Graph::Complete(4)), g));
  EXPECT_TRUE(IsModular(SetFunction::Modular({1, -2, 3, 0.5}), g));
  const SetFunction bad = SetFunction::Table(2, {0, 0, 0, 4});
  EXPECT_FALSE(IsSubmodular(bad, GroundSet(2)));
  EXPECT_TRUE(IsSupermodular(bad, GroundSet(2)));
  const PairExcess worst = MaxSubmodularViolation(bad);
  EXPECT_EQ(worst.excess, 4.0);
  EXPECT_THROW(IsSubmodular(SetFunction::Constant(15, 0), GroundSet(15)),
               CapacityError);
}

TEST(GroundTest, SubmodularityMatchesIndependentOracle) {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const SetFunction fn = trial % 2 ? RandomSubmodular(6, rng)
                                     : RandomTable(6, rng);
    const double excess = testing::WorstSubmodularExcess(6, fn.Tabulate());
    EXPECT_EQ(IsSubmodular(fn, GroundSet(6)), excess <= kDefaultTolerance);
  }
}

TEST(GroundTest, Fact2Closure) {
  Rng rng(14);
  const GroundSet g(8);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction sub = RandomSubmodular(8, rng);
    const SetFunction super = Scale(RandomSubmodular(8, rng), -1.0);
    std::vector<double> w(8);
    for (double& x : w) x = std::uniform_real_distribution<double>(-1, 1)(rng);
    const SetFunction mod = SetFunction::Modular(w);
    EXPECT_TRUE(IsSubmodular(Add(sub, mod), g));
    EXPECT_TRUE(IsSubmodular(Subtract(sub, mod), g));
    EXPECT_TRUE(IsSupermodular(Add(super, mod), g));
    EXPECT_TRUE(IsSupermodular(Subtract(super, mod), g));
    EXPECT_TRUE(IsSubmodular(Subtract(sub, super), g));
    EXPECT_TRUE(IsSupermodular(Subtract(super, sub), g));
  }
}

TEST(GroundTest, BoundIsStrict) {
  const SetFunction fn = SetFunction::Modular({1.0, 2.0});
  EXPECT_GT(fn.bound(), 3.0);
}

}  // namespace
}  // namespace setmax
