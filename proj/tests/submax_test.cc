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

#include "setmax/submax.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "setmax/errors.h"
#include "setmax/generators.h"
#include "setmax/graph.h"

namespace setmax {
namespace {

testing::Best OracleOver(const SetFunction& g, const Interval& iv) {
  const int n = g.size();
  return testing::ArgmaxOver(
      n, [&](uint64_t m) { return g(Subset(n, m | iv.lo.bits())); },
      [&](uint64_t m) { return (m & ~iv.hi.bits()) == 0; });
}

TEST(SubmaxTest, MaximizeModularExamples) {
  const std::vector<double> w = {2, -1, 0.5};
  const Scored a = MaximizeModular(w, Subset::Full(3));
  EXPECT_EQ(a.set, Subset::Of(3, {0, 2}));
  EXPECT_EQ(a.value, 2.5);
  const std::vector<double> neg = {-1, -2};
  EXPECT_EQ(MaximizeModular(neg, Subset::Full(2)).set, Subset::Empty(2));
  const std::vector<double> zero = {0, 1};
  const Scored z = MaximizeModular(zero, Subset::Full(2));
  EXPECT_EQ(z.set, Subset::Full(2));
  EXPECT_EQ(z.value, 1.0);
}

TEST(SubmaxTest, PreservationExamples) {
  const SetFunction g = SetFunction::Modular({3, -2});
  const Interval iv{Subset::Empty(2), Subset::Full(2)};
  EXPECT_TRUE(PreservationCheck(g, iv, 1).prune_upper);
  EXPECT_TRUE(PreservationCheck(g, iv, 0).prune_lower);
  EXPECT_FALSE(PreservationCheck(g, iv, 0).prune_upper);
  EXPECT_THROW(PreservationCheck(g, {Subset::Of(2, {0}), Subset::Full(2)}, 0),
               ArgumentError);
}

TEST(SubmaxTest, PreservationIsSound) {
  Rng rng(51);
  const int n = 8;
  for (int trial = 0; trial < 40; ++trial) {
    const SetFunction g = RandomSignedSubmodular(n, rng);
    const uint64_t lo = rng() & LowMask(n) & rng();
    const uint64_t hi = lo | (rng() & LowMask(n));
    const Interval iv{Subset(n, lo), Subset(n, hi)};
    for (int v : (iv.hi - iv.lo).Elements()) {
      const PreservationVerdict p = PreservationCheck(g, iv, v);
      const double keep_out = OracleOver(g, {iv.lo, iv.hi.without(v)}).value;
      const double keep_in = OracleOver(g, {iv.lo.with(v), iv.hi}).value;
      if (p.prune_upper) EXPECT_GE(keep_out, keep_in - 1e-9);
      if (p.prune_lower) EXPECT_GE(keep_in, keep_out - 1e-9);
    }
  }
}

TEST(SubmaxTest, IntervalMaxExamples) {
  const SetFunction g = SetFunction::Modular({3, -2});
  const Scored a = IntervalMax(g, {Subset::Empty(2), Subset::Full(2)});
  EXPECT_EQ(a.set, Subset::Of(2, {0}));
  EXPECT_EQ(a.value, 3.0);
  const Subset s = Subset::Of(4, {1, 3});
  EXPECT_EQ(IntervalMax(CutFunction(Graph::Complete(4)), {s, s}).set, s);
}

TEST(SubmaxTest, IntervalMaxMatchesBruteForce) {
  Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 9;
    const SetFunction g = trial % 3 == 0 ? CutFunction(RandomGraph(n, 0.5, rng))
                          : trial % 3 == 1 ? RandomSubmodular(n, rng)
                                           : RandomSignedSubmodular(n, rng);
    const Interval iv{Subset::Empty(n), Subset::Full(n)};
    const Scored got = IntervalMax(g, iv);
    const testing::Best want = OracleOver(g, iv);
    EXPECT_EQ(got.set.bits(), want.bits) << "trial " << trial;
    EXPECT_EQ(got.value, want.value);
  }
}

TEST(SubmaxTest, IntervalMaxOnSubIntervals) {
  Rng rng(53);
  const int n = 10;
  for (int trial = 0; trial < 50; ++trial) {
    const SetFunction g = RandomSignedSubmodular(n, rng);
    const uint64_t lo = rng() & rng() & LowMask(n);
    const uint64_t hi = lo | (rng() & LowMask(n));
    const Interval iv{Subset(n, lo), Subset(n, hi)};
    const Scored got = IntervalMax(g, iv);
    const testing::Best want = OracleOver(g, iv);
    EXPECT_EQ(got.set.bits(), want.bits | lo);
  }
}

TEST(SubmaxTest, IntervalMaxWithFeasibility) {
  Rng rng(54);
  const int n = 9;
  for (int trial = 0; trial < 50; ++trial) {
    const SetFunction g = RandomSignedSubmodular(n, rng);
    const Graph h = RandomGraph(n, 0.4, rng);
    testing::EdgeList edges = h.Edges();
    const auto feasible = [&](const Subset& s) {
      return testing::Independent(edges, s.bits());
    };
    const Scored got =
        IntervalMax(g, {Subset::Empty(n), Subset::Full(n)}, feasible);
    const testing::Best want = testing::ArgmaxOver(
        n, [&](uint64_t m) { return g(Subset(n, m)); },
        [&](uint64_t m) { return testing::Independent(edges, m); });
    EXPECT_EQ(got.set.bits(), want.bits);
  }
}

TEST(SubmaxTest, LsMaxModular) {
  const LSResult r = LsMax(SetFunction::Modular({1, 2, 3}), Subset::Full(3), 0.1);
  EXPECT_EQ(r.best, Subset::Full(3));
  EXPECT_EQ(r.value, 6.0);
  EXPECT_EQ(r.seed, Subset::Of(3, {2}));
}

TEST(SubmaxTest, LsMaxZero) {
  const LSResult r = LsMax(SetFunction::Constant(4, 0.0), Subset::Full(4), 0.5);
  EXPECT_EQ(r.value, 0.0);
}

TEST(SubmaxTest, LsMaxRejectsNegative) {
  EXPECT_THROW(LsMax(SetFunction::Modular({1, -5}), Subset::Full(2), 0.5),
               ContractError);
  EXPECT_THROW(LsMax(SetFunction::Modular({1, 2}), Subset::Full(2), 0.0),
               ArgumentError);
}

TEST(SubmaxTest, LsRatioAndWork) {
  Rng rng(55);
  const int n = 10;
  for (double eps : {0.25, 0.5, 1.0}) {
    for (int trial = 0; trial < 30; ++trial) {
      const SetFunction g = trial % 2 ? RandomSubmodular(n, rng)
                                      : CoverageFunction(
                                            n, RandomCoverFamily(n, 12, rng));
      const testing::Best opt =
          testing::ArgmaxOver(n, [&](uint64_t m) { return g(Subset(n, m)); });
      const LSResult r = LsMax(g, Subset::Full(n), eps);
      EXPECT_GE(r.value, (1.0 / 3.0 - eps / n) * opt.value - 1e-9);
      EXPECT_EQ(r.value, g(r.best));
      EXPECT_LE(r.subiterations,
                2.0 * (1.0 / eps) * n * n * std::log2(n) + 2.0);
      // Best output is the terminal set or its complement.
      EXPECT_TRUE(r.best == r.terminal ||
                  r.best == Subset::Full(n) - r.terminal);
    }
  }
}

TEST(SubmaxTest, LsSeedIsBestSingleton) {
  Rng rng(56);
  for (int trial = 0; trial < 20; ++trial) {
    const SetFunction g = RandomSubmodular(8, rng);
    const LSResult r = LsMax(g, Subset::Full(8), 0.5);
    double top = -1;
    int arg = -1;
    for (int v = 0; v < 8; ++v) {
      const double x = g(Subset::Singleton(8, v));
      if (x > top) top = x, arg = v;
    }
    EXPECT_EQ(r.seed, Subset::Singleton(8, arg));
  }
}

TEST(SubmaxTest, LsTerminalIsLocallyOptimal) {
  Rng rng(57);
  const int n = 9;
  const double eps = 0.5;
  const double factor = 1.0 + eps / (n * n);
  for (int trial = 0; trial < 20; ++trial) {
    const SetFunction g = RandomSubmodular(n, rng);
    const LSResult r = LsMax(g, Subset::Full(n), eps);
    const double at = g(r.terminal);
    for (int v = 0; v < n; ++v) {
      const Subset moved =
          r.terminal.contains(v) ? r.terminal.without(v) : r.terminal.with(v);
      EXPECT_LE(g(moved), factor * at);
    }
  }
}

TEST(SubmaxTest, Guarantees) {
  EXPECT_DOUBLE_EQ(LsGuarantee(10, 0.5), 1.0 / 3.0 - 0.05);
  EXPECT_LE(LsGuarantee(2, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(LsSubiterationBound(4, 1.0), 2.0 * 16 * 2 + 2.0);
}

}  // namespace
}  // namespace setmax
