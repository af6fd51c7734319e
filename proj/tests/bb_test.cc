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

#include "setmax/bb.h"

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "setmax/errors.h"
#include "setmax/generators.h"

namespace setmax {
namespace {

Decomposition OnCompleteGraph(const SetFunction& theta) {
  const int n = theta.size();
  return Decompose(theta, RoundUpToPowerOfTwo(MinAlpha(theta, GroundSet(n))),
                   Graph::Complete(n));
}

uint64_t OracleBits(const SetFunction& theta) {
  const int n = theta.size();
  return testing::ArgmaxOver(n, [&](uint64_t m) { return theta(Subset(n, m)); })
      .bits;
}

std::vector<BBConfig> ExactConfigs() {
  std::vector<BBConfig> out;
  for (FuMode fu : {FuMode::kModular, FuMode::kTight}) {
    for (Engine e : {Engine::kClosedForm, Engine::kInterval}) {
      if (fu == FuMode::kTight && e == Engine::kClosedForm) continue;
      BBConfig cfg;
      cfg.fu_mode = fu;
      cfg.engine = e;
      out.push_back(cfg);
    }
  }
  return out;
}

TEST(BBTest, ValidateConfig) {
  BBConfig cfg;
  cfg.fu_mode = FuMode::kTight;
  EXPECT_THROW(ValidateConfig(cfg), ArgumentError);
  cfg = {};
  cfg.approx_factor = 4;
  EXPECT_THROW(ValidateConfig(cfg), ArgumentError);
  cfg = {};
  cfg.engine = Engine::kLocalSearch;
  EXPECT_THROW(ValidateConfig(cfg), ArgumentError);
  cfg.approx_factor = 0.5;
  EXPECT_THROW(ValidateConfig(cfg), ArgumentError);
  cfg.approx_factor = 4;
  EXPECT_NO_THROW(ValidateConfig(cfg));
}

TEST(BBTest, SpecExample) {
  const SetFunction theta = SetFunction::Table(2, {0, 1, 2, 1.5});
  const Decomposition dec = OnCompleteGraph(theta);
  const BBResult r = BBMaximize(dec, {});
  EXPECT_EQ(r.best, Subset::Of(2, {1}));
  EXPECT_EQ(r.value, 2.0 / dec.alpha());
  EXPECT_TRUE(r.complete);
}

TEST(BBTest, ZeroThetaKeepsEmptyIncumbent) {
  const Decomposition dec =
      Decompose(SetFunction::Constant(5, 0.0), 1.0, Graph::Complete(5));
  for (const BBConfig& cfg : ExactConfigs()) {
    const BBResult r = BBMaximize(dec, cfg);
    EXPECT_EQ(r.best, Subset::Empty(5));
    EXPECT_EQ(r.value, 0.0);
  }
}

TEST(BBTest, TinyGroundSets) {
  const SetFunction one = SetFunction::Table(1, {0, 2});
  const BBResult r = BBMaximize(OnCompleteGraph(one), {});
  EXPECT_EQ(r.best, Subset::Full(1));
}

TEST(BBTest, RootSubproblemModular) {
  Rng rng(61);
  const SetFunction theta = RandomTable(6, rng);
  const Decomposition dec = OnCompleteGraph(theta);
  const SubproblemResult r = SolveSubproblem(Astral::Root(6), dec, {}, 0);
  // At the root d-hat is 0, so the weights are f(v).
  Subset expect = Subset::Empty(6);
  double sum = 0;
  for (int v = 0; v < 6; ++v) {
    const double w = dec.f()(Subset::Singleton(6, v));
    if (w >= 0) expect = expect.with(v), sum += w;
  }
  EXPECT_EQ(r.v1, expect);
  EXPECT_NEAR(r.theta1, sum, 1e-12);
  EXPECT_EQ(r.v2, Subset::Full(6));
}

TEST(BBTest, CompleteNodeSubproblem) {
  Rng rng(62);
  const SetFunction theta = RandomTable(5, rng);
  const Decomposition dec = OnCompleteGraph(theta);
  const SubproblemResult r = SolveSubproblem(Astral::Complete(5), dec, {}, 4);
  Subset best = Subset::Empty(5);
  for (int v = 0; v < 5; ++v) {
    const Subset s = Subset::Singleton(5, v);
    if (dec.Objective(s) > dec.Objective(best)) best = s;
  }
  EXPECT_EQ(r.v1, best);
  EXPECT_EQ(r.v2, best);
  EXPECT_EQ(r.theta1, dec.Objective(best));
}

TEST(BBTest, MatchesBruteForceOnTables) {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const SetFunction theta = RandomTable(8, rng);
    const Decomposition dec = OnCompleteGraph(theta);
    for (const BBConfig& cfg : ExactConfigs()) {
      const BBResult r = BBMaximize(dec, cfg);
      EXPECT_EQ(r.best.bits(), OracleBits(theta)) << "trial " << trial;
      EXPECT_LE(r.stats.nodes_visited, (1 << 8) - 8);
    }
  }
}

TEST(BBTest, MatchesBruteForceWithTies) {
  // Small integer values force many equal-valued sets.
  Rng rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> t(1 << 6);
    for (double& v : t) v = static_cast<double>(rng() % 3);
    const SetFunction theta = SetFunction::Table(6, t);
    const Decomposition dec = OnCompleteGraph(theta);
    for (const BBConfig& cfg : ExactConfigs()) {
      EXPECT_EQ(BBMaximize(dec, cfg).best.bits(), OracleBits(theta));
    }
  }
}

TEST(BBTest, SparseDecompositionGraph) {
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const DecomposedTheta d = RandomDecomposedTheta(7, rng);
    const Decomposition dec = Decompose(d.theta, 1.0, d.graph);
    for (const BBConfig& cfg : ExactConfigs()) {
      EXPECT_EQ(BBMaximize(dec, cfg).best.bits(), OracleBits(d.theta));
    }
  }
}

TEST(BBTest, DisablePruningVisitsEveryAstral) {
  for (int n = 2; n <= 5; ++n) {
    Rng rng(66 + n);
    const Decomposition dec = OnCompleteGraph(RandomTable(n, rng));
    BBConfig cfg;
    cfg.disable_pruning = true;
    cfg.record_trace = true;
    const BBResult r = BBMaximize(dec, cfg);
    std::set<uint64_t> keys;
    for (const NodeTrace& t : r.trace) keys.insert(t.indep.bits());
    std::set<uint64_t> want = {0};
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
      if (std::popcount(m) >= 2) want.insert(m);
    }
    EXPECT_EQ(keys, want);
    EXPECT_EQ(r.stats.nodes_visited, (int64_t{1} << n) - n);
  }
}

TEST(BBTest, AnytimeIncumbentIsMonotone) {
  Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction theta = RandomTable(7, rng);
    const Decomposition dec = OnCompleteGraph(theta);
    BBConfig cfg;
    cfg.record_trace = true;
    const BBResult r = BBMaximize(dec, cfg);
    double previous = dec.Objective(Subset::Empty(7));
    for (const NodeTrace& t : r.trace) {
      EXPECT_GE(t.z_star_after, previous);
      EXPECT_EQ(t.z_star_after, dec.Objective(t.incumbent_after));
      previous = t.z_star_after;
    }
  }
}

TEST(BBTest, InterruptBoundIsSound) {
  Rng rng(68);
  for (int depth : {0, 1, 2}) {
    for (int trial = 0; trial < 20; ++trial) {
      const SetFunction theta = RandomTable(8, rng);
      const Decomposition dec = OnCompleteGraph(theta);
      BBConfig cfg;
      cfg.interrupt_depth = depth;
      const BBResult r = BBMaximize(dec, cfg);
      const double opt = dec.Objective(Subset(8, OracleBits(theta)));
      if (r.complete) {
        EXPECT_EQ(r.best.bits(), OracleBits(theta));
        continue;
      }
      ASSERT_TRUE(r.gap.valid);
      EXPECT_LE(opt, r.gap.bound);
    }
  }
}

TEST(BBTest, NodeCapStopsEarly) {
  Rng rng(69);
  const Decomposition dec = OnCompleteGraph(RandomTable(9, rng));
  BBConfig cfg;
  cfg.node_cap = 3;
  const BBResult r = BBMaximize(dec, cfg);
  EXPECT_LE(r.stats.nodes_visited, 3);
}

TEST(BBTest, ParallelMatchesSequential) {
  Rng rng(70);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction theta = RandomTable(9, rng);
    const Decomposition dec = OnCompleteGraph(theta);
    BBConfig cfg;
    cfg.fu_mode = FuMode::kTight;
    cfg.engine = Engine::kInterval;
    const BBResult seq = BBMaximize(dec, cfg);
    cfg.threads = 4;
    const BBResult par = BBMaximize(dec, cfg);
    EXPECT_EQ(par.best, seq.best);
    EXPECT_EQ(par.value, seq.value);
  }
}

TEST(BBTest, ApproximateModeOnNonNegativeInstances) {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const SetFunction theta = RandomNonNegativeTable(10, rng);
    const Decomposition dec =
        Decompose(theta, DefaultAlpha(theta.bound()), Graph::Complete(10));
    BBConfig cfg;
    cfg.fu_mode = FuMode::kTight;
    cfg.engine = Engine::kLocalSearch;
    cfg.approx_factor = 4.0;
    cfg.epsilon = 0.25;
    EXPECT_EQ(BBMaximize(dec, cfg).best.bits(), OracleBits(theta));
  }
}

TEST(BBTest, LocalSearchRejectsNegativeSingletons) {
  const SetFunction theta = SetFunction::Table(2, {0, -1, 1, 0});
  const Decomposition dec = Decompose(theta, 4.0, Graph::Complete(2));
  BBConfig cfg;
  cfg.fu_mode = FuMode::kTight;
  cfg.engine = Engine::kLocalSearch;
  cfg.approx_factor = 4.0;
  EXPECT_THROW(BBMaximize(dec, cfg), ContractError);
}

TEST(BBTest, FuSchedule) {
  Rng rng(72);
  const SetFunction theta = RandomTable(7, rng);
  BBConfig cfg;
  cfg.engine = Engine::kInterval;
  cfg.fu_schedule = {FuMode::kModular, FuMode::kTight};
  EXPECT_EQ(cfg.FuAt(0), FuMode::kModular);
  EXPECT_EQ(cfg.FuAt(5), FuMode::kTight);
  EXPECT_EQ(BBMaximize(OnCompleteGraph(theta), cfg).best.bits(),
            OracleBits(theta));
}

}  // namespace
}  // namespace setmax
