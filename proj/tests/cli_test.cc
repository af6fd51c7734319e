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

#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "gtest/gtest.h"
#include "setmax/instance.h"
#include "setmax/verify.h"

namespace setmax {
namespace {

constexpr char kTable[] =
    "n=2\n"
    "theta=table\n"
    "set 00 0\n"
    "set 01 1\n"
    "set 10 2\n"
    "set 11 1.5\n";

int ErrorLine(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

cli::MaximizeFlags Quiet() {
  cli::MaximizeFlags f;
  f.timing = false;
  return f;
}

TEST(InstanceTest, MinimalTable) {
  const Instance inst = ParseInstance(kTable);
  EXPECT_EQ(inst.n, 2);
  EXPECT_EQ(inst.Theta()(Subset::Of(2, {1})), 2.0);
  EXPECT_FALSE(inst.graph.has_value());
  EXPECT_EQ(inst.DecompositionGraph(), Graph::Complete(2));
}

TEST(InstanceTest, CutOfPath) {
  const Instance inst =
      ParseInstance("n=3\ntheta=cut\ngraph:\n1 2\n2 3\n");
  EXPECT_EQ(inst.Theta()(Subset::Of(3, {1})), 2.0);
}

TEST(InstanceTest, CardinalitySystem) {
  const Instance inst = ParseInstance(
      "n=3\ntheta=modular\nweights 1 2 3\nsystem=cardinality 1\n");
  ASSERT_TRUE(inst.system.has_value());
  EXPECT_EQ(inst.system->Membership(Subset::Of(3, {0, 1, 2})), 2.0);
}

TEST(InstanceTest, CoverageAndComments) {
  const Instance inst = ParseInstance(
      "# header\nn=2\ntheta=coverage  # trailing\ncover 1 0 1\ncover 2 1 2\n");
  EXPECT_EQ(inst.Theta()(Subset::Full(2)), 3.0);
}

TEST(InstanceTest, Errors) {
  EXPECT_EQ(ErrorLine("n=2\ntheta=table\nset 00 0\nset 00 1\n"), 4);
  EXPECT_GT(ErrorLine("n=2\ntheta=table\nset 00 0\nset 01 1\nset 10 1\n"), 0);
  EXPECT_EQ(ErrorLine("n=2\ntheta=table\nset 0 0\n"), 3);
  EXPECT_EQ(ErrorLine("n=2\ntheta=cut\ngraph:\n1 3\n"), 4);
  EXPECT_EQ(ErrorLine("n=2\ntheta=cut\ngraph:\n1 2\n2 1\n"), 5);
  EXPECT_EQ(ErrorLine("n=2\ntheta=cut\ngraph:\n1 1\n"), 4);
  EXPECT_EQ(ErrorLine("n=3\ntheta=modular\nweights 1 2 3\n"
                      "system=explicit\n1 2\n2\n"),
            6);
  EXPECT_EQ(ErrorLine("theta=table\n"), 1);
  EXPECT_EQ(ErrorLine("n=2\ntheta=spline\n"), 2);
  EXPECT_EQ(ErrorLine("n=2\ntheta=modular\nweights 1 x\n"), 3);
}

TEST(InstanceTest, RoundTrip) {
  const std::string canonical =
      "n=3\n"
      "theta=table\n"
      "set 000 0\n"
      "set 001 -0.5\n"
      "set 010 0.25\n"
      "set 011 1\n"
      "set 100 0.125\n"
      "set 101 2\n"
      "set 110 -1e-07\n"
      "set 111 3.5\n"
      "graph:\n"
      "1 2\n"
      "2 3\n"
      "system=explicit\n"
      "1 2\n"
      "3\n";
  EXPECT_EQ(SerializeInstance(ParseInstance(canonical)), canonical);
  for (const char* kind : {"table", "modular", "coverage", "cut"}) {
    for (const char* sys : {"none", "cardinality", "graph-independence",
                            "explicit"}) {
      cli::GenerateFlags g;
      g.kind = kind;
      g.system = sys;
      g.n = 5;
      g.seed = 9;
      const std::string text = cli::RunGenerate(g).out;
      EXPECT_EQ(SerializeInstance(ParseInstance(text)), text)
          << kind << " " << sys;
    }
  }
}

TEST(CliTest, MaximizeSpecExample) {
  const cli::CommandResult r = cli::RunMaximize(ParseInstance(kTable), Quiet());
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n', r.out.find('\n') + 1) + 1),
            "best_set=[2]\nbest_value=2\n");
  EXPECT_EQ(r.out.find("wall_time_ms"), std::string::npos);
}

TEST(CliTest, ReportKeyOrder) {
  cli::MaximizeFlags f;
  f.verify = true;
  f.interrupt_depth = 0;
  const cli::CommandResult r = cli::RunMaximize(ParseInstance(kTable), f);
  const std::vector<std::string> keys = {
      "best_set",     "best_value",     "alpha",
      "nodes_visited", "nodes_pruned",  "nodes_fathomed",
      "gap_bound",    "oracle_match",   "wall_time_ms"};
  std::vector<std::string> got;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    got.push_back(line.substr(0, line.find('=')));
  }
  EXPECT_EQ(got, keys);
}

TEST(CliTest, InterruptedReportsGapBound) {
  cli::MaximizeFlags f = Quiet();
  f.interrupt_depth = 0;
  const cli::CommandResult r = cli::RunMaximize(ParseInstance(kTable), f);
  EXPECT_EQ(r.exit_code, cli::kExitInterrupted);
  const std::size_t at = r.out.find("gap_bound=");
  ASSERT_NE(at, std::string::npos);
  EXPECT_GE(std::stod(r.out.substr(at + 10)), 2.0);
}

TEST(CliTest, VerifyFlag) {
  cli::MaximizeFlags f = Quiet();
  f.verify = true;
  const cli::CommandResult r = cli::RunMaximize(ParseInstance(kTable), f);
  EXPECT_NE(r.out.find("oracle_match=true\n"), std::string::npos);
}

TEST(CliTest, BadFlagCombinations) {
  cli::MaximizeFlags f = Quiet();
  f.fu = "tight";
  f.engine = "closed-form";
  EXPECT_EQ(cli::RunMaximize(ParseInstance(kTable), f).exit_code,
            cli::kExitUsage);
  f = Quiet();
  f.engine = "ls";
  EXPECT_EQ(cli::RunMaximize(ParseInstance(kTable), f).exit_code,
            cli::kExitUsage);
  f = Quiet();
  f.alpha = "-1";
  EXPECT_EQ(cli::RunMaximize(ParseInstance(kTable), f).exit_code,
            cli::kExitUsage);
  f = Quiet();
  f.mode = "approx";
  f.engine = "interval";
  EXPECT_EQ(cli::RunMaximize(ParseInstance(kTable), f).exit_code,
            cli::kExitUsage);
}

TEST(CliTest, DeterministicReports) {
  cli::GenerateFlags g;
  g.n = 8;
  g.seed = 5;
  const Instance inst = ParseInstance(cli::RunGenerate(g).out);
  for (const char* mode : {"exact", "approx"}) {
    cli::MaximizeFlags f = Quiet();
    f.mode = mode;
    if (std::string(mode) == "approx") f.alpha = "auto";
    const cli::CommandResult a = cli::RunMaximize(inst, f);
    const cli::CommandResult b = cli::RunMaximize(inst, f);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.exit_code, b.exit_code);
  }
}

TEST(CliTest, BestValueIsThetaOfBestSet) {
  for (const char* kind : {"table", "coverage", "cut", "modular"}) {
    cli::GenerateFlags g;
    g.kind = kind;
    g.n = 7;
    g.seed = 3;
    const Instance inst = ParseInstance(cli::RunGenerate(g).out);
    cli::MaximizeFlags f = Quiet();
    f.verify = true;
    const cli::CommandResult r = cli::RunMaximize(inst, f);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    EXPECT_NE(r.out.find("oracle_match=true"), std::string::npos) << kind;
    const std::size_t s = r.out.find("best_set=[") + 10;
    Subset best = Subset::Empty(7);
    for (std::size_t i = s; r.out[i] != ']'; ++i) {
      if (r.out[i] == ',') continue;
      best = best.with(r.out[i] - '1');
    }
    const std::size_t v = r.out.find("best_value=") + 11;
    EXPECT_EQ(r.out.substr(v, r.out.find('\n', v) - v),
              FormatNumber(inst.Theta()(best)));
  }
}

TEST(CliTest, ConstrainedMaximize) {
  const Instance inst = ParseInstance(
      "n=3\ntheta=modular\nweights 5 4 3\nsystem=cardinality 1\n");
  cli::MaximizeFlags f = Quiet();
  f.verify = true;
  const cli::CommandResult r = cli::RunMaximize(inst, f);
  EXPECT_EQ(r.out.rfind("best_set=[1]\nbest_value=5\n", 0), 0u);
  EXPECT_NE(r.out.find("oracle_match=true"), std::string::npos);
}

TEST(CliTest, NonDecomposableGraph) {
  const Instance inst =
      ParseInstance("n=2\ntheta=table\nset 00 0\nset 01 0\nset 10 0\n"
                    "set 11 4\ngraph:\n");
  EXPECT_EQ(cli::RunMaximize(inst, Quiet()).exit_code, cli::kExitUsage);
}

TEST(CliTest, VerifySuites) {
  SuiteOptions o;
  o.seed = 3;
  o.trials = 20;
  EXPECT_EQ(cli::RunVerify("fact1", o).out,
            "suite=fact1 trials=20 failures=0 max_violation=0\n");
  const cli::CommandResult cor = cli::RunVerify("cor15", o);
  EXPECT_EQ(cor.out, "suite=cor15 trials=20 failures=0 max_violation=0\n");
  o.epsilon = 0.5;
  EXPECT_EQ(cli::RunVerify("ls-ratio", o).exit_code, 0);
  EXPECT_EQ(cli::RunVerify("bogus", o).exit_code, cli::kExitUsage);
}

TEST(CliTest, Bench) {
  cli::BenchFlags b;
  b.n = 6;
  b.instances = 3;
  b.maximize.timing = false;
  const cli::CommandResult r = cli::RunBench(b);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("mismatches=0"), std::string::npos);
}

}  // namespace
}  // namespace setmax
