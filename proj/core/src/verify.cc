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

#include "setmax/verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "setmax/astral.h"
#include "setmax/bb.h"
#include "setmax/constrained.h"
#include "setmax/decompose.h"
#include "setmax/errors.h"
#include "setmax/generators.h"
#include "setmax/graph.h"
#include "setmax/submax.h"

namespace setmax {
namespace {

struct Defaults {
  int trials;
  int n;
  int cap;
};

const std::map<std::string, Defaults>& Table() {
  static const auto* table = new std::map<std::string, Defaults>{
      {"fact1", {1000, 10, 64}},   {"fact6", {100, 8, 12}},
      {"prop4", {100, 8, 12}},     {"prop9", {50, 8, 10}},
      {"prop14", {50, 8, 8}},      {"cor15", {100, 8, 12}},
      {"ls-ratio", {100, 10, 16}}, {"lsa-bound", {100, 10, 14}},
  };
  return *table;
}

// Accumulates trial outcomes.
class Tally {
 public:
  explicit Tally(std::string name) { report_.name = std::move(name); }
  // violation > 0 marks a failed trial.
  void Record(double violation) {
    ++report_.trials;
    if (violation > 0) {
      ++report_.failures;
      report_.max_violation = std::max(report_.max_violation, violation);
    }
  }
  void Fail(double violation) {
    ++report_.trials;
    ++report_.failures;
    report_.max_violation = std::max(report_.max_violation, violation);
  }
  SuiteReport Done() const { return report_; }

 private:
  SuiteReport report_;
};

Subset RandomSubset(int n, Rng& rng) {
  return Subset(n, rng() & LowMask(n));
}

SuiteReport Fact1(const SuiteOptions& o, int trials, int n, Rng& rng) {
  Tally t("fact1");
  for (int i = 0; i < trials; ++i) {
    const Graph g = o.instance ? o.instance->DecompositionGraph()
                               : RandomGraph(n, 0.5, rng);
    const int m = g.size();
    const Subset a = RandomSubset(m, rng);
    const Subset b = RandomSubset(m, rng);
    const int lhs = Cut(g, a) + Cut(g, b);
    const int rhs =
        Cut(g, a | b) + Cut(g, a & b) + 2 * Bicut(g, a - b, b - a);
    t.Record(std::abs(lhs - rhs));
  }
  return t.Done();
}

SuiteReport Fact6(int trials, int n, Rng& rng) {
  Tally t("fact6");
  for (int i = 0; i < trials; ++i) {
    Subset indep = RandomSubset(n, rng);
    if (indep.size() == 1) indep = Subset::Empty(n);
    t.Record(VerifyFact6(Astral::FromIndependentSet(indep)) ? 0.0 : 1.0);
  }
  return t.Done();
}

Decomposition RandomValidDecomposition(int n, Rng& rng) {
  DecomposedTheta d = RandomDecomposedTheta(n, rng);
  return Decompose(d.theta, 1.0, d.graph);
}

SuiteReport Prop4(const SuiteOptions& o, int trials, int n, Rng& rng) {
  Tally t("prop4");
  for (int i = 0; i < trials; ++i) {
    const Decomposition dec =
        o.instance ? Decompose(o.instance->Theta(),
                               RoundUpToPowerOfTwo(MinAlpha(
                                   o.instance->Theta(), GroundSet(o.instance->n))),
                               Graph::Complete(o.instance->n))
                   : RandomValidDecomposition(n, rng);
    const Prop4Check check = CheckProp4(dec);
    if (check.holds()) {
      t.Record(0.0);
      continue;
    }
    // Violation: number of vertices left undominated.
    const Graph& g = dec.graph();
    int missed = 0;
    for (int v = 0; v < g.size(); ++v) {
      if (!check.maximizer.contains(v) &&
          (g.NeighborBits(v) & check.maximizer.bits()) == 0) {
        ++missed;
      }
    }
    t.Fail(missed);
  }
  return t.Done();
}

// Max of the objective over F-hat at a node, by enumeration.
double EnumerateFHat(const Decomposition& dec, const Subset& indep,
                     const std::function<bool(const Subset&)>& member) {
  const int n = dec.size();
  double best = dec.Objective(Subset::Empty(n));
  if (indep.empty()) {
    for (int v = 0; v < n; ++v) {
      const Subset s = Subset::Singleton(n, v);
      if (member(s)) best = std::max(best, dec.Objective(s));
    }
    return best;
  }
  ForEachSubsetOf(indep, [&](const Subset& s) {
    if (member(s)) best = std::max(best, dec.Objective(s));
  });
  return best;
}

SuiteReport Prop9(const SuiteOptions& o, int trials, int n, Rng& rng) {
  Tally t("prop9");
  const std::array<std::pair<FuMode, Engine>, 3> modes = {
      std::pair{FuMode::kModular, Engine::kClosedForm},
      std::pair{FuMode::kTight, Engine::kInterval},
      std::pair{FuMode::kModular, Engine::kInterval}};
  for (int i = 0; i < trials; ++i) {
    const SetFunction theta = o.instance ? o.instance->Theta() : RandomTable(n, rng);
    const int m = theta.size();
    const double alpha =
        RoundUpToPowerOfTwo(MinAlpha(theta, GroundSet(m)));
    const Decomposition dec = Decompose(theta, alpha, Graph::Complete(m));
    BBConfig cfg;
    cfg.fu_mode = modes[i % modes.size()].first;
    cfg.engine = modes[i % modes.size()].second;
    cfg.record_trace = true;
    const BBResult r = BBMaximize(dec, cfg);
    double worst = 0.0;
    for (const NodeTrace& node : r.trace) {
      const double enumerated =
          EnumerateFHat(dec, node.indep, [](const Subset&) { return true; });
      worst = std::max(worst, enumerated - node.result.theta1);
    }
    t.Record(worst);
  }
  return t.Done();
}

SuiteReport Prop14(int trials, int n, Rng& rng) {
  Tally t("prop14");
  const GroundSet ground(n);
  for (int i = 0; i < trials; ++i) {
    const SubsetSystem sys = RandomSubsetSystem(n, rng);
    const SetFunction q = QFunction(sys);
    double bad = 0.0;
    if (q(Subset::Empty(n)) != 0.0) bad = 1.0;
    for (double v : q.Tabulate()) {
      if (v < 0) bad = std::max(bad, -v);
    }
    if (!IsSupermodular(q, ground)) {
      bad = std::max(bad, MaxSubmodularViolation(Scale(q, -1.0)).excess);
    }
    const SetFunction qp = RandomSupermodularPenalty(n, rng);
    if (!IsDownwardClosed([&qp](const Subset& s) { return qp(s) <= 0; }, n)) {
      bad = std::max(bad, 1.0);
    }
    t.Record(bad);
  }
  return t.Done();
}

SuiteReport Cor15(const SuiteOptions& o, int trials, int n, Rng& rng) {
  Tally t("cor15");
  for (int i = 0; i < trials; ++i) {
    const bool fixed = o.instance && o.instance->system;
    const SetFunction theta = fixed ? o.instance->Theta() : RandomTable(n, rng);
    const SubsetSystem sys =
        fixed ? *o.instance->system : RandomSubsetSystem(n, rng);
    const PenalizedFunction pen =
        Reformulate(theta, sys, 2.0 * theta.bound());
    const Scored unconstrained =
        BruteForceArgmax(pen.AsSetFunction(), GroundSet(theta.size()));
    const Scored constrained = BruteForceArgmaxWhere(
        theta, [&sys](const Subset& s) { return sys.Contains(s); });
    const bool same = unconstrained.set == constrained.set &&
                      unconstrained.value == constrained.value;
    t.Record(same ? 0.0
                  : std::max(std::abs(unconstrained.value - constrained.value),
                             1e-300));
  }
  return t.Done();
}

SuiteReport LsRatio(int trials, int n, double eps, Rng& rng) {
  Tally t("ls-ratio");
  for (int i = 0; i < trials; ++i) {
    const SetFunction g = RandomSubmodular(n, rng);
    const Scored opt = BruteForceArgmax(g, GroundSet(n));
    const LSResult ls = LsMax(g, Subset::Full(n), eps);
    const double target = LsGuarantee(n, eps) * opt.value - kDefaultTolerance;
    double bad = std::max(0.0, target - ls.value);
    if (ls.subiterations > LsSubiterationBound(n, eps)) {
      bad = std::max(bad, ls.subiterations - LsSubiterationBound(n, eps));
    }
    t.Record(bad);
  }
  return t.Done();
}

SuiteReport LsaBound(int trials, int n, double eps, Rng& rng) {
  Tally t("lsa-bound");
  for (int i = 0; i < trials; ++i) {
    const SetFunction g = RandomSubmodular(n, rng);
    const SubsetSystem sys =
        SubsetSystem::GraphIndependence(RandomGraph(n, 0.5, rng));
    const Subset full = Subset::Full(n);
    const LsaResult r = LsaMax(g, sys, full, eps, ChooseM(g, full));
    const Scored opt = BruteForceArgmaxWhere(
        g, [&sys](const Subset& s) { return sys.Contains(s); });
    const double lhs = LsaBoundFactor(r.k, eps) * r.value;
    double bad = lhs > opt.value ? 0.0 : std::max(opt.value - lhs, 1e-300);
    if (r.k > n) bad = std::max(bad, static_cast<double>(r.k - n));
    t.Record(bad);
  }
  return t.Done();
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const auto* names = new std::vector<std::string>{
      "fact1", "fact6", "prop4", "prop9",
      "prop14", "cor15", "ls-ratio", "lsa-bound"};
  return *names;
}

bool IsSuiteName(const std::string& name) { return Table().count(name) > 0; }

SuiteReport RunSuite(const std::string& name, const SuiteOptions& options) {
  const auto it = Table().find(name);
  if (it == Table().end()) throw ArgumentError("unknown suite '" + name + "'");
  const Defaults d = it->second;
  int n = options.n > 0 ? options.n : d.n;
  int trials = options.trials > 0 ? options.trials : d.trials;
  if (options.instance) {
    n = options.instance->n;
    if (name == "prop4" || name == "prop9" ||
        (name == "cor15" && options.instance->system)) {
      trials = 1;
    }
  }
  if (n < 2 || n > d.cap) {
    throw ArgumentError("suite " + name + " needs 2 <= n <= " +
                        std::to_string(d.cap));
  }
  if (!(options.epsilon > 0)) throw ArgumentError("epsilon must be positive");
  Rng rng(options.seed);
  if (name == "fact1") return Fact1(options, trials, n, rng);
  if (name == "fact6") return Fact6(trials, n, rng);
  if (name == "prop4") return Prop4(options, trials, n, rng);
  if (name == "prop9") return Prop9(options, trials, n, rng);
  if (name == "prop14") return Prop14(trials, n, rng);
  if (name == "cor15") return Cor15(options, trials, n, rng);
  if (name == "ls-ratio") return LsRatio(trials, n, options.epsilon, rng);
  return LsaBound(trials, n, options.epsilon, rng);
}

std::string FormatSuiteReport(const SuiteReport& r) {
  return "suite=" + r.name + " trials=" + std::to_string(r.trials) +
         " failures=" + std::to_string(r.failures) +
         " max_violation=" + FormatNumber(r.max_violation);
}

}  // namespace setmax
