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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <random>
#include <utility>
#include <vector>

#include "setmax/bb.h"
#include "setmax/constrained.h"
#include "setmax/decompose.h"
#include "setmax/errors.h"
#include "setmax/generators.h"

namespace setmax::cli {
namespace {

// Brute-force cross-checks (--verify, bench) run up to this size.
constexpr int kOracleCap = 12;
constexpr int kBenchOracleCap = 16;

FuMode ParseFu(const std::string& s) {
  if (s == "modular") return FuMode::kModular;
  if (s == "tight") return FuMode::kTight;
  throw ArgumentError("--fu must be modular or tight, got '" + s + "'");
}

Engine ParseEngine(const std::string& s) {
  if (s == "closed-form") return Engine::kClosedForm;
  if (s == "interval") return Engine::kInterval;
  if (s == "ls") return Engine::kLocalSearch;
  throw ArgumentError("--engine must be closed-form, interval or ls, got '" +
                      s + "'");
}

BBConfig BuildConfig(const MaximizeFlags& flags) {
  BBConfig cfg;
  if (flags.mode == "exact") {
    cfg.fu_mode = flags.fu ? ParseFu(*flags.fu) : FuMode::kModular;
    cfg.engine = flags.engine ? ParseEngine(*flags.engine)
                 : cfg.fu_mode == FuMode::kModular ? Engine::kClosedForm
                                                   : Engine::kInterval;
    if (cfg.engine == Engine::kLocalSearch) {
      throw ArgumentError("--engine ls needs --mode approx");
    }
  } else if (flags.mode == "approx") {
    cfg.fu_mode = flags.fu ? ParseFu(*flags.fu) : FuMode::kTight;
    cfg.engine = flags.engine ? ParseEngine(*flags.engine)
                              : Engine::kLocalSearch;
    if (cfg.engine != Engine::kLocalSearch) {
      throw ArgumentError("--mode approx needs --engine ls");
    }
    cfg.approx_factor = 4.0;
  } else {
    throw ArgumentError("--mode must be exact or approx, got '" + flags.mode +
                        "'");
  }
  cfg.epsilon = flags.epsilon;
  cfg.node_cap = flags.max_nodes;
  cfg.interrupt_depth = flags.interrupt_depth;
  cfg.threads = flags.parallel;
  cfg.disable_pruning = flags.disable_pruning;
  ValidateConfig(cfg);
  return cfg;
}

double ResolveAlpha(const Instance& inst, const SetFunction& theta,
                    const std::string& spec) {
  if (spec != "auto") {
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(spec, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != spec.size() || !(value > 0) || !std::isfinite(value)) {
      throw ArgumentError("--alpha must be a positive number or 'auto'");
    }
    return value;
  }
  if (inst.n > kPairwiseCap) {
    return RoundUpToPowerOfTwo(DefaultAlpha(theta.bound()));
  }
  if (!inst.graph) {
    return RoundUpToPowerOfTwo(MinAlpha(theta, GroundSet(inst.n)));
  }
  const auto alpha = MinAlphaForGraph(theta, *inst.graph);
  if (!alpha) {
    throw DecompositionError(
        "theta has no decomposition over the given graph: some pair with a "
        "positive modularity gap has no crossing edge");
  }
  return RoundUpToPowerOfTwo(*alpha);
}

bool Constrained(const Instance& inst) {
  return inst.system && inst.system->kind() != SubsetSystem::Kind::kAll;
}

struct Outcome {
  SetFunction theta;
  std::optional<Decomposition> dec;
  BBResult result;
  double millis = 0.0;
};

Outcome Solve(const Instance& inst, const MaximizeFlags& flags) {
  const BBConfig cfg = BuildConfig(flags);
  Outcome out{inst.Theta(), std::nullopt, {}, 0.0};
  const double alpha = ResolveAlpha(inst, out.theta, flags.alpha);
  DecomposeOptions options;
  options.tolerance = flags.tolerance;
  out.dec = Decompose(out.theta, alpha, inst.DecompositionGraph(), options);
  const auto start = std::chrono::steady_clock::now();
  out.result = Constrained(inst) ? BBCMaximize(*out.dec, *inst.system, cfg)
                                 : BBMaximize(*out.dec, cfg);
  out.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

Scored Oracle(const Instance& inst, const SetFunction& theta) {
  if (Constrained(inst)) {
    const SubsetSystem& sys = *inst.system;
    return BruteForceArgmaxWhere(
        theta, [&sys](const Subset& s) { return sys.Contains(s); });
  }
  return BruteForceArgmax(theta, GroundSet(inst.n));
}

std::string FormatMillis(double ms) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << ms;
  return s.str();
}

// Runs body, mapping library errors to exit code 2.
template <typename Fn>
CommandResult Guard(Fn&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::length_error& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const DecompositionError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ContractError& e) {
    return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace

CommandResult RunMaximize(const Instance& inst, const MaximizeFlags& flags) {
  return Guard([&]() -> CommandResult {
    const Outcome o = Solve(inst, flags);
    const BBResult& r = o.result;
    std::ostringstream out;
    out << "best_set=" << FormatSubsetList(r.best) << '\n';
    out << "best_value=" << FormatNumber(o.theta.Evaluate(r.best)) << '\n';
    out << "alpha=" << FormatNumber(o.dec->alpha()) << '\n';
    out << "nodes_visited=" << r.stats.nodes_visited << '\n';
    out << "nodes_pruned=" << r.stats.nodes_pruned << '\n';
    out << "nodes_fathomed=" << r.stats.nodes_fathomed << '\n';
    if (!r.complete) {
      out << "gap_bound="
          << (r.gap.valid ? FormatNumber(o.dec->ToThetaUnits(r.gap.bound))
                          : std::string("inf"))
          << '\n';
    }
    if (flags.verify) {
      if (inst.n <= kOracleCap) {
        const Scored oracle = Oracle(inst, o.theta);
        out << "oracle_match=" << (oracle.set == r.best ? "true" : "false")
            << '\n';
      } else {
        out << "oracle_match=skipped\n";
      }
    }
    if (flags.timing) out << "wall_time_ms=" << FormatMillis(o.millis) << '\n';
    return {r.complete ? kExitOk : kExitInterrupted, out.str(), ""};
  });
}

CommandResult RunDecompose(const Instance& inst, const std::string& alpha,
                           double tolerance) {
  return Guard([&]() -> CommandResult {
    const SetFunction theta = inst.Theta();
    const double a = ResolveAlpha(inst, theta, alpha);
    DecomposeOptions options;
    options.tolerance = tolerance;
    options.validate = false;
    const Decomposition dec =
        Decompose(theta, a, inst.DecompositionGraph(), options);
    std::ostringstream out;
    out << "n=" << inst.n << '\n';
    out << "graph_edges=" << dec.graph().edge_count() << '\n';
    out << "alpha=" << FormatNumber(a) << '\n';
    out << "shift=" << FormatNumber(dec.shift()) << '\n';
    int code = kExitOk;
    if (inst.n <= kPairwiseCap) {
      const GroundSet ground(inst.n);
      out << "modularity_gap=" << FormatNumber(ModularityGap(theta, ground))
          << '\n';
      if (inst.graph) {
        const auto min_alpha = MinAlphaForGraph(theta, *inst.graph);
        out << "min_alpha="
            << (min_alpha ? FormatNumber(*min_alpha) : std::string("none"))
            << '\n';
      } else {
        out << "min_alpha=" << FormatNumber(MinAlpha(theta, ground)) << '\n';
      }
      const PairExcess worst = MaxSubmodularViolation(dec.f());
      const bool ok = worst.excess <= tolerance;
      out << "f_submodular=" << (ok ? "true" : "false") << '\n';
      if (!ok) {
        out << "violating_pair=" << FormatSubsetList(worst.a) << ','
            << FormatSubsetList(worst.b) << '\n';
        out << "violation=" << FormatNumber(worst.excess) << '\n';
        code = 1;
      }
    }
    return {code, out.str(), ""};
  });
}

CommandResult RunVerify(const std::string& suite, const SuiteOptions& options) {
  if (suite != "all" && !IsSuiteName(suite)) {
    std::string known;
    for (const auto& name : SuiteNames()) known += " " + name;
    return {kExitUsage, "",
            "error: unknown suite '" + suite + "'; known:" + known + " all\n"};
  }
  return Guard([&]() -> CommandResult {
    std::vector<std::string> names =
        suite == "all" ? SuiteNames() : std::vector<std::string>{suite};
    std::ostringstream out;
    int code = kExitOk;
    for (const auto& name : names) {
      const SuiteReport r = RunSuite(name, options);
      out << FormatSuiteReport(r) << '\n';
      if (r.failures > 0) code = 1;
    }
    return {code, out.str(), ""};
  });
}

Instance GenerateInstance(const GenerateFlags& flags) {
  if (flags.n < 1 || flags.n > kMaxElements) {
    throw ArgumentError("--n must be in 1.." + std::to_string(kMaxElements));
  }
  Rng rng(flags.seed);
  const int n = flags.n;
  auto rounded = [&rng](double lo, double hi) {
    const double x = std::uniform_real_distribution<double>(lo, hi)(rng);
    return std::round(x * 1000.0) / 1000.0;
  };
  Instance inst;
  inst.n = n;
  if (flags.kind == "table") {
    if (n > 20) throw ArgumentError("table instances need n <= 20");
    inst.kind = ThetaKind::kTable;
    inst.table.resize(std::size_t{1} << n);
    for (double& v : inst.table) v = rounded(-1.0, 1.0);
  } else if (flags.kind == "modular") {
    inst.kind = ThetaKind::kModular;
    for (int i = 0; i < n; ++i) inst.weights.push_back(rounded(-1.0, 1.0));
  } else if (flags.kind == "coverage") {
    inst.kind = ThetaKind::kCoverage;
    inst.covers = RandomCoverFamily(n, n, rng);
  } else if (flags.kind == "cut") {
    inst.kind = ThetaKind::kCut;
    inst.graph = RandomGraph(n, 0.5, rng);
  } else {
    throw ArgumentError("--kind must be table, modular, coverage or cut");
  }
  if (flags.with_graph && !inst.graph) inst.graph = RandomGraph(n, 0.5, rng);
  if (flags.system == "cardinality") {
    inst.system = SubsetSystem::Cardinality(
        n, std::uniform_int_distribution<int>(1, std::max(1, n - 1))(rng));
  } else if (flags.system == "graph-independence") {
    inst.system = SubsetSystem::GraphIndependence(RandomGraph(n, 0.5, rng));
  } else if (flags.system == "explicit") {
    inst.system = RandomExplicitSystem(n, rng);
  } else if (flags.system != "none") {
    throw ArgumentError(
        "--system must be none, cardinality, graph-independence or explicit");
  }
  return inst;
}

CommandResult RunGenerate(const GenerateFlags& flags) {
  return Guard([&]() -> CommandResult {
    return {kExitOk, SerializeInstance(GenerateInstance(flags)), ""};
  });
}

CommandResult RunBench(const BenchFlags& flags) {
  return Guard([&]() -> CommandResult {
    if (flags.instances < 1) throw ArgumentError("--instances must be >= 1");
    int64_t total_nodes = 0;
    int64_t max_nodes = 0;
    int mismatches = 0;
    int interrupted = 0;
    double millis = 0.0;
    const bool check = flags.n <= kBenchOracleCap;
    for (int i = 0; i < flags.instances; ++i) {
      GenerateFlags g;
      g.kind = flags.kind;
      g.n = flags.n;
      g.seed = flags.seed + static_cast<uint64_t>(i);
      const Instance inst = GenerateInstance(g);
      const Outcome o = Solve(inst, flags.maximize);
      total_nodes += o.result.stats.nodes_visited;
      max_nodes = std::max(max_nodes, o.result.stats.nodes_visited);
      millis += o.millis;
      if (!o.result.complete) ++interrupted;
      if (check && Oracle(inst, o.theta).set != o.result.best) ++mismatches;
    }
    std::ostringstream out;
    out << "kind=" << flags.kind << '\n';
    out << "n=" << flags.n << '\n';
    out << "instances=" << flags.instances << '\n';
    out << "nodes_visited_mean="
        << FormatNumber(static_cast<double>(total_nodes) / flags.instances)
        << '\n';
    out << "nodes_visited_max=" << max_nodes << '\n';
    out << "interrupted=" << interrupted << '\n';
    out << "mismatches=" << (check ? std::to_string(mismatches) : "skipped")
        << '\n';
    if (flags.maximize.timing) {
      out << "wall_time_ms=" << FormatMillis(millis) << '\n';
    }
    return {mismatches == 0 ? kExitOk : 1, out.str(), ""};
  });
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace setmax::cli
