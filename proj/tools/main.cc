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

// setmax: maximize set functions through decomposition and branch and bound.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli.h"
#include "setmax/errors.h"
#include "setmax/instance.h"

namespace {

using setmax::cli::CommandResult;

void AddMaximizeOptions(CLI::App* cmd, setmax::cli::MaximizeFlags& f) {
  cmd->add_option("--mode", f.mode, "exact or approx")
      ->check(CLI::IsMember({"exact", "approx"}));
  cmd->add_option("--fu", f.fu, "upper bound f_u: modular or tight")
      ->check(CLI::IsMember({"modular", "tight"}));
  cmd->add_option("--engine", f.engine, "closed-form, interval or ls")
      ->check(CLI::IsMember({"closed-form", "interval", "ls"}));
  cmd->add_option("--epsilon", f.epsilon, "local search epsilon");
  cmd->add_option("--alpha", f.alpha, "scale alpha, or auto");
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--max-nodes", f.max_nodes, "stop after this many nodes");
  cmd->add_option("--interrupt-depth", f.interrupt_depth,
                  "leave nodes deeper than this open");
  cmd->add_option("--tolerance", f.tolerance, "submodularity tolerance");
  cmd->add_flag("--verify", f.verify, "cross-check with brute force");
  cmd->add_option("--parallel", f.parallel, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--disable-pruning", f.disable_pruning,
                "visit every reachable node");
  cmd->add_flag("!--no-timing", f.timing, "omit wall_time_ms");
}

int Emit(const CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

std::optional<setmax::Instance> Load(const std::string& path, int& code) {
  try {
    return setmax::ParseInstance(setmax::cli::ReadInput(path));
  } catch (const setmax::ArgumentError& e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    code = setmax::cli::kExitUsage;
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate set-function maximization"};
  app.require_subcommand(1);

  std::string path;
  setmax::cli::MaximizeFlags max_flags;
  auto* maximize = app.add_subcommand("maximize", "maximize an instance");
  maximize->add_option("instance", path, "instance file, or - for stdin")
      ->required();
  AddMaximizeOptions(maximize, max_flags);

  std::string alpha = "auto";
  double tolerance = 1e-9;
  auto* decompose =
      app.add_subcommand("decompose", "report the decomposition of theta");
  decompose->add_option("instance", path, "instance file, or - for stdin")
      ->required();
  decompose->add_option("--alpha", alpha, "scale alpha, or auto");
  decompose->add_option("--tolerance", tolerance, "submodularity tolerance");

  std::string suite = "all";
  std::string verify_path;
  setmax::SuiteOptions suite_opts;
  auto* verify = app.add_subcommand("verify", "run randomized property suites");
  verify->add_option("instance", verify_path, "optional instance file");
  verify->add_option("--suite", suite, "suite name, or all");
  verify->add_option("--seed", suite_opts.seed, "random seed");
  verify->add_option("--trials", suite_opts.trials, "trial count");
  verify->add_option("--n", suite_opts.n, "ground set size");
  verify->add_option("--epsilon", suite_opts.epsilon, "local search epsilon");

  setmax::cli::BenchFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "time the solver on random inputs");
  bench->add_option("--kind", bench_flags.kind, "table, modular, coverage, cut")
      ->check(CLI::IsMember({"table", "modular", "coverage", "cut"}));
  bench->add_option("--n", bench_flags.n, "ground set size");
  bench->add_option("--instances", bench_flags.instances, "instance count");
  AddMaximizeOptions(bench, bench_flags.maximize);
  bench->callback(
      [&bench_flags] { bench_flags.seed = bench_flags.maximize.seed; });

  setmax::cli::GenerateFlags gen_flags;
  auto* generate = app.add_subcommand("generate", "print a random instance");
  generate->add_option("--kind", gen_flags.kind, "table, modular, coverage, cut")
      ->check(CLI::IsMember({"table", "modular", "coverage", "cut"}));
  generate->add_option("--n", gen_flags.n, "ground set size");
  generate->add_option("--seed", gen_flags.seed, "random seed");
  generate->add_option("--system", gen_flags.system, "subset system kind")
      ->check(CLI::IsMember(
          {"none", "cardinality", "graph-independence", "explicit"}));
  generate->add_flag("--graph", gen_flags.with_graph,
                     "add a random decomposition graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : setmax::cli::kExitUsage;
  }

  int code = 0;
  if (*maximize) {
    const auto inst = Load(path, code);
    return inst ? Emit(setmax::cli::RunMaximize(*inst, max_flags)) : code;
  }
  if (*decompose) {
    const auto inst = Load(path, code);
    return inst ? Emit(setmax::cli::RunDecompose(*inst, alpha, tolerance))
                : code;
  }
  if (*verify) {
    std::optional<setmax::Instance> inst;
    if (!verify_path.empty()) {
      inst = Load(verify_path, code);
      if (!inst) return code;
      suite_opts.instance = &*inst;
    }
    return Emit(setmax::cli::RunVerify(suite, suite_opts));
  }
  if (*bench) return Emit(setmax::cli::RunBench(bench_flags));
  return Emit(setmax::cli::RunGenerate(gen_flags));
}
