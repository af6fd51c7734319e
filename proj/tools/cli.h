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

#ifndef SETMAX_TOOLS_CLI_H_
#define SETMAX_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <string>

#include "setmax/instance.h"
#include "setmax/verify.h"

namespace setmax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInterrupted = 3;

// Text for stdout and stderr plus the process exit code.
struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

struct MaximizeFlags {
  std::string mode = "exact";  // exact | approx
  std::optional<std::string> fu;      // modular | tight
  std::optional<std::string> engine;  // closed-form | interval | ls
  double epsilon = 1.0;
  std::string alpha = "auto";
  uint64_t seed = 1;
  std::optional<int64_t> max_nodes;
  std::optional<int> interrupt_depth;
  double tolerance = 1e-9;
  bool verify = false;
  int parallel = 1;
  bool disable_pruning = false;
  bool timing = true;
};

// Report lines, in order: best_set, best_value, alpha, nodes_visited,
// nodes_pruned, nodes_fathomed, gap_bound (interrupted runs), oracle_match
// (--verify), wall_time_ms. Instances with a subset system use the
// constrained search.
CommandResult RunMaximize(const Instance& instance, const MaximizeFlags& flags);

CommandResult RunDecompose(const Instance& instance, const std::string& alpha,
                           double tolerance);

// One report line per suite; "all" runs every suite. Exit code 1 if any trial
// failed.
CommandResult RunVerify(const std::string& suite, const SuiteOptions& options);

struct BenchFlags {
  std::string kind = "table";  // table | coverage | cut | modular
  int n = 10;
  int instances = 10;
  uint64_t seed = 1;
  MaximizeFlags maximize;
};

CommandResult RunBench(const BenchFlags& flags);

struct GenerateFlags {
  std::string kind = "table";
  int n = 6;
  uint64_t seed = 1;
  std::string system = "none";  // none | cardinality | graph-independence |
                                // explicit
  bool with_graph = false;      // emit a G(n, 1/2) graph section
};

// Canonical instance text drawn from the seeded generators.
CommandResult RunGenerate(const GenerateFlags& flags);
Instance GenerateInstance(const GenerateFlags& flags);

// Reads a file, or stdin for "-".
std::string ReadInput(const std::string& path);

}  // namespace setmax::cli

#endif  // SETMAX_TOOLS_CLI_H_
