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

#ifndef SETMAX_INSTANCE_H_
#define SETMAX_INSTANCE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setmax/constrained.h"
#include "setmax/errors.h"
#include "setmax/generators.h"
#include "setmax/graph.h"
#include "setmax/ground.h"

namespace setmax {

// Instance files are line oriented; '#' starts a comment.
//
//   n=<int>
//   theta=table|cut|coverage|modular
//   set <n binary digits, element n first> <value>   (table, all 2^n once)
//   weights <w1> ... <wn>                             (modular)
//   cover <element> <item> <item> ...                 (coverage, each once)
//   graph:                                            (then "<i> <j>" edges)
//   system=none|cardinality <k>|graph-independence|explicit
//
// graph-independence is followed by its own "<i> <j>" edge lines and explicit
// by maximal sets, one per line as 1-based elements. Elements are 1-based
// everywhere. The graph section is the decomposition graph (K_n if absent) and
// is also the graph whose cut is theta when theta=cut.
enum class ThetaKind { kTable, kCut, kCoverage, kModular };

class ParseError : public ArgumentError {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct Instance {
  int n = 0;
  ThetaKind kind = ThetaKind::kTable;
  std::vector<double> table;    // kTable, indexed by subset bits
  std::vector<double> weights;  // kModular
  CoverFamily covers;           // kCoverage
  std::optional<Graph> graph;
  std::optional<SubsetSystem> system;  // absent means no constraint

  SetFunction Theta() const;
  // graph, or K_n when the file has no graph section.
  Graph DecompositionGraph() const;
};

// Throws ParseError naming the offending line.
Instance ParseInstance(std::string_view text);

// Canonical text. Parsing a canonical file and serializing it again gives the
// same bytes.
std::string SerializeInstance(const Instance& instance);

std::string ToString(ThetaKind kind);

// Shortest decimal text that reads back to the same double.
std::string FormatNumber(double value);

// "[1,3]" with 1-based sorted elements.
std::string FormatSubsetList(const Subset& s);

}  // namespace setmax

#endif  // SETMAX_INSTANCE_H_
