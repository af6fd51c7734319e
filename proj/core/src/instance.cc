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

#include "setmax/instance.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace setmax {
namespace {

// Largest n accepted for table instances (2^n records).
constexpr int kTableCap = 20;

enum class Section { kBody, kGraph, kSystemEdges, kSystemSets };

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Instance Run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos, end - pos);
      ++line_;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto tokens = Tokens(line);
      if (!tokens.empty()) Handle(tokens);
      pos = end + 1;
    }
    return Finish();
  }

 private:
  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(line_, message);
  }

  long ParseInt(std::string_view token) const {
    long value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      Fail("expected an integer, got '" + std::string(token) + "'");
    }
    return value;
  }

  double ParseDouble(std::string_view token) const {
    double value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        !std::isfinite(value)) {
      Fail("expected a finite number, got '" + std::string(token) + "'");
    }
    return value;
  }

  int ParseElement(std::string_view token) const {
    const long v = ParseInt(token);
    if (v < 1 || v > inst_.n) {
      Fail("element " + std::string(token) + " outside 1.." +
           std::to_string(inst_.n));
    }
    return static_cast<int>(v - 1);
  }

  void RequireHeader() const {
    if (inst_.n == 0) Fail("expected 'n=<int>' first");
    if (!have_theta_) Fail("expected 'theta=<kind>' before the body");
  }

  void Handle(const std::vector<std::string_view>& t) {
    const std::string_view head = t[0];
    if (head.starts_with("n=")) {
      if (inst_.n != 0) Fail("duplicate 'n=' line");
      if (t.size() != 1) Fail("trailing tokens after 'n='");
      const long n = ParseInt(head.substr(2));
      if (n < 1 || n > kMaxElements) {
        Fail("n must be in 1.." + std::to_string(kMaxElements));
      }
      inst_.n = static_cast<int>(n);
      return;
    }
    if (head.starts_with("theta=")) {
      if (inst_.n == 0) Fail("expected 'n=<int>' first");
      if (have_theta_) Fail("duplicate 'theta=' line");
      if (t.size() != 1) Fail("trailing tokens after 'theta='");
      const std::string_view kind = head.substr(6);
      if (kind == "table") {
        if (inst_.n > kTableCap) {
          Fail("table instances need n <= " + std::to_string(kTableCap));
        }
        inst_.kind = ThetaKind::kTable;
        inst_.table.assign(std::size_t{1} << inst_.n, 0.0);
        seen_.assign(inst_.table.size(), false);
      } else if (kind == "cut") {
        inst_.kind = ThetaKind::kCut;
      } else if (kind == "coverage") {
        inst_.kind = ThetaKind::kCoverage;
        inst_.covers.assign(inst_.n, {});
        seen_.assign(inst_.n, false);
      } else if (kind == "modular") {
        inst_.kind = ThetaKind::kModular;
      } else {
        Fail("unknown theta kind '" + std::string(kind) + "'");
      }
      have_theta_ = true;
      return;
    }
    RequireHeader();
    if (head == "graph:") {
      if (t.size() != 1) Fail("trailing tokens after 'graph:'");
      if (graph_line_ != 0) Fail("duplicate 'graph:' section");
      graph_line_ = line_;
      section_ = Section::kGraph;
      return;
    }
    if (head.starts_with("system=")) {
      HandleSystem(head.substr(7), t);
      return;
    }
    if (head == "set") {
      if (section_ == Section::kSystemSets) Fail("unexpected 'set' record");
      HandleSet(t);
      return;
    }
    if (head == "weights") {
      if (inst_.kind != ThetaKind::kModular) {
        Fail("'weights' needs theta=modular");
      }
      if (!inst_.weights.empty()) Fail("duplicate 'weights' line");
      if (static_cast<int>(t.size()) != inst_.n + 1) {
        Fail("expected " + std::to_string(inst_.n) + " weights");
      }
      for (std::size_t i = 1; i < t.size(); ++i) {
        inst_.weights.push_back(ParseDouble(t[i]));
      }
      return;
    }
    if (head == "cover") {
      if (inst_.kind != ThetaKind::kCoverage) {
        Fail("'cover' needs theta=coverage");
      }
      if (t.size() < 2) Fail("expected 'cover <element> <items...>'");
      const int e = ParseElement(t[1]);
      if (seen_[e]) Fail("duplicate cover record for element " +
                         std::string(t[1]));
      seen_[e] = true;
      for (std::size_t i = 2; i < t.size(); ++i) {
        const long item = ParseInt(t[i]);
        if (item < 0) Fail("cover items must be non-negative");
        inst_.covers[e].push_back(static_cast<int>(item));
      }
      return;
    }
    switch (section_) {
      case Section::kGraph:
        AddEdge(t, edges_, edge_set_);
        return;
      case Section::kSystemEdges:
        AddEdge(t, system_edges_, system_edge_set_);
        return;
      case Section::kSystemSets: {
        Subset s = Subset::Empty(inst_.n);
        for (std::string_view tok : t) {
          const int e = ParseElement(tok);
          if (s.contains(e)) Fail("repeated element in maximal set");
          s = s.with(e);
        }
        for (const auto& [other, line] : maximal_) {
          if (s.IsSubsetOf(other) || other.IsSubsetOf(s)) {
            Fail("maximal sets " + s.ToString() + " and " + other.ToString() +
                 " (line " + std::to_string(line) +
                 ") are nested; list only maximal sets");
          }
        }
        maximal_.emplace_back(s, line_);
        return;
      }
      case Section::kBody:
        break;
    }
    Fail("unrecognized line starting with '" + std::string(head) + "'");
  }

  void HandleSet(const std::vector<std::string_view>& t) {
    if (inst_.kind != ThetaKind::kTable) Fail("'set' needs theta=table");
    if (t.size() != 3) Fail("expected 'set <bits> <value>'");
    const std::string_view bits = t[1];
    if (static_cast<int>(bits.size()) != inst_.n) {
      Fail("subset '" + std::string(bits) + "' must have " +
           std::to_string(inst_.n) + " binary digits");
    }
    uint64_t mask = 0;
    for (char c : bits) {
      if (c != '0' && c != '1') Fail("subset digits must be 0 or 1");
      mask = (mask << 1) | static_cast<uint64_t>(c - '0');
    }
    if (seen_[mask]) Fail("duplicate record for subset " + std::string(bits));
    seen_[mask] = true;
    inst_.table[mask] = ParseDouble(t[2]);
  }

  void HandleSystem(std::string_view kind,
                    const std::vector<std::string_view>& t) {
    if (system_line_ != 0) Fail("duplicate 'system=' line");
    system_line_ = line_;
    section_ = Section::kBody;
    if (kind == "none") {
      if (t.size() != 1) Fail("trailing tokens after 'system=none'");
      system_kind_ = 0;
    } else if (kind == "cardinality") {
      if (t.size() != 2) Fail("expected 'system=cardinality <k>'");
      const long k = ParseInt(t[1]);
      if (k < 0 || k > inst_.n) Fail("cardinality must be in 0..n");
      system_kind_ = 1;
      cardinality_ = static_cast<int>(k);
    } else if (kind == "graph-independence") {
      if (t.size() != 1) Fail("trailing tokens after system kind");
      system_kind_ = 2;
      section_ = Section::kSystemEdges;
    } else if (kind == "explicit") {
      if (t.size() != 1) Fail("trailing tokens after system kind");
      system_kind_ = 3;
      section_ = Section::kSystemSets;
    } else {
      Fail("unknown system kind '" + std::string(kind) + "'");
    }
  }

  void AddEdge(const std::vector<std::string_view>& t, std::vector<Edge>& out,
               std::set<Edge>& seen) {
    if (t.size() != 2) Fail("expected an edge '<i> <j>'");
    const int u = ParseElement(t[0]);
    const int v = ParseElement(t[1]);
    if (u == v) Fail("self-loop at vertex " + std::string(t[0]));
    const Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) {
      Fail("edge " + std::to_string(e.first + 1) + " " +
           std::to_string(e.second + 1) + " listed twice");
    }
    out.push_back(e);
  }

  Instance Finish() {
    if (inst_.n == 0) Fail("missing 'n=' line");
    if (!have_theta_) Fail("missing 'theta=' line");
    switch (inst_.kind) {
      case ThetaKind::kTable:
        for (std::size_t m = 0; m < seen_.size(); ++m) {
          if (!seen_[m]) {
            std::string bits(inst_.n, '0');
            for (int i = 0; i < inst_.n; ++i) {
              if ((m >> i) & 1u) bits[inst_.n - 1 - i] = '1';
            }
            Fail("missing record for subset " + bits);
          }
        }
        break;
      case ThetaKind::kCut:
        if (graph_line_ == 0) Fail("theta=cut needs a 'graph:' section");
        break;
      case ThetaKind::kCoverage:
        for (int e = 0; e < inst_.n; ++e) {
          if (!seen_[e]) {
            Fail("missing cover record for element " + std::to_string(e + 1));
          }
        }
        break;
      case ThetaKind::kModular:
        if (inst_.weights.empty()) Fail("missing 'weights' line");
        break;
    }
    if (graph_line_ != 0) inst_.graph = Graph::FromEdges(inst_.n, edges_);
    switch (system_kind_) {
      case 1:
        inst_.system = SubsetSystem::Cardinality(inst_.n, cardinality_);
        break;
      case 2:
        inst_.system = SubsetSystem::GraphIndependence(
            Graph::FromEdges(inst_.n, system_edges_));
        break;
      case 3: {
        std::vector<Subset> sets;
        for (const auto& [s, line] : maximal_) sets.push_back(s);
        inst_.system = SubsetSystem::ExplicitMaximal(inst_.n, std::move(sets));
        break;
      }
      default:
        break;
    }
    return std::move(inst_);
  }

  std::string_view text_;
  int line_ = 0;
  Instance inst_;
  bool have_theta_ = false;
  std::vector<bool> seen_;
  Section section_ = Section::kBody;
  int graph_line_ = 0;
  int system_line_ = 0;
  int system_kind_ = 0;
  int cardinality_ = 0;
  std::vector<Edge> edges_;
  std::set<Edge> edge_set_;
  std::vector<Edge> system_edges_;
  std::set<Edge> system_edge_set_;
  std::vector<std::pair<Subset, int>> maximal_;
};

void AppendEdges(std::ostringstream& out, const Graph& g) {
  for (const auto& [u, v] : g.Edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : ArgumentError("line " + std::to_string(line) + ": " + message),
      line_(line) {}

SetFunction Instance::Theta() const {
  switch (kind) {
    case ThetaKind::kTable:
      return SetFunction::Table(n, table);
    case ThetaKind::kCut:
      return CutFunction(graph.value());
    case ThetaKind::kCoverage:
      return CoverageFunction(n, covers);
    case ThetaKind::kModular:
      return SetFunction::Modular(weights);
  }
  throw ArgumentError("unknown theta kind");
}

Graph Instance::DecompositionGraph() const {
  return graph ? *graph : Graph::Complete(n);
}

Instance ParseInstance(std::string_view text) { return Parser(text).Run(); }

std::string SerializeInstance(const Instance& inst) {
  std::ostringstream out;
  out << "n=" << inst.n << '\n';
  out << "theta=" << ToString(inst.kind) << '\n';
  switch (inst.kind) {
    case ThetaKind::kTable:
      for (std::size_t m = 0; m < inst.table.size(); ++m) {
        std::string bits(inst.n, '0');
        for (int i = 0; i < inst.n; ++i) {
          if ((m >> i) & 1u) bits[inst.n - 1 - i] = '1';
        }
        out << "set " << bits << ' ' << FormatNumber(inst.table[m]) << '\n';
      }
      break;
    case ThetaKind::kModular:
      out << "weights";
      for (double w : inst.weights) out << ' ' << FormatNumber(w);
      out << '\n';
      break;
    case ThetaKind::kCoverage:
      for (int e = 0; e < inst.n; ++e) {
        out << "cover " << e + 1;
        for (int item : inst.covers[e]) out << ' ' << item;
        out << '\n';
      }
      break;
    case ThetaKind::kCut:
      break;
  }
  if (inst.graph) {
    out << "graph:\n";
    AppendEdges(out, *inst.graph);
  }
  if (inst.system) {
    const SubsetSystem& sys = *inst.system;
    switch (sys.kind()) {
      case SubsetSystem::Kind::kAll:
        out << "system=none\n";
        break;
      case SubsetSystem::Kind::kCardinality:
        out << "system=cardinality " << sys.cardinality() << '\n';
        break;
      case SubsetSystem::Kind::kGraphIndependence:
        out << "system=graph-independence\n";
        AppendEdges(out, sys.graph());
        break;
      case SubsetSystem::Kind::kExplicitMaximal:
        out << "system=explicit\n";
        for (const Subset& s : sys.maximal_sets()) {
          const auto elems = s.Elements();
          for (std::size_t i = 0; i < elems.size(); ++i) {
            out << (i ? " " : "") << elems[i] + 1;
          }
          out << '\n';
        }
        break;
      case SubsetSystem::Kind::kCustom:
        throw ArgumentError("custom subset systems cannot be serialized");
    }
  }
  return out.str();
}

std::string ToString(ThetaKind kind) {
  switch (kind) {
    case ThetaKind::kTable:
      return "table";
    case ThetaKind::kCut:
      return "cut";
    case ThetaKind::kCoverage:
      return "coverage";
    case ThetaKind::kModular:
      return "modular";
  }
  return "table";
}

std::string FormatNumber(double value) {
  if (value == 0) value = 0;  // print -0 as 0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string FormatSubsetList(const Subset& s) {
  std::string out = "[";
  const auto elems = s.Elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i] + 1);
  }
  return out + "]";
}

}  // namespace setmax
