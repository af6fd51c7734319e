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

#include "setmax/generators.h"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "setmax/errors.h"

namespace setmax {
namespace {

double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void CheckTableSize(int n) {
  if (n < 0 || n > kBruteForceCap) {
    throw CapacityError("random tables need n <= " +
                        std::to_string(kBruteForceCap));
  }
}

SetFunction Tabulated(const SetFunction& fn) {
  return SetFunction::Table(fn.size(), fn.Tabulate());
}

}  // namespace

SetFunction RandomTable(int n, Rng& rng) {
  CheckTableSize(n);
  std::vector<double> values(std::size_t{1} << n);
  for (double& v : values) v = Uniform(rng, -1.0, 1.0);
  return SetFunction::Table(n, std::move(values));
}

SetFunction RandomNonNegativeTable(int n, Rng& rng) {
  CheckTableSize(n);
  std::vector<double> values(std::size_t{1} << n);
  for (double& v : values) v = Uniform(rng, 0.0, 1.0);
  values[0] = 0.0;
  return SetFunction::Table(n, std::move(values));
}

Graph RandomGraph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (Coin(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

CoverFamily RandomCoverFamily(int n, int items, Rng& rng) {
  CoverFamily covers(n);
  for (auto& c : covers) {
    for (int item = 0; item < items; ++item) {
      if (Coin(rng, 0.5)) c.push_back(item);
    }
  }
  return covers;
}

SetFunction CoverageFunction(int n, const CoverFamily& covers) {
  if (static_cast<int>(covers.size()) != n) {
    throw ArgumentError("cover family size does not match n");
  }
  // Items are renumbered densely so a cover fits a bit vector.
  std::vector<int> ids;
  for (const auto& c : covers) ids.insert(ids.end(), c.begin(), c.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const int words = static_cast<int>((ids.size() + 63) / 64);
  std::vector<std::vector<uint64_t>> masks(n, std::vector<uint64_t>(words));
  for (int i = 0; i < n; ++i) {
    for (int item : covers[i]) {
      if (item < 0) throw ArgumentError("cover items must be non-negative");
      const auto pos = std::lower_bound(ids.begin(), ids.end(), item) -
                       ids.begin();
      masks[i][pos / 64] |= uint64_t{1} << (pos % 64);
    }
  }
  return SetFunction(
      n,
      [masks, words](const Subset& s) {
        std::vector<uint64_t> acc(words, 0);
        for (int v : s.Elements()) {
          for (int w = 0; w < words; ++w) acc[w] |= masks[v][w];
        }
        int total = 0;
        for (uint64_t w : acc) total += std::popcount(w);
        return static_cast<double>(total);
      },
      static_cast<double>(ids.size()) + 1.0, true);
}

SetFunction RandomSubmodular(int n, Rng& rng) {
  CheckTableSize(n);
  const SetFunction cut = CutFunction(RandomGraph(n, 0.5, rng));
  const SetFunction cover =
      CoverageFunction(n, RandomCoverFamily(n, UniformInt(rng, 1, n), rng));
  std::vector<double> weights(n);
  for (double& w : weights) w = Uniform(rng, 0.0, 1.0);
  return Tabulated(Add(Add(cut, cover), SetFunction::Modular(weights)));
}

SetFunction RandomSignedSubmodular(int n, Rng& rng) {
  CheckTableSize(n);
  const SetFunction base = RandomSubmodular(n, rng);
  std::vector<double> weights(n);
  for (double& w : weights) w = Uniform(rng, -2.0, 2.0);
  return Tabulated(Add(base, SetFunction::Modular(weights)));
}

DecomposedTheta RandomDecomposedTheta(int n, Rng& rng) {
  const SetFunction f = RandomSignedSubmodular(n, rng);
  Graph g = RandomGraph(n, 0.5, rng);
  std::vector<double> excess(n, 0.0);
  for (int v = 0; v < n; ++v) {
    excess[v] = std::max(0.0, f(Subset::Singleton(n, v)) - Degree(g, v));
  }
  const SetFunction theta = SetFunction::Table(
      n, Subtract(Subtract(f, SetFunction::Modular(excess)), CutFunction(g))
             .Tabulate());
  return {theta, std::move(g)};
}

SubsetSystem RandomSubsetSystem(int n, Rng& rng) {
  switch (UniformInt(rng, 0, 2)) {
    case 0:
      return SubsetSystem::Cardinality(n, UniformInt(rng, 1, std::max(1, n - 1)));
    case 1:
      return SubsetSystem::GraphIndependence(RandomGraph(n, 0.5, rng));
    default:
      return RandomExplicitSystem(n, rng);
  }
}

SubsetSystem RandomExplicitSystem(int n, Rng& rng) {
  std::vector<Subset> drawn;
  const int count = UniformInt(rng, 1, 4);
  for (int i = 0; i < count; ++i) {
    Subset s = Subset::Empty(n);
    for (int v = 0; v < n; ++v) {
      if (Coin(rng, 0.4)) s = s.with(v);
    }
    drawn.push_back(s);
  }
  // Cover every element so all singletons are members.
  for (int v = 0; v < n; ++v) {
    bool covered = false;
    for (const Subset& s : drawn) covered = covered || s.contains(v);
    if (!covered) drawn.push_back(Subset::Singleton(n, v));
  }
  std::sort(drawn.begin(), drawn.end());
  drawn.erase(std::unique(drawn.begin(), drawn.end()), drawn.end());
  std::vector<Subset> maximal;
  for (const Subset& s : drawn) {
    bool dominated = false;
    for (const Subset& t : drawn) {
      if (!(s == t) && s.IsSubsetOf(t)) dominated = true;
    }
    if (!dominated && !s.empty()) maximal.push_back(s);
  }
  return SubsetSystem::ExplicitMaximal(n, std::move(maximal));
}

SetFunction RandomSupermodularPenalty(int n, Rng& rng) {
  struct Term {
    uint64_t mask;
    int k;
    double c;
  };
  std::vector<Term> terms;
  const int count = UniformInt(rng, 1, 4);
  for (int i = 0; i < count; ++i) {
    uint64_t mask = 0;
    for (int v = 0; v < n; ++v) {
      if (Coin(rng, 0.5)) mask |= uint64_t{1} << v;
    }
    terms.push_back({mask, UniformInt(rng, 0, std::max(0, n / 2)),
                     Uniform(rng, 0.5, 2.0)});
  }
  double bound = 1.0;
  for (const Term& t : terms) bound += t.c * n;
  return SetFunction(
      n,
      [terms](const Subset& s) {
        double total = 0.0;
        for (const Term& t : terms) {
          const int over = std::popcount(s.bits() & t.mask) - t.k;
          if (over > 0) total += t.c * over;
        }
        return total;
      },
      bound, true);
}

}  // namespace setmax
