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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "setmax/errors.h"

namespace setmax {
namespace {

void CheckInterval(const SetFunction& g, const Interval& iv) {
  if (iv.lo.width() != g.size() || iv.hi.width() != g.size()) {
    throw ArgumentError("interval width does not match set function");
  }
  if (!iv.lo.IsSubsetOf(iv.hi)) {
    throw ArgumentError("interval lower end is not contained in upper end");
  }
}

}  // namespace

Scored MaximizeModular(std::span<const double> weights, const Subset& domain) {
  if (static_cast<int>(weights.size()) != domain.width()) {
    throw ArgumentError("weight count does not match domain width");
  }
  Scored out{Subset::Empty(domain.width()), 0.0};
  for (int v : domain.Elements()) {
    if (weights[v] >= 0) {
      out.set = out.set.with(v);
      out.value += weights[v];
    }
  }
  return out;
}

PreservationVerdict PreservationCheck(const SetFunction& g, const Interval& iv,
                                      int v) {
  CheckInterval(g, iv);
  if (!iv.hi.contains(v) || iv.lo.contains(v)) {
    throw ArgumentError("element " + std::to_string(v + 1) +
                        " is not free in the interval");
  }
  PreservationVerdict out;
  out.prune_upper = g(iv.lo) - g(iv.lo.with(v)) >= 0;
  out.prune_lower = g(iv.hi) - g(iv.hi.without(v)) >= 0;
  return out;
}

Scored IntervalMax(const SetFunction& g, const Interval& iv,
                   const Feasibility& feasible, IntervalMaxStats* stats) {
  CheckInterval(g, iv);
  const int n = g.size();
  IntervalMaxStats local;
  auto eval = [&](const Subset& s) {
    ++local.evaluations;
    return g.EvaluateUnchecked(s);
  };
  const bool constrained = static_cast<bool>(feasible);

  Scored best{Subset::Empty(n), -std::numeric_limits<double>::infinity()};
  bool have_best = false;
  auto offer = [&](const Subset& s, double value) {
    if (!have_best || Beats(value, s, best.value, best.set)) {
      best = {s, value};
      have_best = true;
    }
  };

  std::vector<Interval> stack{iv};
  while (!stack.empty()) {
    Interval cur = stack.back();
    stack.pop_back();
    ++local.intervals;
    if (constrained && !feasible(cur.lo)) continue;

    // Shrink to a fixpoint of the preservation rules.
    double g_lo = eval(cur.lo);
    double g_hi = eval(cur.hi);
    std::vector<double> gain(n, 0.0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v : (cur.hi - cur.lo).Elements()) {
        const Subset up = cur.lo.with(v);
        if (constrained && !feasible(up)) {
          cur.hi = cur.hi.without(v);
          g_hi = eval(cur.hi);
          changed = true;
          continue;
        }
        const double g_up = eval(up);
        if (g_lo - g_up >= 0) {
          // Every S containing v has g(S - v) >= g(S), and S - v is smaller.
          cur.hi = cur.hi.without(v);
          g_hi = eval(cur.hi);
          changed = true;
          continue;
        }
        gain[v] = g_up - g_lo;
        if (!constrained && g_hi - eval(cur.hi.without(v)) > 0) {
          // Strict: on a tie the set without v would be the preferred one.
          cur.lo = up;
          g_lo = g_up;
          changed = true;
        }
      }
    }

    offer(cur.lo, g_lo);
    if (!constrained || feasible(cur.hi)) offer(cur.hi, g_hi);
    const Subset free = cur.hi - cur.lo;
    if (free.empty()) continue;

    // Submodularity: no set in the interval exceeds g(lo) plus the positive
    // marginal gains at lo.
    double upper = g_lo;
    int split = -1;
    double widest = -1.0;
    for (int v : free.Elements()) {
      upper += gain[v];
      if (std::abs(gain[v]) > widest) {
        widest = std::abs(gain[v]);
        split = v;
      }
    }
    if (upper < best.value ||
        (upper == best.value && best.set.bits() <= cur.lo.bits())) {
      continue;
    }
    stack.push_back({cur.lo, cur.hi.without(split)});
    stack.push_back({cur.lo.with(split), cur.hi});
  }

  if (!have_best || (constrained && !feasible(best.set))) {
    best = {Subset::Empty(n), eval(Subset::Empty(n))};
  }
  if (stats != nullptr) {
    stats->intervals += local.intervals;
    stats->evaluations += local.evaluations;
  }
  return best;
}

namespace internal {

bool Improves(double candidate, double current, double factor) {
  if (current > 0) return candidate > factor * current;
  return candidate > current;
}

LocalSearchTrace LocalSearch(const std::function<double(const Subset&)>& g,
                             const Subset& domain, double epsilon,
                             bool require_nonnegative) {
  if (!(epsilon > 0)) throw ArgumentError("epsilon must be positive");
  const int n = domain.width();
  LocalSearchTrace out{Subset::Empty(n), Subset::Empty(n), 0};
  const int r = domain.size();
  if (r == 0) return out;

  auto value = [&](const Subset& s) {
    const double v = g(s);
    if (require_nonnegative && v < 0) {
      throw ContractError("local search needs a non-negative function; got " +
                          std::to_string(v) + " at " + s.ToString());
    }
    return v;
  };

  const std::vector<int> elements = domain.Elements();
  Subset current = Subset::Singleton(n, elements.front());
  double current_value = value(current);
  for (int x : elements) {
    const Subset s = Subset::Singleton(n, x);
    const double v = value(s);
    if (v > current_value) {
      current = s;
      current_value = v;
    }
  }
  out.seed = current;

  const double factor = 1.0 + epsilon / (static_cast<double>(r) * r);
  while (true) {
    bool moved = false;
    for (int x : elements) {
      if (current.contains(x)) continue;
      const Subset next = current.with(x);
      const double v = value(next);
      if (Improves(v, current_value, factor)) {
        current = next;
        current_value = v;
        moved = true;
        break;
      }
    }
    if (!moved) {
      for (int x : elements) {
        if (!current.contains(x)) continue;
        const Subset next = current.without(x);
        const double v = value(next);
        if (Improves(v, current_value, factor)) {
          current = next;
          current_value = v;
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
    ++out.subiterations;
  }
  out.terminal = current;
  return out;
}

}  // namespace internal

LSResult LsMax(const SetFunction& g, const Subset& domain, double epsilon) {
  if (domain.width() != g.size()) {
    throw ArgumentError("domain width does not match set function");
  }
  auto oracle = [&g](const Subset& s) { return g.EvaluateUnchecked(s); };
  const internal::LocalSearchTrace trace =
      internal::LocalSearch(oracle, domain, epsilon, true);
  LSResult out;
  out.seed = trace.seed;
  out.terminal = trace.terminal;
  out.subiterations = trace.subiterations;
  const Subset complement = domain - trace.terminal;
  const double v_terminal = g.EvaluateUnchecked(trace.terminal);
  const double v_complement = g.EvaluateUnchecked(complement);
  if (v_complement < 0) {
    throw ContractError("local search needs a non-negative function");
  }
  if (Beats(v_complement, complement, v_terminal, trace.terminal)) {
    out.best = complement;
    out.value = v_complement;
  } else {
    out.best = trace.terminal;
    out.value = v_terminal;
  }
  return out;
}

double LsSubiterationBound(int r, double epsilon) {
  const double rr = static_cast<double>(r);
  const double log_r = r > 1 ? std::log2(rr) : 0.0;
  return kLsSubiterationConstant * (1.0 / epsilon) * rr * rr * log_r +
         kLsSubiterationConstant;
}

double LsGuarantee(int r, double epsilon) {
  if (r <= 0) return 1.0;
  return 1.0 / 3.0 - epsilon / r;
}

}  // namespace setmax
