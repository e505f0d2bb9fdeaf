// Copyright 2026 The Delivery Mechanisms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <optional>

#include "delivery/solvers.hpp"

namespace delivery {
namespace {

const PackageSpec& only_package(const Instance& instance) {
  if (instance.num_packages() != 1) {
    throw PreconditionError("single-package solver needs m = 1, got m = " + std::to_string(instance.num_packages()));
  }
  return instance.packages().front();
}

void carry(Itinerary& it, NodeIndex start, PackageId j, NodeIndex from, NodeIndex to) {
  NodeIndex at = start;
  append_move(it, at, from);
  it.push_back(Action::pickup(j));
  append_move(it, at, to);
  it.push_back(Action::drop(j));
}

}  // namespace

SingleOptimalResult solve_single_optimal(const Instance& instance, const DistanceOracle& dist,
                                         const WeightVector& weights) {
  const PackageSpec& p = only_package(instance);
  SingleOptimalResult out;
  if (p.degenerate()) {
    out.result = make_result("dp", instance, dist, Solution{}, weights);
    return out;
  }

  std::vector<AgentSpec> order = instance.agents();
  for (AgentSpec& a : order) a.weight = weight_of(weights, a.id);
  std::stable_sort(order.begin(), order.end(), [](const AgentSpec& x, const AgentSpec& y) {
    if (x.weight != y.weight) return x.weight > y.weight;
    return x.id < y.id;
  });

  // f[j][v]: cheapest way to bring the package to v using only the first j
  // carriers, each at most once and in order. from[j][v] = -1 for a skip,
  // else the node where carrier j picked it up.
  const std::size_t n = static_cast<std::size_t>(dist.size());
  const std::size_t k = order.size();
  using Cell = std::optional<Rational>;
  std::vector<std::vector<Cell>> f(k + 1, std::vector<Cell>(n));
  std::vector<std::vector<int>> from(k + 1, std::vector<int>(n, -1));
  std::vector<std::vector<int>> most(k + 1, std::vector<int>(n, 0));
  f[0][static_cast<std::size_t>(p.source)] = Rational(0);
  for (std::size_t j = 1; j <= k; ++j) {
    const AgentSpec& a = order[j - 1];
    for (std::size_t v = 0; v < n; ++v) {
      Cell best;
      int pick = -1, carriers = 0;
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v || !f[j - 1][u]) continue;
        Rational c = *f[j - 1][u] + a.weight * (dist(a.start, static_cast<NodeIndex>(u)) +
                                                dist(static_cast<NodeIndex>(u), static_cast<NodeIndex>(v)));
        if (!best || c < *best) {
          best = std::move(c);
          pick = static_cast<int>(u);
          carriers = most[j - 1][u] + 1;
        } else if (c == *best) {
          carriers = std::max(carriers, most[j - 1][u] + 1);
        }
      }
      const Cell& skip = f[j - 1][v];
      if (skip && (!best || *skip < *best)) {
        best = skip;
        pick = -1;
        carriers = most[j - 1][v];
      } else if (skip && *skip == *best) {
        carriers = std::max(carriers, most[j - 1][v]);
      }
      f[j][v] = std::move(best);
      from[j][v] = pick;
      most[j][v] = carriers;
    }
  }

  // Walk back from (k, t) collecting the carriers.
  std::vector<std::pair<std::size_t, std::pair<NodeIndex, NodeIndex>>> legs;
  std::size_t v = static_cast<std::size_t>(p.target);
  for (std::size_t j = k; j > 0; --j) {
    const int u = from[j][v];
    if (u < 0) continue;
    legs.push_back({j - 1, {u, static_cast<NodeIndex>(v)}});
    v = static_cast<std::size_t>(u);
  }
  std::reverse(legs.begin(), legs.end());
  Solution sol;
  for (const auto& [idx, leg] : legs) {
    const AgentSpec& a = order[idx];
    carry(sol.itineraries[a.id], a.start, p.id, leg.first, leg.second);
    out.carriers.push_back(a.id);
  }
  out.result = make_result("dp", instance, dist, std::move(sol), weights);
  out.max_optimal_carriers = most[k][static_cast<std::size_t>(p.target)];
  return out;
}

LonelyResult solve_single_lonely(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights) {
  const PackageSpec& p = only_package(instance);
  LonelyResult out;
  std::optional<Rational> best;
  for (const AgentSpec& a : instance.agents()) {
    Rational c = weight_of(weights, a.id) * (dist(a.start, p.source) + dist(p.source, p.target));
    if (!best || c < *best || (c == *best && a.id < out.selected)) {
      best = std::move(c);
      out.selected = a.id;
    }
  }
  Solution sol;
  if (!p.degenerate()) {
    carry(sol.itineraries[out.selected], instance.agent(out.selected).start, p.id, p.source, p.target);
  }
  out.result = make_result("lonely-" + std::to_string(out.selected), instance, dist, std::move(sol), weights);
  return out;
}

}  // namespace delivery
