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

#include <optional>

#include "delivery/solvers.hpp"

namespace delivery {
namespace {

std::vector<PackageId> active_ids(const Instance& instance) {
  std::vector<PackageId> ids;
  for (const PackageSpec& p : instance.active_packages()) ids.push_back(p.id);
  return ids;
}

struct BestSchedule {
  std::optional<Rational> cost;
  Schedule schedule;
  std::uint64_t index = 0;

  void offer(const Rational& c, const Schedule& s, std::uint64_t i) {
    if (!cost || c < *cost) {
      cost = c;
      schedule = s;
      index = i;
    }
  }
};

// Cheapest assignment of `bundle` to the agents whose positions are listed in
// `cols`; nullopt when there are more lists than agents.
std::optional<std::pair<Rational, Schedule>> assign_bundle(const std::vector<std::vector<Rational>>& list_cost,
                                                           const ListBundle& bundle, const std::vector<std::size_t>& cols,
                                                           std::size_t num_agents) {
  if (bundle.lists.size() > cols.size()) return std::nullopt;
  std::vector<std::vector<Rational>> matrix(bundle.lists.size());
  for (std::size_t r = 0; r < bundle.lists.size(); ++r) {
    for (std::size_t c : cols) matrix[r].push_back(list_cost[r][c]);
  }
  const std::vector<int> match = min_cost_assignment(matrix);
  Schedule s;
  s.lists.assign(num_agents, {});
  Rational total;
  for (std::size_t r = 0; r < match.size(); ++r) {
    const std::size_t agent = cols[static_cast<std::size_t>(match[r])];
    s.lists[agent] = bundle.lists[r];
    total += list_cost[r][agent];
  }
  return std::make_pair(total, std::move(s));
}

}  // namespace

SolveResult solve_am_basic(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights,
                           std::uint64_t cap) {
  const auto& agents = instance.agents();
  ListsOfListsEnumerator e(active_ids(instance), instance.num_agents(), cap);
  BestSchedule best;
  Schedule s;
  for (std::uint64_t i = 0; e.next(s); ++i) {
    Rational c;
    for (std::size_t a = 0; a < agents.size(); ++a) {
      if (s.lists[a].empty()) continue;
      c += weight_of(weights, agents[a].id) * schedule_travel_distance(instance, dist, agents[a].id, s.lists[a]);
    }
    best.offer(c, s, i);
  }
  return make_result("schedule#" + std::to_string(best.index), instance, dist,
                     realize_schedule(instance, dist, best.schedule), weights);
}

AmImprovedResult solve_am_improved(const Instance& instance, const DistanceOracle& dist,
                                   const WeightVector& weights, std::uint64_t cap) {
  const auto& agents = instance.agents();
  const std::size_t k = agents.size();
  SetsOfListsEnumerator e(active_ids(instance), cap);

  std::vector<std::size_t> all(k);
  for (std::size_t a = 0; a < k; ++a) all[a] = a;
  std::vector<std::vector<std::size_t>> minus(k > 1 ? k : 0);
  for (std::size_t i = 0; i < minus.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      if (a != i) minus[i].push_back(a);
    }
  }

  BestSchedule best;
  std::vector<BestSchedule> best_minus(minus.size());
  ListBundle bundle;
  for (std::uint64_t idx = 0; e.next(bundle); ++idx) {
    if (bundle.lists.size() > k) continue;
    std::vector<std::vector<Rational>> list_cost(bundle.lists.size(), std::vector<Rational>(k));
    for (std::size_t r = 0; r < bundle.lists.size(); ++r) {
      for (std::size_t a = 0; a < k; ++a) {
        list_cost[r][a] =
            weight_of(weights, agents[a].id) * schedule_travel_distance(instance, dist, agents[a].id, bundle.lists[r]);
      }
    }
    if (auto r = assign_bundle(list_cost, bundle, all, k)) best.offer(r->first, r->second, idx);
    for (std::size_t i = 0; i < minus.size(); ++i) {
      if (auto r = assign_bundle(list_cost, bundle, minus[i], k)) best_minus[i].offer(r->first, r->second, idx);
    }
  }

  AmImprovedResult out;
  out.best = make_result("bundle#" + std::to_string(best.index), instance, dist,
                         realize_schedule(instance, dist, best.schedule), weights);
  for (std::size_t i = 0; i < minus.size(); ++i) {
    const Instance reduced = instance.without_agent(agents[i].id);
    Schedule s;
    for (std::size_t a = 0; a < k; ++a) {
      if (a != i) s.lists.push_back(best_minus[i].schedule.lists[a]);
    }
    WeightVector w = weights;
    w.erase(agents[i].id);
    out.without_agent.emplace(agents[i].id,
                              make_result("bundle#" + std::to_string(best_minus[i].index) + "-" +
                                              std::to_string(agents[i].id),
                                          reduced, dist, realize_schedule(reduced, dist, s), w));
  }
  return out;
}

}  // namespace delivery
