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
#include <unordered_map>

#include "delivery/solvers.hpp"

namespace delivery {

AkResult solve_ak(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights, ScpMode mode,
                  bool collect_candidates, std::uint64_t cap) {
  const auto& agents = instance.agents();
  const std::size_t k = agents.size();
  std::vector<PackageId> ids;
  for (const PackageSpec& p : instance.active_packages()) ids.push_back(p.id);
  const std::size_t m = ids.size();
  if (m > 63) throw CapExceeded("A^k supports at most 63 packages");

  std::uint64_t count = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (count > cap / k) {
      throw CapExceeded("A^k needs " + std::to_string(k) + "^" + std::to_string(m) + " assignments, cap is " +
                        std::to_string(cap));
    }
    count *= k;
  }
  if (count > cap) throw CapExceeded("A^k assignment count exceeds cap " + std::to_string(cap));

  // Tour per (agent, package subset); position-only, so shared by all weights.
  std::vector<std::unordered_map<std::uint64_t, ScpTour>> tours(k);
  auto tour = [&](std::size_t a, std::uint64_t mask) -> const ScpTour& {
    auto it = tours[a].find(mask);
    if (it != tours[a].end()) return it->second;
    PackageList subset;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1) subset.push_back(ids[j]);
    }
    const ScpInstance scp = make_scp_instance(instance, agents[a].id, subset);
    ScpTour t = mode == ScpMode::kExact ? solve_scp_exact(scp, dist) : solve_scp_approx(scp, dist);
    return tours[a].emplace(mask, std::move(t)).first->second;
  };

  AkResult out;
  std::optional<Rational> best_cost;
  std::uint64_t best_index = 0;
  std::vector<std::size_t> owner(m, 0);  // odometer, last package fastest
  for (std::uint64_t index = 0; index < count; ++index) {
    std::vector<std::uint64_t> masks(k, 0);
    for (std::size_t j = 0; j < m; ++j) masks[owner[j]] |= std::uint64_t{1} << j;
    Rational cost;
    Schedule s;
    s.lists.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
      if (masks[a] == 0) continue;
      const ScpTour& t = tour(a, masks[a]);
      s.lists[a] = t.order;
      cost += weight_of(weights, agents[a].id) * t.length;
    }
    if (!best_cost || cost < *best_cost) {
      best_cost = cost;
      best_index = index;
      out.chosen_schedule = s;
    }
    if (collect_candidates) out.candidates.push_back(std::move(s));
    for (std::size_t j = m; j-- > 0;) {
      if (++owner[j] < k) break;
      owner[j] = 0;
    }
  }
  out.chosen = make_result("assignment#" + std::to_string(best_index), instance, dist,
                           realize_schedule(instance, dist, out.chosen_schedule), weights);
  return out;
}

}  // namespace delivery
