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

SolveResult make_result(std::string tag, const Instance& instance, const DistanceOracle& dist,
                        Solution solution, const WeightVector& weights) {
  SolveResult r;
  r.tag = std::move(tag);
  r.distance = travel_distances(instance, dist, solution);
  r.cost = evaluate_cost(r.distance, weights);
  r.solution = std::move(solution);
  return r;
}

const Rational& weight_of(const WeightVector& weights, AgentId id) {
  auto it = weights.find(id);
  if (it == weights.end()) throw PreconditionError("no weight for agent " + std::to_string(id));
  return it->second;
}

// Shortest augmenting paths with row/column potentials (Kuhn-Munkres),
// 1-based internally; column 0 is the virtual start column.
std::vector<int> min_cost_assignment(const std::vector<std::vector<Rational>>& cost) {
  const std::size_t n = cost.size();
  if (n == 0) return {};
  const std::size_t m = cost.front().size();
  if (n > m) throw PreconditionError("assignment needs rows <= columns");

  std::vector<Rational> u(n + 1), v(m + 1);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(m + 1);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        Rational cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = std::move(cur);
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) row_to_col[p[j] - 1] = static_cast<int>(j - 1);
  }
  return row_to_col;
}

}  // namespace delivery
