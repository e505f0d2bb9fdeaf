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

// Slow reference implementations shared by the tests. None of them calls
// into the library beyond the data types.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "delivery/model.hpp"

namespace delivery::testing {

/// All-pairs distances by Bellman-Ford from every node.
inline std::vector<std::vector<Rational>> bellman_ford_apsp(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<std::vector<std::optional<Rational>>> d(static_cast<std::size_t>(n),
                                                      std::vector<std::optional<Rational>>(static_cast<std::size_t>(n)));
  for (int s = 0; s < n; ++s) {
    auto& row = d[static_cast<std::size_t>(s)];
    row[static_cast<std::size_t>(s)] = Rational(0);
    for (int round = 0; round + 1 < n; ++round) {
      for (const Edge& e : g.edges()) {
        for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          const auto& da = row[static_cast<std::size_t>(a)];
          auto& db = row[static_cast<std::size_t>(b)];
          if (da && (!db || *da + e.length < *db)) db = *da + e.length;
        }
      }
    }
  }
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)].value();
  }
  return out;
}

using Matrix = std::vector<std::vector<Rational>>;

inline const Rational& at(const Matrix& d, NodeIndex u, NodeIndex v) {
  return d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

/// Round trip from `start` carrying the packages one at a time in `order`.
inline Rational round_trip(const Instance& inst, const Matrix& d, NodeIndex start, const std::vector<PackageSpec>& order) {
  if (order.empty()) return Rational(0);
  Rational len;
  NodeIndex at_node = start;
  for (const PackageSpec& p : order) {
    len += at(d, at_node, p.source) + at(d, p.source, p.target);
    at_node = p.target;
  }
  (void)inst;
  return len + at(d, at_node, start);
}

/// Best direct-delivery-with-return cost by enumerating set partitions of
/// the nondegenerate packages, orders inside every block, and injective
/// block-to-agent maps.
inline Rational brute_rstar(const Instance& inst, const Matrix& d, const WeightVector& w) {
  std::vector<PackageSpec> pk;
  for (const PackageSpec& p : inst.packages()) {
    if (p.source != p.target) pk.push_back(p);
  }
  const auto& agents = inst.agents();
  std::optional<Rational> best;

  // Cheapest cost of serving one block with one agent (best order).
  auto block_cost = [&](std::vector<PackageSpec> block, const AgentSpec& a) {
    std::sort(block.begin(), block.end(), [](const PackageSpec& x, const PackageSpec& y) { return x.id < y.id; });
    std::optional<Rational> b;
    do {
      Rational c = w.at(a.id) * round_trip(inst, d, a.start, block);
      if (!b || c < *b) b = c;
    } while (std::next_permutation(block.begin(), block.end(),
                                   [](const PackageSpec& x, const PackageSpec& y) { return x.id < y.id; }));
    return *b;
  };

  std::vector<std::vector<PackageSpec>> blocks;
  std::function<void(std::size_t)> partition = [&](std::size_t i) {
    if (blocks.size() > agents.size()) return;
    if (i == pk.size()) {
      // Injective maps of blocks into agents.
      std::vector<bool> used(agents.size(), false);
      std::function<void(std::size_t, Rational)> assign = [&](std::size_t b, Rational acc) {
        if (best && !(acc < *best) && b < blocks.size()) return;
        if (b == blocks.size()) {
          if (!best || acc < *best) best = acc;
          return;
        }
        for (std::size_t a = 0; a < agents.size(); ++a) {
          if (used[a]) continue;
          used[a] = true;
          assign(b + 1, acc + block_cost(blocks[b], agents[a]));
          used[a] = false;
        }
      };
      assign(0, Rational(0));
      return;
    }
    // By index: the recursion may reallocate `blocks`.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(pk[i]);
      partition(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({pk[i]});
    partition(i + 1);
    blocks.pop_back();
  };
  partition(0);
  return best.value_or(Rational(0));
}

/// Shortest closed walk from `depot` covering the arcs (from, to) in some
/// order, each traversed directly.
inline Rational brute_scp(const Matrix& d, NodeIndex depot, std::vector<std::pair<NodeIndex, NodeIndex>> arcs) {
  if (arcs.empty()) return Rational(0);
  std::vector<std::size_t> idx(arcs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::optional<Rational> best;
  do {
    Rational len;
    NodeIndex cur = depot;
    for (std::size_t i : idx) {
      len += at(d, cur, arcs[i].first) + at(d, arcs[i].first, arcs[i].second);
      cur = arcs[i].second;
    }
    len += at(d, cur, depot);
    if (!best || len < *best) best = len;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return *best;
}

/// Minimum-cost assignment of rows to distinct columns by trying all of
/// them.
inline Rational brute_assignment(const std::vector<std::vector<Rational>>& c) {
  const std::size_t rows = c.size();
  const std::size_t cols = rows == 0 ? 0 : c[0].size();
  std::vector<bool> used(cols, false);
  std::optional<Rational> best;
  std::function<void(std::size_t, Rational)> go = [&](std::size_t r, Rational acc) {
    if (r == rows) {
      if (!best || acc < *best) best = acc;
      return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (used[j]) continue;
      used[j] = true;
      go(r + 1, acc + c[r][j]);
      used[j] = false;
    }
  };
  go(0, Rational(0));
  return best.value_or(Rational(0));
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return b;
}

}  // namespace delivery::testing
