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
#include <bit>
#include <numeric>
#include <optional>

#include "delivery/solvers.hpp"

namespace delivery {
namespace {

// Arc list with the depot prepended as a zero-length arc (index 0).
struct ArcsWithDepot {
  std::vector<NodeIndex> tail;
  std::vector<NodeIndex> head;
  std::vector<PackageId> package;  // 0 for the depot

  explicit ArcsWithDepot(const ScpInstance& scp) {
    tail.push_back(scp.depot);
    head.push_back(scp.depot);
    package.push_back(0);
    for (const ScpArc& a : scp.arcs) {
      tail.push_back(a.from);
      head.push_back(a.to);
      package.push_back(a.package);
    }
  }
  std::size_t size() const { return tail.size(); }
};

// Directed Euler circuit (Hierholzer) over an edge list; returns edge ids in
// traversal order starting at `start`.
std::vector<std::size_t> euler_circuit(std::size_t num_vertices,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                       std::size_t start) {
  std::vector<std::vector<std::size_t>> out(num_vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].first].push_back(e);
  for (auto& list : out) std::reverse(list.begin(), list.end());  // pop_back yields insertion order
  std::vector<std::size_t> circuit;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (vertex, edge used to enter)
  stack.emplace_back(start, SIZE_MAX);
  while (!stack.empty()) {
    const std::size_t v = stack.back().first;
    if (!out[v].empty()) {
      const std::size_t e = out[v].back();
      out[v].pop_back();
      stack.emplace_back(edges[e].second, e);
    } else {
      if (stack.back().second != SIZE_MAX) circuit.push_back(stack.back().second);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

// Prim's MST over a dense symmetric matrix; returns (parent, child) pairs.
std::vector<std::pair<std::size_t, std::size_t>> prim(const std::vector<std::vector<Rational>>& w) {
  const std::size_t n = w.size();
  std::vector<std::pair<std::size_t, std::size_t>> tree;
  if (n == 0) return tree;
  std::vector<bool> in(n, false);
  std::vector<std::optional<Rational>> key(n);
  std::vector<std::size_t> parent(n, 0);
  key[0] = Rational(0);
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v] && key[v] && (u == SIZE_MAX || *key[v] < *key[u])) u = v;
    }
    in[u] = true;
    if (u != 0) tree.emplace_back(parent[u], u);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v] && (!key[v] || w[u][v] < *key[v])) {
        key[v] = w[u][v];
        parent[v] = u;
      }
    }
  }
  return tree;
}

// Minimum-weight perfect matching on an even vertex list. Exact subset DP up
// to 16 vertices, greedy on the cheapest pair beyond that.
std::vector<std::pair<std::size_t, std::size_t>> perfect_matching(const std::vector<std::size_t>& vs,
                                                                  const std::vector<std::vector<Rational>>& w) {
  const std::size_t n = vs.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n == 0) return out;
  if (n <= 16) {
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::optional<Rational>> best(full + 1);
    std::vector<std::size_t> pick(full + 1, 0);
    best[0] = Rational(0);
    for (std::size_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
        if (!best[rest]) continue;
        Rational c = *best[rest] + w[vs[i]][vs[j]];
        if (!best[mask] || c < *best[mask]) {
          best[mask] = std::move(c);
          pick[mask] = j;
        }
      }
    }
    for (std::size_t mask = full; mask != 0;) {
      const std::size_t i = static_cast<std::size_t>(std::countr_zero(mask));
      const std::size_t j = pick[mask];
      out.emplace_back(vs[i], vs[j]);
      mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
    }
    return out;
  }
  std::vector<bool> used(n, false);
  for (std::size_t round = 0; round < n / 2; ++round) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n && !used[i]; ++j) {
        if (used[j]) continue;
        if (!found || w[vs[i]][vs[j]] < w[vs[bi]][vs[bj]]) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    used[bi] = used[bj] = true;
    out.emplace_back(vs[bi], vs[bj]);
  }
  return out;
}

// Rotates a cyclic sequence of arc indices so the depot (0) comes first, then
// drops it: what remains is the delivery order.
std::vector<PackageId> order_from_cycle(const ArcsWithDepot& arcs, const std::vector<std::size_t>& cycle) {
  const auto it = std::find(cycle.begin(), cycle.end(), 0);
  std::vector<PackageId> order;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    order.push_back(arcs.package[cycle[static_cast<std::size_t>((it - cycle.begin()) + i) % cycle.size()]]);
  }
  return order;
}

ScpTour finish(const ScpInstance& scp, const DistanceOracle& dist, std::vector<PackageId> order) {
  Rational length = scp_tour_length(scp, dist, order);
  return {std::move(order), std::move(length)};
}

}  // namespace

ScpInstance make_scp_instance(const Instance& instance, AgentId agent, const PackageList& packages) {
  ScpInstance scp;
  scp.depot = instance.agent(agent).start;
  for (PackageId j : packages) {
    const PackageSpec& p = instance.package(j);
    scp.arcs.push_back({j, p.source, p.target});
  }
  return scp;
}

Rational scp_tour_length(const ScpInstance& scp, const DistanceOracle& dist, const std::vector<PackageId>& order) {
  if (order.empty()) return Rational(0);
  Rational d;
  NodeIndex at = scp.depot;
  for (PackageId j : order) {
    auto arc = std::find_if(scp.arcs.begin(), scp.arcs.end(), [j](const ScpArc& a) { return a.package == j; });
    if (arc == scp.arcs.end()) throw PreconditionError("package " + std::to_string(j) + " is not an arc");
    d += dist(at, arc->from);
    d += dist(arc->from, arc->to);
    at = arc->to;
  }
  d += dist(at, scp.depot);
  return d;
}

ScpTour solve_scp_exact(const ScpInstance& scp, const DistanceOracle& dist, std::size_t arc_cap) {
  if (scp.arcs.size() > arc_cap) {
    throw CapExceeded("exact Stacker-Crane with " + std::to_string(scp.arcs.size()) + " arcs exceeds cap " +
                      std::to_string(arc_cap));
  }
  std::vector<PackageId> perm;
  for (const ScpArc& a : scp.arcs) perm.push_back(a.package);
  std::sort(perm.begin(), perm.end());
  ScpTour best{perm, scp_tour_length(scp, dist, perm)};
  while (std::next_permutation(perm.begin(), perm.end())) {
    Rational len = scp_tour_length(scp, dist, perm);
    if (len < best.length) best = {perm, std::move(len)};
  }
  return best;
}

ScpTour scp_large_arcs(const ScpInstance& scp, const DistanceOracle& dist) {
  if (scp.arcs.empty()) return {{}, Rational(0)};
  const ArcsWithDepot arcs(scp);
  const std::size_t n = arcs.size();

  // Head of arc a -> tail of arc b.
  std::vector<std::vector<Rational>> connect(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) connect[a][b] = dist(arcs.head[a], arcs.tail[b]);
  }
  const std::vector<int> next = min_cost_assignment(connect);

  // Cycles of the successor permutation.
  std::vector<std::size_t> cycle_of(n, SIZE_MAX);
  std::size_t cycles = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (cycle_of[a] != SIZE_MAX) continue;
    for (std::size_t b = a; cycle_of[b] == SIZE_MAX; b = static_cast<std::size_t>(next[b])) cycle_of[b] = cycles;
    ++cycles;
  }

  // Cheapest endpoint-to-endpoint link between every two cycles.
  struct Link {
    NodeIndex u = 0, v = 0;
  };
  std::vector<std::vector<Rational>> cw(cycles, std::vector<Rational>(cycles));
  std::vector<std::vector<Link>> link(cycles, std::vector<Link>(cycles));
  std::vector<std::vector<bool>> seen(cycles, std::vector<bool>(cycles, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ca = cycle_of[a], cb = cycle_of[b];
      if (ca == cb) continue;
      for (NodeIndex u : {arcs.tail[a], arcs.head[a]}) {
        for (NodeIndex v : {arcs.tail[b], arcs.head[b]}) {
          if (!seen[ca][cb] || dist(u, v) < cw[ca][cb]) {
            seen[ca][cb] = true;
            cw[ca][cb] = dist(u, v);
            link[ca][cb] = {u, v};
          }
        }
      }
    }
  }

  // Multigraph on graph nodes: arcs, connectors, doubled tree links.
  // Edge ids below n are the arcs themselves.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    edges.emplace_back(static_cast<std::size_t>(arcs.tail[a]), static_cast<std::size_t>(arcs.head[a]));
  }
  for (std::size_t a = 0; a < n; ++a) {
    edges.emplace_back(static_cast<std::size_t>(arcs.head[a]),
                       static_cast<std::size_t>(arcs.tail[static_cast<std::size_t>(next[a])]));
  }
  for (auto [p, c] : prim(cw)) {
    const Link& l = link[p][c];
    edges.emplace_back(static_cast<std::size_t>(l.u), static_cast<std::size_t>(l.v));
    edges.emplace_back(static_cast<std::size_t>(l.v), static_cast<std::size_t>(l.u));
  }

  // Every arc occurs once in the circuit, so its arc subsequence is the
  // cyclic delivery order.
  const std::vector<std::size_t> circuit =
      euler_circuit(static_cast<std::size_t>(dist.size()), edges, static_cast<std::size_t>(scp.depot));
  std::vector<std::size_t> sequence;
  for (std::size_t e : circuit) {
    if (e < n) sequence.push_back(e);
  }
  return finish(scp, dist, order_from_cycle(arcs, sequence));
}

ScpTour scp_small_arcs(const ScpInstance& scp, const DistanceOracle& dist) {
  if (scp.arcs.empty()) return {{}, Rational(0)};
  const ArcsWithDepot arcs(scp);
  const std::size_t n = arcs.size();

  // Every arc shrunk to a point; metric closure of the endpoint distances.
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      w[a][b] = min(min(dist(arcs.tail[a], arcs.tail[b]), dist(arcs.tail[a], arcs.head[b])),
                    min(dist(arcs.head[a], arcs.tail[b]), dist(arcs.head[a], arcs.head[b])));
    }
  }
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Rational c = w[a][via] + w[via][b];
        if (c < w[a][b]) w[a][b] = std::move(c);
      }
    }
  }

  // Christofides on the shrunk points.
  const auto tree = prim(w);
  std::vector<int> degree(n, 0);
  for (auto [u, v] : tree) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<std::size_t> odd;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] % 2 != 0) odd.push_back(v);
  }
  std::vector<std::pair<std::size_t, std::size_t>> undirected = tree;
  for (auto pr : perfect_matching(odd, w)) undirected.push_back(pr);

  // Undirected Euler circuit: orient by walking, each edge usable once.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, edge id)
  for (std::size_t e = 0; e < undirected.size(); ++e) {
    adj[undirected[e].first].emplace_back(undirected[e].second, e);
    adj[undirected[e].second].emplace_back(undirected[e].first, e);
  }
  for (auto& list : adj) std::reverse(list.begin(), list.end());
  std::vector<bool> used(undirected.size(), false);
  std::vector<std::size_t> walk, stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    while (!adj[v].empty() && used[adj[v].back().second]) adj[v].pop_back();
    if (adj[v].empty()) {
      walk.push_back(v);
      stack.pop_back();
    } else {
      const auto [to, e] = adj[v].back();
      used[e] = true;
      stack.push_back(to);
    }
  }
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> cycle;
  for (std::size_t v : walk) {
    if (!visited[v]) {
      visited[v] = true;
      cycle.push_back(v);
    }
  }

  ScpTour forward = finish(scp, dist, order_from_cycle(arcs, cycle));
  std::reverse(cycle.begin(), cycle.end());
  ScpTour backward = finish(scp, dist, order_from_cycle(arcs, cycle));
  return backward.length < forward.length ? backward : forward;
}

ScpTour solve_scp_approx(const ScpInstance& scp, const DistanceOracle& dist) {
  ScpTour large = scp_large_arcs(scp, dist);
  ScpTour small = scp_small_arcs(scp, dist);
  return small.length < large.length ? small : large;
}

}  // namespace delivery
