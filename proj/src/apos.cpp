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
#include <numeric>
#include <tuple>

#include "delivery/solvers.hpp"

namespace delivery {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Auxiliary MST edge. Vertex 0 is the root, 1..k the agents, k+1..k+m the
// package supernodes. `a_end`/`b_end` pick the concrete terminal.
struct AuxEdge {
  Rational length;
  std::size_t a = 0;
  std::size_t b = 0;
  ForestTerminal a_end;
  ForestTerminal b_end;
};

ForestTerminal agent_terminal(const AgentSpec& a) { return {ForestTerminal::Kind::kAgent, a.id, a.start}; }
ForestTerminal source_terminal(const PackageSpec& p) { return {ForestTerminal::Kind::kSource, p.id, p.source}; }
ForestTerminal target_terminal(const PackageSpec& p) { return {ForestTerminal::Kind::kTarget, p.id, p.target}; }

}  // namespace

Rational AgentTree::weight() const {
  Rational w;
  for (const ForestEdge& e : edges) w += e.length;
  return w;
}

ForestPlan build_forest(const Instance& instance, const DistanceOracle& dist) {
  const auto& agents = instance.agents();
  const std::vector<PackageSpec> packages = instance.active_packages();
  const std::size_t k = agents.size();
  const std::size_t m = packages.size();

  std::vector<AuxEdge> edges;
  for (std::size_t a = 0; a < k; ++a) {
    edges.push_back({Rational(0), 0, 1 + a, agent_terminal(agents[a]), agent_terminal(agents[a])});
  }
  for (std::size_t j = 0; j < m; ++j) {
    const PackageSpec& p = packages[j];
    for (std::size_t a = 0; a < k; ++a) {
      const NodeIndex at = agents[a].start;
      const bool via_source = !(dist(at, p.target) < dist(at, p.source));
      edges.push_back({via_source ? dist(at, p.source) : dist(at, p.target), 1 + a, 1 + k + j,
                       agent_terminal(agents[a]), via_source ? source_terminal(p) : target_terminal(p)});
    }
    for (std::size_t l = j + 1; l < m; ++l) {
      const PackageSpec& q = packages[l];
      const ForestTerminal ends_p[2] = {source_terminal(p), target_terminal(p)};
      const ForestTerminal ends_q[2] = {source_terminal(q), target_terminal(q)};
      std::size_t best_x = 0, best_y = 0;
      for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
          if (dist(ends_p[x].node, ends_q[y].node) < dist(ends_p[best_x].node, ends_q[best_y].node)) {
            best_x = x;
            best_y = y;
          }
        }
      }
      edges.push_back({dist(ends_p[best_x].node, ends_q[best_y].node), 1 + k + j, 1 + k + l, ends_p[best_x],
                       ends_q[best_y]});
    }
  }
  // Kruskal; equal lengths are ordered by (lower endpoint, upper endpoint),
  // which puts every root edge first.
  std::stable_sort(edges.begin(), edges.end(), [](const AuxEdge& x, const AuxEdge& y) {
    if (x.length != y.length) return x.length < y.length;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  DisjointSets sets(1 + k + m);
  std::vector<const AuxEdge*> chosen;
  for (const AuxEdge& e : edges) {
    if (sets.unite(e.a, e.b)) chosen.push_back(&e);
  }

  // After deleting the root, every component holds exactly one agent: all
  // root edges are taken first, so no MST path joins two agents elsewhere.
  DisjointSets comps(1 + k + m);
  for (const AuxEdge* e : chosen) {
    if (e->a != 0) comps.unite(e->a, e->b);
  }
  ForestPlan plan;
  std::vector<std::size_t> tree_of_rep(1 + k + m, SIZE_MAX);
  for (std::size_t a = 0; a < k; ++a) {
    tree_of_rep[comps.find(1 + a)] = plan.trees.size();
    plan.trees.push_back({agents[a].id, {}});
  }
  for (const AuxEdge* e : chosen) {
    if (e->a == 0) continue;
    plan.trees[tree_of_rep[comps.find(e->a)]].edges.push_back({e->a_end, e->b_end, e->length, false});
  }
  for (std::size_t j = 0; j < m; ++j) {
    const PackageSpec& p = packages[j];
    plan.trees[tree_of_rep[comps.find(1 + k + j)]].edges.push_back(
        {source_terminal(p), target_terminal(p), dist(p.source, p.target), true});
  }
  return plan;
}

namespace {

struct TreeWalker {
  struct Arc {
    std::size_t to;
    const ForestEdge* edge;
  };
  std::vector<ForestTerminal> vertices;
  std::vector<std::vector<Arc>> adj;
  Itinerary itinerary;
  NodeIndex at = 0;

  std::size_t vertex(const ForestTerminal& t) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == t) return i;
    }
    vertices.push_back(t);
    adj.emplace_back();
    return vertices.size() - 1;
  }

  void cross(std::size_t from, std::size_t to, const ForestEdge* edge) {
    const ForestTerminal& f = vertices[from];
    const bool carry = edge->mandatory && f.kind == ForestTerminal::Kind::kSource;
    if (carry) itinerary.push_back(Action::pickup(f.id));
    append_move(itinerary, at, vertices[to].node);
    if (carry) itinerary.push_back(Action::drop(f.id));
  }

  void visit(std::size_t v, std::size_t parent) {
    for (const Arc& arc : adj[v]) {
      if (arc.to == parent) continue;
      cross(v, arc.to, arc.edge);
      visit(arc.to, v);
      cross(arc.to, v, arc.edge);
    }
  }
};

}  // namespace

Solution solve_apos(const Instance& instance, const DistanceOracle& dist) {
  const ForestPlan plan = build_forest(instance, dist);
  Solution out;
  for (const AgentTree& tree : plan.trees) {
    if (tree.edges.empty()) continue;
    const AgentSpec& agent = instance.agent(tree.agent);
    TreeWalker walker;
    const std::size_t root = walker.vertex(agent_terminal(agent));
    for (const ForestEdge& e : tree.edges) {
      const std::size_t a = walker.vertex(e.a);
      const std::size_t b = walker.vertex(e.b);
      walker.adj[a].push_back({b, &e});
      walker.adj[b].push_back({a, &e});
    }
    walker.at = agent.start;
    walker.visit(root, SIZE_MAX);
    append_move(walker.itinerary, walker.at, agent.start);
    out.itineraries.emplace(tree.agent, std::move(walker.itinerary));
  }
  return out;
}

AStarResult solve_astar(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights) {
  if (instance.num_agents() < 2) throw PreconditionError("A* needs at least two agents");
  AStarResult out;
  out.candidates.push_back(make_result("x0", instance, dist, solve_apos(instance, dist), weights));
  for (const AgentSpec& a : instance.agents()) {
    out.candidates.push_back(make_result("x-" + std::to_string(a.id), instance, dist,
                                         solve_apos(instance.without_agent(a.id), dist), weights));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < out.candidates.size(); ++i) {
    if (out.candidates[i].cost.total < out.candidates[best].cost.total) best = i;
  }
  out.chosen = out.candidates[best];
  return out;
}

}  // namespace delivery
