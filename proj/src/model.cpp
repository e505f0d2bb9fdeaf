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

#include "delivery/model.hpp"

#include <cstdlib>
#include <set>
#include <unordered_set>

namespace delivery {

std::uint64_t cap_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("DELIVERY_MECH_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return fallback;
  return static_cast<std::uint64_t>(v);
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<std::string> node_names, std::vector<Edge> edges)
    : names_(std::move(node_names)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<NodeIndex>(i)).second) {
      throw InputError("duplicate node '" + names_[i] + "'");
    }
  }
  for (const Edge& e : edges_) {
    if (!contains(e.u) || !contains(e.v)) throw InputError("edge references unknown node");
    if (e.u == e.v) throw InputError("self-loop at node '" + name(e.u) + "'");
    if (e.length.sign() <= 0) {
      throw InputError("edge " + name(e.u) + "-" + name(e.v) + " has non-positive length");
    }
  }
}

NodeIndex Graph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw StructuralError("unknown node '" + name + "'");
  return it->second;
}

std::optional<NodeIndex> Graph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::is_connected() const {
  const int n = num_nodes();
  if (n <= 1) return true;
  std::vector<std::vector<NodeIndex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<NodeIndex> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const NodeIndex u = stack.back();
    stack.pop_back();
    for (NodeIndex v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

// ---------------------------------------------------------------------------
// Instance

Instance::Instance(Graph graph, std::vector<AgentSpec> agents, std::vector<PackageSpec> packages)
    : graph_(std::move(graph)), agents_(std::move(agents)), packages_(std::move(packages)) {
  if (graph_.num_nodes() == 0) throw InputError("graph has no nodes");
  if (!graph_.is_connected()) throw InputError("graph is disconnected");
  if (agents_.empty()) throw InputError("instance has no agents");
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    const AgentSpec& a = agents_[i];
    if (!agent_pos_.emplace(a.id, i).second) {
      throw InputError("duplicate agent id " + std::to_string(a.id));
    }
    if (!graph_.contains(a.start)) throw InputError("agent start outside graph");
    if (a.weight.sign() < 0) throw InputError("agent " + std::to_string(a.id) + " has negative weight");
  }
  for (std::size_t j = 0; j < packages_.size(); ++j) {
    const PackageSpec& p = packages_[j];
    if (!package_pos_.emplace(p.id, j).second) {
      throw InputError("duplicate package id " + std::to_string(p.id));
    }
    if (!graph_.contains(p.source) || !graph_.contains(p.target)) {
      throw InputError("package " + std::to_string(p.id) + " references unknown node");
    }
  }
}

const AgentSpec& Instance::agent(AgentId id) const {
  auto it = agent_pos_.find(id);
  if (it == agent_pos_.end()) throw StructuralError("unknown agent " + std::to_string(id));
  return agents_[it->second];
}

const PackageSpec& Instance::package(PackageId id) const {
  auto it = package_pos_.find(id);
  if (it == package_pos_.end()) throw StructuralError("unknown package " + std::to_string(id));
  return packages_[it->second];
}

bool Instance::has_agent(AgentId id) const { return agent_pos_.contains(id); }
bool Instance::has_package(PackageId id) const { return package_pos_.contains(id); }

std::vector<PackageSpec> Instance::active_packages() const {
  std::vector<PackageSpec> out;
  for (const PackageSpec& p : packages_) {
    if (!p.degenerate()) out.push_back(p);
  }
  return out;
}

WeightVector Instance::weights() const {
  WeightVector w;
  for (const AgentSpec& a : agents_) w.emplace(a.id, a.weight);
  return w;
}

Instance Instance::with_weights(const WeightVector& weights) const {
  std::vector<AgentSpec> agents = agents_;
  for (AgentSpec& a : agents) {
    auto it = weights.find(a.id);
    if (it == weights.end()) {
      throw PreconditionError("weight vector misses agent " + std::to_string(a.id));
    }
    a.weight = it->second;
  }
  return Instance(graph_, std::move(agents), packages_);
}

Instance Instance::without_agent(AgentId id) const {
  if (!has_agent(id)) throw StructuralError("unknown agent " + std::to_string(id));
  if (agents_.size() < 2) throw PreconditionError("cannot remove the only agent");
  std::vector<AgentSpec> agents;
  for (const AgentSpec& a : agents_) {
    if (a.id != id) agents.push_back(a);
  }
  return Instance(graph_, std::move(agents), packages_);
}

// ---------------------------------------------------------------------------
// Distances

DistanceOracle all_pairs_distances(const Graph& graph) {
  const auto n = static_cast<std::size_t>(graph.num_nodes());
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (const Edge& e : graph.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (!reach[u][v] || e.length < d[u][v]) {
      d[u][v] = d[v][u] = e.length;
      reach[u][v] = reach[v][u] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!reach[k][j]) continue;
        Rational via = d[i][k] + d[k][j];
        if (!reach[i][j] || via < d[i][j]) {
          d[i][j] = std::move(via);
          reach[i][j] = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!reach[i][j]) throw InputError("graph is disconnected");
    }
  }
  return DistanceOracle(std::move(d));
}

DistanceOracle all_pairs_distances(const Instance& instance) {
  return all_pairs_distances(instance.graph());
}

// ---------------------------------------------------------------------------
// Solutions

void append_move(Itinerary& itinerary, NodeIndex& position, NodeIndex to) {
  if (position == to) return;
  itinerary.push_back(Action::move(to));
  position = to;
}

namespace {

void check_structure(const Instance& instance, const Solution& solution) {
  for (const auto& [agent, actions] : solution.itineraries) {
    if (!instance.has_agent(agent)) {
      throw StructuralError("itinerary for unknown agent " + std::to_string(agent));
    }
    for (const Action& a : actions) {
      if (a.kind == Action::Kind::kMove) {
        if (!instance.graph().contains(a.node)) {
          throw StructuralError("agent " + std::to_string(agent) + " moves to unknown node");
        }
      } else if (!instance.has_package(a.package)) {
        throw StructuralError("agent " + std::to_string(agent) + " references unknown package " +
                              std::to_string(a.package));
      }
    }
  }
}

// Interleaving search. Moves and drops never disable another agent's action,
// so they are applied eagerly; only pickups branch.
class InterleavingChecker {
 public:
  InterleavingChecker(const Instance& instance, const Solution& solution)
      : instance_(instance) {
    for (const AgentSpec& a : instance.agents()) {
      auto it = solution.itineraries.find(a.id);
      agents_.push_back(a.id);
      plans_.push_back(it == solution.itineraries.end() ? Itinerary{} : it->second);
    }
    for (const PackageSpec& p : instance.packages()) {
      package_index_.emplace(p.id, static_cast<int>(packages_.size()));
      packages_.push_back(p);
    }
  }

  FeasibilityReport run() {
    State s;
    const std::size_t k = agents_.size();
    s.pc.assign(k, 0);
    s.carrying.assign(k, -1);
    for (const AgentSpec& a : instance_.agents()) s.node.push_back(a.start);
    for (const PackageSpec& p : packages_) s.location.push_back(encode_node(p.source));
    return search(std::move(s));
  }

 private:
  struct State {
    std::vector<std::size_t> pc;
    std::vector<NodeIndex> node;
    std::vector<int> carrying;  // package slot or -1
    std::vector<int> location;  // >= 0: node; < 0: carried by agent slot (-1 - slot)

    std::vector<long long> key() const {
      std::vector<long long> out;
      out.reserve(pc.size() * 3 + location.size());
      for (std::size_t i = 0; i < pc.size(); ++i) {
        out.push_back(static_cast<long long>(pc[i]));
        out.push_back(node[i]);
        out.push_back(carrying[i]);
      }
      out.insert(out.end(), location.begin(), location.end());
      return out;
    }
  };

  static int encode_node(NodeIndex v) { return v; }
  static int encode_carrier(std::size_t slot) { return -1 - static_cast<int>(slot); }

  std::string agent_name(std::size_t slot) const { return "agent " + std::to_string(agents_[slot]); }

  // Applies moves and drops; returns a violation message or "".
  std::string advance_eagerly(State& s) const {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t a = 0; a < plans_.size(); ++a) {
        while (s.pc[a] < plans_[a].size()) {
          const Action& act = plans_[a][s.pc[a]];
          if (act.kind == Action::Kind::kMove) {
            s.node[a] = act.node;
          } else if (act.kind == Action::Kind::kDrop) {
            const int slot = package_index_.at(act.package);
            if (s.carrying[a] != slot) {
              return agent_name(a) + " drops package " + std::to_string(act.package) +
                     " which it is not carrying";
            }
            s.carrying[a] = -1;
            s.location[static_cast<std::size_t>(slot)] = encode_node(s.node[a]);
          } else {
            if (s.carrying[a] >= 0) {
              return agent_name(a) + " picks up package " + std::to_string(act.package) +
                     " while already carrying package " +
                     std::to_string(packages_[static_cast<std::size_t>(s.carrying[a])].id);
            }
            break;
          }
          ++s.pc[a];
          progress = true;
        }
      }
    }
    return {};
  }

  FeasibilityReport search(State s) {
    if (std::string v = advance_eagerly(s); !v.empty()) return {false, v};
    auto key = s.key();
    if (auto it = failed_.find(key); it != failed_.end()) return {false, it->second};

    std::vector<std::size_t> enabled;
    bool all_done = true;
    for (std::size_t a = 0; a < plans_.size(); ++a) {
      if (s.pc[a] >= plans_[a].size()) continue;
      all_done = false;
      const int slot = package_index_.at(plans_[a][s.pc[a]].package);
      if (s.location[static_cast<std::size_t>(slot)] == encode_node(s.node[a])) enabled.push_back(a);
    }

    FeasibilityReport result;
    if (all_done) {
      result = check_final(s);
    } else if (enabled.empty()) {
      for (std::size_t a = 0; a < plans_.size(); ++a) {
        if (s.pc[a] < plans_[a].size()) {
          const Action& act = plans_[a][s.pc[a]];
          result = {false, "no valid interleaving: " + agent_name(a) + " waits forever for package " +
                               std::to_string(act.package) + " at node " +
                               instance_.graph().name(s.node[a])};
          break;
        }
      }
    } else {
      result = {false, ""};
      for (std::size_t a : enabled) {
        State next = s;
        const int slot = package_index_.at(plans_[a][next.pc[a]].package);
        next.carrying[a] = slot;
        next.location[static_cast<std::size_t>(slot)] = encode_carrier(a);
        ++next.pc[a];
        FeasibilityReport r = search(std::move(next));
        if (r.feasible) return r;
        if (result.violation.empty()) result = r;
      }
    }
    if (!result.feasible) failed_.emplace(std::move(key), result.violation);
    return result;
  }

  FeasibilityReport check_final(const State& s) const {
    for (std::size_t j = 0; j < packages_.size(); ++j) {
      const int loc = s.location[j];
      if (loc < 0) {
        return {false, "package " + std::to_string(packages_[j].id) + " is still carried at the end"};
      }
      if (loc != packages_[j].target) {
        return {false, "package " + std::to_string(packages_[j].id) + " ends at node " +
                           instance_.graph().name(loc) + " instead of its target " +
                           instance_.graph().name(packages_[j].target)};
      }
    }
    return {true, {}};
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<long long>& v) const {
      std::size_t h = 1469598103934665603ULL;
      for (long long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
      return h;
    }
  };

  const Instance& instance_;
  std::vector<AgentId> agents_;
  std::vector<Itinerary> plans_;
  std::vector<PackageSpec> packages_;
  std::map<PackageId, int> package_index_;
  std::unordered_map<std::vector<long long>, std::string, KeyHash> failed_;
};

}  // namespace

std::map<AgentId, Rational> travel_distances(const Instance& instance, const DistanceOracle& dist,
                                             const Solution& solution) {
  check_structure(instance, solution);
  std::map<AgentId, Rational> out;
  for (const AgentSpec& a : instance.agents()) out.emplace(a.id, Rational(0));
  for (const auto& [agent, actions] : solution.itineraries) {
    NodeIndex at = instance.agent(agent).start;
    Rational& d = out[agent];
    for (const Action& act : actions) {
      if (act.kind != Action::Kind::kMove) continue;
      d += dist(at, act.node);
      at = act.node;
    }
  }
  return out;
}

FeasibilityReport validate_solution(const Instance& instance, const Solution& solution) {
  check_structure(instance, solution);
  return InterleavingChecker(instance, solution).run();
}

CostBreakdown evaluate_cost(const std::map<AgentId, Rational>& distances,
                            const WeightVector& weights) {
  CostBreakdown out;
  for (const auto& [agent, d] : distances) {
    auto it = weights.find(agent);
    if (it == weights.end()) {
      if (!d.is_zero()) {
        throw PreconditionError("no weight for travelling agent " + std::to_string(agent));
      }
      continue;
    }
    Rational c = it->second * d;
    out.total += c;
    out.per_agent.emplace(agent, std::move(c));
  }
  return out;
}

CostBreakdown evaluate_cost(const Instance& instance, const DistanceOracle& dist,
                            const Solution& solution, const WeightVector& weights) {
  return evaluate_cost(travel_distances(instance, dist, solution), weights);
}

}  // namespace delivery
