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

// Core domain types for delivery instances: graphs with exact edge lengths,
// weighted agents, packages, itinerary-based solutions and their costs.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "delivery/errors.hpp"
#include "delivery/rational.hpp"

namespace delivery {

using NodeIndex = int;
using AgentId = int;
using PackageId = int;

struct Edge {
  NodeIndex u = 0;
  NodeIndex v = 0;
  Rational length;
};

/// Undirected graph with positive rational edge lengths. Parallel edges are
/// allowed; self-loops are not.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> node_names, std::vector<Edge> edges);

  int num_nodes() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(NodeIndex v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Throws StructuralError for an unknown name.
  NodeIndex index_of(const std::string& name) const;
  std::optional<NodeIndex> find(const std::string& name) const;
  bool contains(NodeIndex v) const { return v >= 0 && v < num_nodes(); }

  bool is_connected() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, NodeIndex> index_;
};

struct AgentSpec {
  AgentId id = 0;
  NodeIndex start = 0;
  Rational weight;
};

struct PackageSpec {
  PackageId id = 0;
  NodeIndex source = 0;
  NodeIndex target = 0;

  bool degenerate() const { return source == target; }
};

/// Reported (or true) weights keyed by agent id. A weight vector for the
/// instance without agent i simply omits key i.
using WeightVector = std::map<AgentId, Rational>;

/// A delivery instance. Construction validates ids, node references, weights
/// and connectivity; a constructed Instance is always well formed.
class Instance {
 public:
  Instance(Graph graph, std::vector<AgentSpec> agents, std::vector<PackageSpec> packages);

  const Graph& graph() const { return graph_; }
  const std::vector<AgentSpec>& agents() const { return agents_; }
  const std::vector<PackageSpec>& packages() const { return packages_; }
  int num_agents() const { return static_cast<int>(agents_.size()); }
  int num_packages() const { return static_cast<int>(packages_.size()); }

  const AgentSpec& agent(AgentId id) const;
  const PackageSpec& package(PackageId id) const;
  bool has_agent(AgentId id) const;
  bool has_package(PackageId id) const;

  /// Packages with source != target, in input order.
  std::vector<PackageSpec> active_packages() const;

  /// The weights stored in the instance file.
  WeightVector weights() const;
  /// Same instance with the stored weights replaced.
  Instance with_weights(const WeightVector& weights) const;
  /// The instance in which agent `id` is not present. Nodes are untouched.
  Instance without_agent(AgentId id) const;

 private:
  Graph graph_;
  std::vector<AgentSpec> agents_;
  std::vector<PackageSpec> packages_;
  std::map<AgentId, std::size_t> agent_pos_;
  std::map<PackageId, std::size_t> package_pos_;
};

/// Exact all-pairs shortest-path distances.
class DistanceOracle {
 public:
  DistanceOracle() = default;
  explicit DistanceOracle(std::vector<std::vector<Rational>> matrix) : d_(std::move(matrix)) {}

  const Rational& operator()(NodeIndex u, NodeIndex v) const {
    return d_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }
  int size() const { return static_cast<int>(d_.size()); }
  const std::vector<std::vector<Rational>>& matrix() const { return d_; }

 private:
  std::vector<std::vector<Rational>> d_;
};

/// Floyd-Warshall over exact rationals. Throws InputError when the graph is
/// disconnected.
DistanceOracle all_pairs_distances(const Instance& instance);
DistanceOracle all_pairs_distances(const Graph& graph);

struct Action {
  enum class Kind { kMove, kPickup, kDrop };

  Kind kind = Kind::kMove;
  NodeIndex node = 0;      // kMove: destination, reached along a shortest path
  PackageId package = 0;   // kPickup / kDrop

  static Action move(NodeIndex to) { return {Kind::kMove, to, 0}; }
  static Action pickup(PackageId j) { return {Kind::kPickup, 0, j}; }
  static Action drop(PackageId j) { return {Kind::kDrop, 0, j}; }

  friend bool operator==(const Action&, const Action&) = default;
  friend auto operator<=>(const Action&, const Action&) = default;
};

using Itinerary = std::vector<Action>;

/// Per-agent itineraries. Agents without an entry stay idle at their start.
struct Solution {
  std::map<AgentId, Itinerary> itineraries;

  friend bool operator==(const Solution&, const Solution&) = default;
  friend auto operator<=>(const Solution&, const Solution&) = default;
};

/// Appends a move unless the agent is already at `to`.
void append_move(Itinerary& itinerary, NodeIndex& position, NodeIndex to);

/// d_i(x) for every agent of the instance (0 for idle agents).
/// Throws StructuralError for unknown agents or nodes.
std::map<AgentId, Rational> travel_distances(const Instance& instance, const DistanceOracle& dist,
                                             const Solution& solution);

struct FeasibilityReport {
  bool feasible = true;
  std::string violation;  // first violated constraint, empty when feasible

  explicit operator bool() const { return feasible; }
};

/// Checks capacity, delivery and the existence of a global interleaving of
/// all agents' pickups and drops. Throws StructuralError for unknown
/// agent/package/node references.
FeasibilityReport validate_solution(const Instance& instance, const Solution& solution);

struct CostBreakdown {
  std::map<AgentId, Rational> per_agent;  // w_i * d_i(x)
  Rational total;
};

/// cost(x, w) = sum_i w_i d_i(x). Throws PreconditionError when an agent with
/// nonzero travel has no weight.
CostBreakdown evaluate_cost(const Instance& instance, const DistanceOracle& dist,
                            const Solution& solution, const WeightVector& weights);

/// Same, from precomputed travel distances.
CostBreakdown evaluate_cost(const std::map<AgentId, Rational>& distances,
                            const WeightVector& weights);

}  // namespace delivery
