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

// Delivery algorithms. Every weight-aware algorithm except the oracle and the
// single-package ones follows the same two steps: build a candidate set from
// positions alone, then take the cheapest candidate under the given weights.
// Ties go to the earliest candidate in the (fixed) enumeration order.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delivery/model.hpp"
#include "delivery/schedules.hpp"

namespace delivery {

/// A solution together with its travel distances and its cost under the
/// weights the solver was run with.
struct SolveResult {
  std::string tag;
  Solution solution;
  std::map<AgentId, Rational> distance;
  CostBreakdown cost;
};

/// Builds a SolveResult from a solution, computing distances and cost.
SolveResult make_result(std::string tag, const Instance& instance, const DistanceOracle& dist,
                        Solution solution, const WeightVector& weights);

/// weights[id]; throws PreconditionError when the agent has no weight.
const Rational& weight_of(const WeightVector& weights, AgentId id);

// ---------------------------------------------------------------------------
// Minimum-cost assignment

/// Hungarian method for a rows x cols cost matrix with rows <= cols.
/// Returns the column assigned to every row, minimizing the total cost.
std::vector<int> min_cost_assignment(const std::vector<std::vector<Rational>>& cost);

// ---------------------------------------------------------------------------
// Position-only forest algorithm and A*

struct ForestTerminal {
  enum class Kind { kAgent, kSource, kTarget };
  Kind kind = Kind::kAgent;
  int id = 0;  // agent id or package id
  NodeIndex node = 0;

  friend bool operator==(const ForestTerminal&, const ForestTerminal&) = default;
};

struct ForestEdge {
  ForestTerminal a;
  ForestTerminal b;
  Rational length;
  bool mandatory = false;  // the (s_j, t_j) edge of a package
};

struct AgentTree {
  AgentId agent = 0;
  std::vector<ForestEdge> edges;
  Rational weight() const;
};

/// One tree per agent (possibly edgeless). Every non-degenerate package's
/// mandatory edge lies in exactly one tree.
struct ForestPlan {
  std::vector<AgentTree> trees;
};

/// Minimum spanning forest with one agent per tree, obtained from an MST of
/// the auxiliary graph (virtual root joined to all agents by zero-length
/// edges, every package contracted to a supernode) after deleting the root.
ForestPlan build_forest(const Instance& instance, const DistanceOracle& dist);

/// Each agent walks its tree depth-first from its start, crossing every edge
/// twice and carrying package j exactly when crossing its mandatory edge from
/// s_j to t_j. Weight independent.
Solution solve_apos(const Instance& instance, const DistanceOracle& dist);

struct AStarResult {
  SolveResult chosen;
  std::vector<SolveResult> candidates;  // x_0, then x_{-i} in agent order
};

/// Best of x_0 = A_pos(all agents) and x_{-i} = A_pos(all agents but i).
/// Requires k > 1.
AStarResult solve_astar(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights);

// ---------------------------------------------------------------------------
// Enumerative solvers over direct-delivery-with-return solutions

/// Exact minimum over every list of k lists.
SolveResult solve_am_basic(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights,
                           std::uint64_t cap = kDefaultEnumerationCap);

struct AmImprovedResult {
  SolveResult best;
  /// Optimum over the agents minus i, recorded while enumerating (k > 1).
  std::map<AgentId, SolveResult> without_agent;
};

/// Enumerates sets of lists and assigns lists to agents by a minimum-cost
/// matching, also for every subset of k-1 agents.
AmImprovedResult solve_am_improved(const Instance& instance, const DistanceOracle& dist,
                                   const WeightVector& weights, std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Stacker-Crane tours for one agent

struct ScpArc {
  PackageId package = 0;
  NodeIndex from = 0;
  NodeIndex to = 0;
};

struct ScpInstance {
  NodeIndex depot = 0;
  std::vector<ScpArc> arcs;
};

struct ScpTour {
  std::vector<PackageId> order;
  Rational length;
};

/// The SCP instance of agent `agent` serving `packages`.
ScpInstance make_scp_instance(const Instance& instance, AgentId agent, const PackageList& packages);

/// depot -> arcs in `order` -> depot, along shortest paths.
Rational scp_tour_length(const ScpInstance& scp, const DistanceOracle& dist, const std::vector<PackageId>& order);

/// Exact: tries every arc order (lexicographically smallest optimum).
/// Throws CapExceeded above `arc_cap` arcs.
ScpTour solve_scp_exact(const ScpInstance& scp, const DistanceOracle& dist,
                        std::size_t arc_cap = kDefaultExactScpArcCap);

/// Better of the large-arcs (matching + doubled MST over cycles) and
/// small-arcs (shrunk arcs + Christofides) constructions. Weight independent.
ScpTour solve_scp_approx(const ScpInstance& scp, const DistanceOracle& dist);

/// The two constructions separately.
ScpTour scp_large_arcs(const ScpInstance& scp, const DistanceOracle& dist);
ScpTour scp_small_arcs(const ScpInstance& scp, const DistanceOracle& dist);

enum class ScpMode { kExact, kApprox };

struct AkResult {
  SolveResult chosen;
  Schedule chosen_schedule;
  /// Every candidate, one per list of k package sets, in enumeration order.
  /// Filled only when requested.
  std::vector<Schedule> candidates;
};

/// Enumerates the k^m assignments of packages to agents and orders every
/// agent's set by a Stacker-Crane tour.
AkResult solve_ak(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights,
                  ScpMode mode, bool collect_candidates = false, std::uint64_t cap = kDefaultEnumerationCap);

// ---------------------------------------------------------------------------
// Single package

struct SingleOptimalResult {
  SolveResult result;
  /// Carriers of the returned solution, in carrying order.
  std::vector<AgentId> carriers;
  /// Largest number of carriers over all optimal DP paths.
  int max_optimal_carriers = 0;
};

/// Minimum-cost collaborative delivery of the only package: dynamic program
/// over (package node, last carrier) with carriers in nonincreasing weight
/// order. On equal cost a handover is preferred over skipping a carrier.
/// Requires m = 1.
SingleOptimalResult solve_single_optimal(const Instance& instance, const DistanceOracle& dist,
                                         const WeightVector& weights);

struct LonelyResult {
  SolveResult result;
  AgentId selected = 0;
};

/// Cheapest delivery by one agent alone; ties go to the smaller id.
LonelyResult solve_single_lonely(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights);

// ---------------------------------------------------------------------------
// Ground truth

enum class Collaboration { kAllowed, kForbidden };

/// Exact optimum by Dijkstra over configurations (agent nodes; package node
/// or carrier). With kForbidden a package touched by one agent can never be
/// picked up by another. Throws CapExceeded when the configuration space is
/// larger than `cap`.
SolveResult solve_oracle(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights,
                         Collaboration collaboration, std::uint64_t cap = kDefaultOracleStateCap);

/// Number of configurations solve_oracle would explore at most.
std::uint64_t oracle_state_count(const Instance& instance, Collaboration collaboration);

}  // namespace delivery
