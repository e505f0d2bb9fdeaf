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

// VCG payments with the Clarke pivot on top of the solvers.
//
//   P_i = Q_i(w'_{-i}) - sum_{j != i} w'_j d_j(A(w'))
//   Q_i(w'_{-i}) = cost(A(bot, w'_{-i}), w'_{-i})
//
// where A(bot, w'_{-i}) is the mechanism's own fallback on the instance
// without agent i.

#pragma once

#include <map>
#include <optional>
#include <string>

#include "delivery/io.hpp"
#include "delivery/solvers.hpp"

namespace delivery {

enum class MechanismKind {
  kAStar,
  kAm,
  kAkExact,
  kAkApprox,
  kSingleOptimal,
  kSingleLonely,
  kAposNaive,  // A_pos with floored payments; not truthful, kept for audits
};

std::string to_string(MechanismKind kind);
/// Accepts astar, am, ak-exact, ak-approx, single-opt, single-lonely, apos-naive.
std::optional<MechanismKind> parse_mechanism(const std::string& name);
const std::vector<MechanismKind>& all_mechanisms();
/// True for kSingleOptimal and kSingleLonely (m = 1 only).
bool is_single_package(MechanismKind kind);

struct MechanismOutcome {
  MechanismKind kind = MechanismKind::kAStar;
  /// A(w'), with costs under the reported weights.
  SolveResult chosen;
  /// A(bot, w'_{-i}) on the instance without i, costed under w'_{-i}.
  std::map<AgentId, SolveResult> fallback;
  std::map<AgentId, Rational> pivots;     // Q_i
  std::map<AgentId, Rational> payments;   // P_i
  std::map<AgentId, Rational> utilities;  // P_i - w_i d_i under the evaluation weights
  Rational total_payment;
  Rational social_cost;  // sum_i w_i d_i under the evaluation weights
};

/// The weight-aware algorithm of a mechanism alone.
SolveResult run_algorithm(MechanismKind kind, const Instance& instance, const DistanceOracle& dist,
                          const WeightVector& weights, std::uint64_t cap = kDefaultEnumerationCap);

/// Runs the mechanism on reported weights and evaluates utilities under
/// `truth`. Requires at least two agents; the single-package kinds also
/// require m = 1.
MechanismOutcome run_mechanism(MechanismKind kind, const Instance& instance, const DistanceOracle& dist,
                               const WeightVector& reported, const WeightVector& truth,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// Same with truthful reports.
MechanismOutcome run_mechanism(MechanismKind kind, const Instance& instance, const DistanceOracle& dist,
                               const WeightVector& truth, std::uint64_t cap = kDefaultEnumerationCap);

io::Json outcome_to_json(const MechanismOutcome& outcome, const Instance& instance, int decimal_digits = -1);

}  // namespace delivery
