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

// Instance families, figure replicas, and the audit harness.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "delivery/mechanism.hpp"

namespace delivery::analysis {

// ---------------------------------------------------------------------------
// Constants

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return !(x < lo) && !(hi < x); }
};

/// Encloses ln 2 via sum_{n>=1} 1/(n 2^n); the width is below 2^-terms.
/// The default is good for more than 50 decimal digits.
Interval ln2_interval(int terms = 200);
/// Encloses 1/ln 2.
Interval inv_ln2_interval(int terms = 200);

/// H_n = 1 + 1/2 + ... + 1/n.
Rational harmonic(int n);

// ---------------------------------------------------------------------------
// Families

/// Unit path 0..k, one package 0 -> k, agent i at node i-1 with weight
/// 1/(k+i).
Instance gen_path_family(int k);

/// Two agents on the package source with weights eps and L; the package
/// travels distance D.
Instance gen_monopoly_example(const Rational& eps, const Rational& L, const Rational& D);

struct RandomSpec {
  int n_min = 3, n_max = 6;
  int k_min = 2, k_max = 3;
  int m_min = 1, m_max = 2;
  int max_len = 10;        // edge lengths 1..max_len
  int max_weight_num = 16; // weights p/q with p in 1..max_weight_num
  int max_weight_den = 8;  // and q in 1..max_weight_den
};

/// Connected Erdos-Renyi graph (p = 1/2, resampled until connected),
/// distinct agent starts, uniform package endpoints. Deterministic in seed.
Instance gen_random(std::uint64_t seed, const RandomSpec& spec);

/// One package along a path with random lengths; agents sit on the path in
/// order with weights that shrink by at most half per step, so handovers
/// pay off and most instances are monopoly-free.
Instance gen_relay(std::uint64_t seed, int n_min = 3, int n_max = 8, int k_max = 4);

struct CorpusEntry {
  std::uint64_t seed = 0;
  std::string family;
  Instance instance;
};

using AuditCorpus = std::vector<CorpusEntry>;

/// `count` random instances with seeds base_seed, base_seed+1, ...
AuditCorpus make_corpus(std::uint64_t base_seed, int count, const RandomSpec& spec);
/// `count` relay instances, family "relay".
AuditCorpus make_relay_corpus(std::uint64_t base_seed, int count);

// ---------------------------------------------------------------------------
// Figure replicas. Topologies are reconstructions; the numbers quoted for
// the figures hold on them exactly.

/// Two agents (weights 2 and 3), three packages: optimum 46, best
/// non-collaborative 47, best direct-delivery-with-return 72.
Instance fig2_instance();
/// A 46-cost solution of fig2_instance in which package 2 changes hands.
Solution fig2_collaborative_solution();
/// The 72-cost schedule: the weight-2 agent delivers everything.
Schedule fig2_direct_schedule();

/// Three agents on a line, two packages; A_pos costs (x0, x-1, x-2, x-3) =
/// (46, 46, 10, 160).
Instance fig3_scenario();

/// Single-package paths where the optimal and the lonely mechanism differ in
/// total payment (51 vs 48, and 48 vs 50).
Instance fig4_left();
Instance fig4_right();

struct NamedInstance {
  std::string name;
  Instance instance;
};
std::vector<NamedInstance> figure_replicas();

// ---------------------------------------------------------------------------
// Audits

/// The misreport grid as multiples of the true weight: 0, 1/8, 1/2, 7/8,
/// 9/8, 2, 8.
const std::vector<Rational>& misreport_factors();

enum class CheckResult { kPass, kFail, kWitness, kNoWitness, kSkipped };
std::string to_string(CheckResult r);

struct AuditRecord {
  std::string check;
  std::uint64_t instance_seed = 0;
  std::string mechanism;           // empty when not mechanism specific
  std::optional<AgentId> agent;
  CheckResult result = CheckResult::kPass;
  std::string detail;
  std::optional<io::Json> witness;
};

io::Json to_json(const AuditRecord& r);
/// kFail only; witnesses for the naive A_pos payments are expected.
bool is_failure(const AuditRecord& r);

/// One record per agent. For every grid misreport of that agent (others
/// truthful), u_i(truth) >= u_i(lie) must hold. For kAposNaive a strictly
/// profitable lie is reported as kWitness.
std::vector<AuditRecord> audit_truthfulness(const CorpusEntry& entry, MechanismKind kind,
                                            std::uint64_t cap = kDefaultEnumerationCap);

/// One record per agent: truthful utility >= 0 and
/// cost(A(w'), w') <= cost(A(bot, w'_{-i}), w'). Informational for kAposNaive.
std::vector<AuditRecord> audit_vp(const CorpusEntry& entry, MechanismKind kind,
                                  std::uint64_t cap = kDefaultEnumerationCap);

struct FrugalityReport {
  Rational opt;
  std::map<AgentId, Rational> opt_minus;
  Rational lopt;
  std::map<AgentId, Rational> lopt_minus;
  AgentId lonely_selected = 0;
  std::map<AgentId, Rational> opt_payments;
  Rational opt_total_payment;
  Rational lonely_total_payment;
  std::optional<Rational> opt_ratio;     // total / OPT, absent when OPT = 0
  std::optional<Rational> lonely_ratio;
  bool monopoly_free = false;
  /// OPT_{-i} <= OPT + w_i d_i for every agent the optimum uses.
  std::map<AgentId, bool> removal_bound;
  bool opt_bound_holds = true;     // sum P <= 2 OPT
  bool lonely_bound_holds = true;  // P <= (2 / ln 2) OPT
};

/// m = 1, k > 1.
FrugalityReport audit_frugality(const Instance& instance);
io::Json to_json(const FrugalityReport& r);

struct BocReport {
  Rational opt;
  Rational noc;    // best without collaboration
  Rational rstar;  // best direct delivery with return
  std::optional<Rational> boc;
  std::optional<Rational> boc_star;
  bool boc_le_boc_star = true;
  bool boc_star_le_2 = true;
  bool single_le_inv_ln2 = true;  // only meaningful for m = 1
};

BocReport measure_boc(const Instance& instance, std::uint64_t oracle_cap = kDefaultOracleStateCap);
io::Json to_json(const BocReport& r);

/// Records for the approximation checks against the oracle optimum.
std::vector<AuditRecord> audit_ratios(const CorpusEntry& entry, std::uint64_t cap = kDefaultEnumerationCap);
/// Records for the collaboration checks.
std::vector<AuditRecord> audit_boc(const CorpusEntry& entry);
/// Records for the single-package frugality checks (m = 1 only).
std::vector<AuditRecord> audit_frugality_records(const CorpusEntry& entry);

}  // namespace delivery::analysis
