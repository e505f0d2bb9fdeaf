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

#include <gtest/gtest.h>

#include "delivery/analysis.hpp"
#include "delivery/io.hpp"

namespace delivery::analysis {
namespace {

TEST(Generators, Deterministic) {
  const RandomSpec spec;
  for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
    EXPECT_EQ(io::instance_to_json(gen_random(seed, spec)), io::instance_to_json(gen_random(seed, spec)));
    EXPECT_EQ(io::instance_to_json(gen_relay(seed)), io::instance_to_json(gen_relay(seed)));
  }
  EXPECT_NE(io::instance_to_json(gen_random(1, spec)), io::instance_to_json(gen_random(2, spec)));
}

TEST(Generators, RandomRespectsSpec) {
  RandomSpec spec;
  spec.n_min = 4;
  spec.n_max = 5;
  spec.k_min = 2;
  spec.k_max = 3;
  spec.m_min = 2;
  spec.m_max = 2;
  for (const auto& e : make_corpus(0, 50, spec)) {
    const Instance& inst = e.instance;
    EXPECT_GE(inst.graph().num_nodes(), 4);
    EXPECT_LE(inst.graph().num_nodes(), 5);
    EXPECT_GE(inst.num_agents(), 2);
    EXPECT_LE(inst.num_agents(), 3);
    EXPECT_EQ(inst.num_packages(), 2);
    EXPECT_TRUE(inst.graph().is_connected());
    std::set<NodeIndex> starts;
    for (const AgentSpec& a : inst.agents()) {
      starts.insert(a.start);
      EXPECT_GT(a.weight, Rational(0));
    }
    EXPECT_EQ(starts.size(), inst.agents().size());
  }
}

TEST(Families, PathClosedForms) {
  for (int k = 1; k <= 12; ++k) {
    const Instance inst = gen_path_family(k);
    const DistanceOracle d = all_pairs_distances(inst);
    EXPECT_EQ(solve_single_optimal(inst, d, inst.weights()).result.cost.total, harmonic(2 * k) - harmonic(k));
    EXPECT_EQ(solve_single_lonely(inst, d, inst.weights()).result.cost.total, Rational(k, k + 1));
  }
}

TEST(Families, MonopolyPaysLOverEps) {
  const Instance inst = gen_monopoly_example(Rational(1, 4), Rational(3), Rational(2));
  const FrugalityReport r = audit_frugality(inst);
  EXPECT_FALSE(r.monopoly_free);
  EXPECT_EQ(r.opt, Rational(1, 2));
  EXPECT_EQ(r.opt_total_payment, Rational(6));
  EXPECT_EQ(*r.opt_ratio, Rational(12));
  EXPECT_FALSE(r.opt_bound_holds);
}

TEST(Families, RelayIsMostlyMonopolyFree) {
  int free = 0;
  for (const auto& e : make_relay_corpus(0, 60)) free += audit_frugality(e.instance).monopoly_free ? 1 : 0;
  EXPECT_GE(free, 20);
}

TEST(Figures, Figure2Numbers) {
  const Instance inst = fig2_instance();
  const DistanceOracle d = all_pairs_distances(inst);
  const BocReport r = measure_boc(inst);
  EXPECT_EQ(r.opt, Rational(46));
  EXPECT_EQ(r.noc, Rational(47));
  EXPECT_EQ(r.rstar, Rational(72));
  const Solution x = fig2_collaborative_solution();
  EXPECT_TRUE(validate_solution(inst, x));
  EXPECT_EQ(evaluate_cost(inst, d, x, inst.weights()).total, Rational(46));
  EXPECT_EQ(evaluate_cost(inst, d, realize_schedule(inst, d, fig2_direct_schedule()), inst.weights()).total,
            Rational(72));
}

TEST(Audits, SmallCorpusHasNoFailures) {
  for (const auto& e : make_corpus(40, 15, RandomSpec{})) {
    std::vector<AuditRecord> all;
    for (MechanismKind k : all_mechanisms()) {
      for (auto& r : audit_truthfulness(e, k)) all.push_back(r);
      for (auto& r : audit_vp(e, k)) all.push_back(r);
    }
    for (auto& r : audit_ratios(e)) all.push_back(r);
    for (auto& r : audit_boc(e)) all.push_back(r);
    for (auto& r : audit_frugality_records(e)) all.push_back(r);
    for (const AuditRecord& r : all) {
      EXPECT_FALSE(is_failure(r)) << to_json(r).dump();
      const io::Json j = to_json(r);
      EXPECT_TRUE(j.contains("check"));
      EXPECT_TRUE(j.contains("result"));
    }
  }
}

TEST(Audits, NaivePaymentsHaveWitness) {
  bool found = false;
  for (const auto& e : make_corpus(0, 40, RandomSpec{})) {
    for (const AuditRecord& r : audit_truthfulness(e, MechanismKind::kAposNaive)) {
      EXPECT_FALSE(is_failure(r));
      if (r.result == CheckResult::kWitness) {
        found = true;
        EXPECT_TRUE(r.witness.has_value());
      }
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace delivery::analysis
