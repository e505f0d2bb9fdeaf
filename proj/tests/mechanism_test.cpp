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
#include "delivery/mechanism.hpp"
#include "support.hpp"

namespace delivery {
namespace {

analysis::AuditCorpus corpus(int count) { return analysis::make_corpus(300, count, analysis::RandomSpec{}); }

std::vector<MechanismKind> applicable(const Instance& inst) {
  std::vector<MechanismKind> out;
  for (MechanismKind k : all_mechanisms()) {
    if (!is_single_package(k) || inst.num_packages() == 1) out.push_back(k);
  }
  return out;
}

TEST(Names, RoundTrip) {
  for (MechanismKind k : all_mechanisms()) EXPECT_EQ(parse_mechanism(to_string(k)), k);
  EXPECT_FALSE(parse_mechanism("vickrey").has_value());
}

// sum_i P_i = sum_i Q_i - (k - 1) cost(x, w') for Clarke payments.
TEST(Payments, DecomposeIntoPivotsAndCost) {
  for (const auto& e : corpus(40)) {
    const DistanceOracle d = all_pairs_distances(e.instance);
    for (MechanismKind kind : applicable(e.instance)) {
      if (kind == MechanismKind::kAposNaive) continue;
      const MechanismOutcome out = run_mechanism(kind, e.instance, d, e.instance.weights());
      Rational pivots;
      for (const auto& [id, q] : out.pivots) pivots += q;
      const int k = e.instance.num_agents();
      EXPECT_EQ(out.total_payment, pivots - Rational(k - 1) * out.chosen.cost.total)
          << to_string(kind) << " seed " << e.seed;
      EXPECT_EQ(out.social_cost, out.chosen.cost.total);
    }
  }
}

// Pivots of A^m against the brute force on the reduced instance.
TEST(Payments, AmPivotsAreReducedOptima) {
  for (const auto& e : corpus(30)) {
    const DistanceOracle d = all_pairs_distances(e.instance);
    const auto matrix = testing::bellman_ford_apsp(e.instance.graph());
    const MechanismOutcome out = run_mechanism(MechanismKind::kAm, e.instance, d, e.instance.weights());
    for (const AgentSpec& a : e.instance.agents()) {
      WeightVector w = e.instance.weights();
      w.erase(a.id);
      EXPECT_EQ(out.pivots.at(a.id), testing::brute_rstar(e.instance.without_agent(a.id), matrix, w));
    }
  }
}

TEST(Payments, ReportedVersusTrueWeights) {
  const Instance inst = analysis::fig4_left();
  const DistanceOracle d = all_pairs_distances(inst);
  WeightVector lie = inst.weights();
  lie[2] = Rational(12);
  const MechanismOutcome out = run_mechanism(MechanismKind::kSingleOptimal, inst, d, lie, inst.weights());
  // Utility uses the true weight, payment the reported profile.
  const Rational& dist2 = out.chosen.distance.at(2);
  EXPECT_EQ(out.utilities.at(2), out.payments.at(2) - inst.weights().at(2) * dist2);
}

TEST(Payments, Figure3AStar) {
  const Instance inst = analysis::fig3_scenario();
  const DistanceOracle d = all_pairs_distances(inst);
  const AStarResult star = solve_astar(inst, d, inst.weights());
  std::vector<Rational> costs;
  for (const SolveResult& c : star.candidates) costs.push_back(c.cost.total);
  EXPECT_EQ(costs, (std::vector<Rational>{46, 46, 10, 160}));
  EXPECT_EQ(star.chosen.tag, "x-2");
  const MechanismOutcome out = run_mechanism(MechanismKind::kAStar, inst, d, inst.weights());
  EXPECT_EQ(out.payments.at(1), Rational(40));
  EXPECT_EQ(out.payments.at(2), Rational(0));
  EXPECT_EQ(out.payments.at(3), Rational(156));
}

TEST(Payments, Figure4) {
  for (const auto& [inst, opt, payments, lonely] :
       {std::tuple{analysis::fig4_left(), Rational(37), std::vector<Rational>{12, 15, 24}, Rational(48)},
        std::tuple{analysis::fig4_right(), Rational(38), std::vector<Rational>{20, 18, 10}, Rational(50)}}) {
    const DistanceOracle d = all_pairs_distances(inst);
    const MechanismOutcome o = run_mechanism(MechanismKind::kSingleOptimal, inst, d, inst.weights());
    EXPECT_EQ(o.chosen.cost.total, opt);
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(o.payments.at(i), payments[static_cast<std::size_t>(i - 1)]);
    EXPECT_EQ(run_mechanism(MechanismKind::kSingleLonely, inst, d, inst.weights()).total_payment, lonely);
  }
}

TEST(Truthfulness, UtilityNeverImprovesOnGrid) {
  for (const auto& e : corpus(25)) {
    const DistanceOracle d = all_pairs_distances(e.instance);
    const WeightVector truth = e.instance.weights();
    for (MechanismKind kind : applicable(e.instance)) {
      if (kind == MechanismKind::kAposNaive) continue;
      const MechanismOutcome honest = run_mechanism(kind, e.instance, d, truth);
      for (const AgentSpec& a : e.instance.agents()) {
        EXPECT_GE(honest.utilities.at(a.id), Rational(0));
        for (const Rational& f : analysis::misreport_factors()) {
          WeightVector lie = truth;
          lie[a.id] = truth.at(a.id) * f;
          const MechanismOutcome o = run_mechanism(kind, e.instance, d, lie, truth);
          EXPECT_LE(o.utilities.at(a.id), honest.utilities.at(a.id))
              << to_string(kind) << " seed " << e.seed << " agent " << a.id << " factor " << f;
        }
      }
    }
  }
}

TEST(Preconditions, Rejected) {
  const Instance one_agent(Graph({"a", "b"}, {{0, 1, Rational(1)}}), {{1, 0, Rational(1)}}, {{1, 0, 1}});
  const DistanceOracle d = all_pairs_distances(one_agent);
  EXPECT_THROW(run_mechanism(MechanismKind::kAm, one_agent, d, one_agent.weights()), PreconditionError);
  const Instance fig2 = analysis::fig2_instance();
  EXPECT_THROW(run_mechanism(MechanismKind::kSingleOptimal, fig2, all_pairs_distances(fig2), fig2.weights()),
               PreconditionError);
  WeightVector missing = fig2.weights();
  missing.erase(1);
  EXPECT_THROW(run_mechanism(MechanismKind::kAm, fig2, all_pairs_distances(fig2), missing), PreconditionError);
}

TEST(Json, OutcomeKeys) {
  const Instance inst = analysis::fig4_left();
  const MechanismOutcome o = run_mechanism(MechanismKind::kSingleOptimal, inst, all_pairs_distances(inst), inst.weights());
  const io::Json j = outcome_to_json(o, inst, 6);
  for (const char* key : {"mechanism", "solution", "payments", "pivots", "utilities", "total_payment", "social_cost",
                          "total_payment_decimal"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["total_payment"], "51");
}

}  // namespace
}  // namespace delivery
