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

#include "delivery/mechanism.hpp"

namespace delivery {
namespace {

struct NamedKind {
  MechanismKind kind;
  const char* name;
};

constexpr NamedKind kNames[] = {
    {MechanismKind::kAStar, "astar"},
    {MechanismKind::kAm, "am"},
    {MechanismKind::kAkExact, "ak-exact"},
    {MechanismKind::kAkApprox, "ak-approx"},
    {MechanismKind::kSingleOptimal, "single-opt"},
    {MechanismKind::kSingleLonely, "single-lonely"},
    {MechanismKind::kAposNaive, "apos-naive"},
};

WeightVector without(const WeightVector& w, AgentId id) {
  WeightVector out = w;
  out.erase(id);
  return out;
}

SolveResult recost(const SolveResult& r, const Instance& instance, const DistanceOracle& dist,
                   const WeightVector& weights) {
  return make_result(r.tag, instance, dist, r.solution, weights);
}

}  // namespace

std::string to_string(MechanismKind kind) {
  for (const NamedKind& n : kNames) {
    if (n.kind == kind) return n.name;
  }
  return "unknown";
}

std::optional<MechanismKind> parse_mechanism(const std::string& name) {
  for (const NamedKind& n : kNames) {
    if (name == n.name) return n.kind;
  }
  return std::nullopt;
}

const std::vector<MechanismKind>& all_mechanisms() {
  static const std::vector<MechanismKind> kinds = [] {
    std::vector<MechanismKind> out;
    for (const NamedKind& n : kNames) out.push_back(n.kind);
    return out;
  }();
  return kinds;
}

bool is_single_package(MechanismKind kind) {
  return kind == MechanismKind::kSingleOptimal || kind == MechanismKind::kSingleLonely;
}

SolveResult run_algorithm(MechanismKind kind, const Instance& instance, const DistanceOracle& dist,
                          const WeightVector& weights, std::uint64_t cap) {
  switch (kind) {
    case MechanismKind::kAStar:
      return solve_astar(instance, dist, weights).chosen;
    case MechanismKind::kAm:
      return solve_am_improved(instance, dist, weights, cap).best;
    case MechanismKind::kAkExact:
      return solve_ak(instance, dist, weights, ScpMode::kExact, false, cap).chosen;
    case MechanismKind::kAkApprox:
      return solve_ak(instance, dist, weights, ScpMode::kApprox, false, cap).chosen;
    case MechanismKind::kSingleOptimal:
      return solve_single_optimal(instance, dist, weights).result;
    case MechanismKind::kSingleLonely:
      return solve_single_lonely(instance, dist, weights).result;
    case MechanismKind::kAposNaive:
      return make_result("apos", instance, dist, solve_apos(instance, dist), weights);
  }
  throw PreconditionError("unknown mechanism");
}

MechanismOutcome run_mechanism(MechanismKind kind, const Instance& instance, const DistanceOracle& dist,
                               const WeightVector& reported, const WeightVector& truth, std::uint64_t cap) {
  if (instance.num_agents() < 2) throw PreconditionError("a mechanism needs at least two agents");
  if (is_single_package(kind) && instance.num_packages() != 1) {
    throw PreconditionError(to_string(kind) + " needs exactly one package");
  }
  MechanismOutcome out;
  out.kind = kind;

  // A(w') and the fallbacks A(bot, w'_{-i}). A* and A^m obtain the fallbacks
  // from the same run.
  switch (kind) {
    case MechanismKind::kAStar: {
      AStarResult r = solve_astar(instance, dist, reported);
      out.chosen = r.chosen;
      for (std::size_t a = 0; a < instance.agents().size(); ++a) {
        const AgentId id = instance.agents()[a].id;
        out.fallback.emplace(id, recost(r.candidates[a + 1], instance.without_agent(id), dist, without(reported, id)));
      }
      break;
    }
    case MechanismKind::kAm: {
      AmImprovedResult r = solve_am_improved(instance, dist, reported, cap);
      out.chosen = r.best;
      out.fallback = std::move(r.without_agent);
      break;
    }
    case MechanismKind::kAposNaive:
      out.chosen = run_algorithm(kind, instance, dist, reported, cap);
      for (const AgentSpec& a : instance.agents()) {
        const Instance reduced = instance.without_agent(a.id);
        out.fallback.emplace(a.id, make_result("apos", reduced, dist, solve_apos(reduced, dist), without(reported, a.id)));
      }
      break;
    default:
      out.chosen = run_algorithm(kind, instance, dist, reported, cap);
      for (const AgentSpec& a : instance.agents()) {
        out.fallback.emplace(a.id, run_algorithm(kind, instance.without_agent(a.id), dist, without(reported, a.id), cap));
      }
      break;
  }

  for (const AgentSpec& a : instance.agents()) {
    const Rational& q = out.fallback.at(a.id).cost.total;
    Rational others;
    for (const auto& [id, d] : out.chosen.distance) {
      if (id != a.id && !d.is_zero()) others += weight_of(reported, id) * d;
    }
    Rational p = q - others;
    const Rational& d = out.chosen.distance.at(a.id);
    if (kind == MechanismKind::kAposNaive) {
      // Floor at the reported energy so a truthful agent never loses money.
      p = max(p, d.is_zero() ? Rational(0) : weight_of(reported, a.id) * d);
    }
    out.pivots.emplace(a.id, q);
    out.total_payment += p;
    const Rational energy = d.is_zero() ? Rational(0) : weight_of(truth, a.id) * d;
    out.social_cost += energy;
    out.utilities.emplace(a.id, p - energy);
    out.payments.emplace(a.id, std::move(p));
  }
  return out;
}

MechanismOutcome run_mechanism(MechanismKind kind, const Instance& instance, const DistanceOracle& dist,
                               const WeightVector& truth, std::uint64_t cap) {
  return run_mechanism(kind, instance, dist, truth, truth, cap);
}

io::Json outcome_to_json(const MechanismOutcome& outcome, const Instance& instance, int decimal_digits) {
  auto per_agent = [](const std::map<AgentId, Rational>& m) {
    io::Json j = io::Json::object();
    for (const auto& [id, r] : m) j[std::to_string(id)] = r.str();
    return j;
  };
  io::Json distances = per_agent(outcome.chosen.distance);
  io::Json out = {
      {"mechanism", to_string(outcome.kind)},
      {"solution_tag", outcome.chosen.tag},
      {"solution", io::solution_to_json(outcome.chosen.solution, instance)},
      {"distances", distances},
      {"reported_cost", outcome.chosen.cost.total.str()},
      {"payments", per_agent(outcome.payments)},
      {"pivots", per_agent(outcome.pivots)},
      {"utilities", per_agent(outcome.utilities)},
      {"total_payment", outcome.total_payment.str()},
      {"social_cost", outcome.social_cost.str()},
  };
  if (decimal_digits >= 0) {
    out["total_payment_decimal"] = outcome.total_payment.decimal(decimal_digits);
    out["social_cost_decimal"] = outcome.social_cost.decimal(decimal_digits);
  }
  return out;
}

}  // namespace delivery
