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

#include "delivery/analysis.hpp"

#include <algorithm>
#include <random>

namespace delivery::analysis {
namespace {

// Uniform integer in [lo, hi] by rejection, independent of the standard
// library's distribution implementation.
int uniform(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

std::vector<std::string> numbered(int n, const char* prefix) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

Instance path_instance(const std::vector<std::pair<std::string, Rational>>& stops, std::vector<AgentSpec> agents,
                       std::vector<PackageSpec> packages) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < stops.size(); ++i) {
    names.push_back(stops[i].first);
    if (i > 0) edges.push_back({static_cast<NodeIndex>(i - 1), static_cast<NodeIndex>(i), stops[i].second});
  }
  return Instance(Graph(std::move(names), std::move(edges)), std::move(agents), std::move(packages));
}

WeightVector scaled(const WeightVector& w, AgentId id, const Rational& factor) {
  WeightVector out = w;
  out[id] = out.at(id) * factor;
  return out;
}

AuditRecord record(std::string check, const CorpusEntry& entry, MechanismKind kind, std::optional<AgentId> agent) {
  AuditRecord r;
  r.check = std::move(check);
  r.instance_seed = entry.seed;
  r.mechanism = to_string(kind);
  r.agent = agent;
  return r;
}

AuditRecord record(std::string check, const CorpusEntry& entry) {
  AuditRecord r;
  r.check = std::move(check);
  r.instance_seed = entry.seed;
  return r;
}

AuditRecord bound(AuditRecord r, const Rational& lhs, const char* op, const Rational& rhs, bool ok) {
  r.result = ok ? CheckResult::kPass : CheckResult::kFail;
  r.detail = lhs.str() + " " + op + " " + rhs.str();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

Interval ln2_interval(int terms) {
  // ln 2 = sum 1/(n 2^n); the tail after N terms is below 1/((N+1) 2^N).
  Rational sum;
  Rational pow2(1);
  for (int n = 1; n <= terms; ++n) {
    pow2 *= Rational(2);
    sum += Rational(1) / (Rational(n) * pow2);
  }
  return {sum, sum + Rational(1) / (Rational(terms + 1) * pow2)};
}

Interval inv_ln2_interval(int terms) {
  const Interval l = ln2_interval(terms);
  return {Rational(1) / l.hi, Rational(1) / l.lo};
}

Rational harmonic(int n) {
  Rational h;
  for (int i = 1; i <= n; ++i) h += Rational(1, i);
  return h;
}

Instance gen_path_family(int k) {
  if (k < 1) throw PreconditionError("path family needs k >= 1");
  std::vector<std::pair<std::string, Rational>> stops;
  for (int i = 0; i <= k; ++i) stops.emplace_back("v" + std::to_string(i), Rational(1));
  std::vector<AgentSpec> agents;
  for (int i = 1; i <= k; ++i) agents.push_back({i, i - 1, Rational(1, k + i)});
  return path_instance(stops, std::move(agents), {{1, 0, k}});
}

Instance gen_monopoly_example(const Rational& eps, const Rational& L, const Rational& D) {
  if (!(Rational(0) < D)) throw PreconditionError("monopoly example needs D > 0");
  if (eps.sign() < 0 || L.sign() < 0) throw PreconditionError("weights must be nonnegative");
  return path_instance({{"s", Rational(0)}, {"t", D}}, {{1, 0, eps}, {2, 0, L}}, {{1, 0, 1}});
}

Instance gen_random(std::uint64_t seed, const RandomSpec& spec) {
  std::mt19937_64 rng(seed);
  const int n = uniform(rng, spec.n_min, spec.n_max);
  const int k = uniform(rng, spec.k_min, std::min(spec.k_max, n));
  const int m = uniform(rng, spec.m_min, spec.m_max);

  std::vector<Edge> edges;
  for (int attempt = 0;; ++attempt) {
    edges.clear();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (uniform(rng, 0, 1) == 1) edges.push_back({u, v, Rational(uniform(rng, 1, spec.max_len))});
      }
    }
    if (Graph(numbered(n, "v"), edges).is_connected()) break;
  }
  Graph graph(numbered(n, "v"), edges);

  std::vector<NodeIndex> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(uniform(rng, 0, i))]);
  std::vector<AgentSpec> agents;
  for (int i = 0; i < k; ++i) {
    agents.push_back({i + 1, nodes[static_cast<std::size_t>(i)],
                      Rational(uniform(rng, 1, spec.max_weight_num), uniform(rng, 1, spec.max_weight_den))});
  }
  std::vector<PackageSpec> packages;
  for (int j = 0; j < m; ++j) packages.push_back({j + 1, uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)});
  return Instance(std::move(graph), std::move(agents), std::move(packages));
}

AuditCorpus make_corpus(std::uint64_t base_seed, int count, const RandomSpec& spec) {
  AuditCorpus corpus;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    corpus.push_back({seed, "random", gen_random(seed, spec)});
  }
  return corpus;
}

Instance gen_relay(std::uint64_t seed, int n_min, int n_max, int k_max) {
  std::mt19937_64 rng(seed);
  const int n = uniform(rng, std::max(n_min, 2), n_max);
  const int k = uniform(rng, 2, std::min(k_max, n));
  std::vector<std::pair<std::string, Rational>> stops;
  for (int i = 0; i < n; ++i) stops.emplace_back("v" + std::to_string(i), Rational(uniform(rng, 1, 10)));
  // k distinct positions in increasing order; the first agent may start
  // anywhere before the others.
  std::vector<NodeIndex> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(uniform(rng, 0, i))]);
  nodes.resize(static_cast<std::size_t>(k));
  std::sort(nodes.begin(), nodes.end());
  std::vector<AgentSpec> agents;
  Rational w(uniform(rng, 8, 16));
  for (int i = 0; i < k; ++i) {
    agents.push_back({i + 1, nodes[static_cast<std::size_t>(i)], w});
    w *= Rational(uniform(rng, 4, 8), 8);
  }
  return path_instance(stops, std::move(agents), {{1, 0, n - 1}});
}

AuditCorpus make_relay_corpus(std::uint64_t base_seed, int count) {
  AuditCorpus corpus;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
    corpus.push_back({seed, "relay", gen_relay(seed)});
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Figure replicas

Instance fig2_instance() {
  // A tree rooted at h: h-a 1, h-b 3, h-c 7, a-d 1, a-e 4.
  std::vector<std::string> names{"h", "a", "b", "d", "e", "c"};
  std::vector<Edge> edges{{0, 1, Rational(1)}, {0, 2, Rational(3)}, {0, 5, Rational(7)},
                          {1, 3, Rational(1)}, {1, 4, Rational(4)}};
  std::vector<AgentSpec> agents{{1, 5, Rational(2)}, {2, 0, Rational(3)}};
  std::vector<PackageSpec> packages{{1, 5, 4}, {2, 2, 3}, {3, 0, 1}};
  return Instance(Graph(std::move(names), std::move(edges)), std::move(agents), std::move(packages));
}

Solution fig2_collaborative_solution() {
  // Nodes: h 0, a 1, b 2, d 3, e 4, c 5. Agent 1 leaves package 2 at h for
  // agent 2 and parks package 1 there while it handles package 3.
  using A = Action;
  Solution s;
  s.itineraries[1] = {A::pickup(1), A::move(0), A::drop(1), A::move(2), A::pickup(2), A::move(0), A::drop(2),
                      A::pickup(3), A::move(1), A::drop(3), A::move(0), A::pickup(1), A::move(1), A::move(4),
                      A::drop(1)};
  s.itineraries[2] = {A::pickup(2), A::move(1), A::move(3), A::drop(2)};
  return s;
}

Schedule fig2_direct_schedule() { return {{{1, 2, 3}, {}}}; }

Instance fig3_scenario() {
  return path_instance({{"p1", Rational(0)}, {"sa", Rational(1)}, {"ta", Rational(1)}, {"sb", Rational(2)},
                        {"tb", Rational(1)}},
                       {{1, 0, Rational(1)}, {2, 1, Rational(20)}, {3, 3, Rational(3)}}, {{1, 1, 2}, {2, 3, 4}});
}

Instance fig4_left() {
  return path_instance({{"u0", Rational(0)}, {"u1", Rational(1)}, {"u3", Rational(2)}, {"u7", Rational(4)}},
                       {{1, 0, Rational(9)}, {2, 1, Rational(6)}, {3, 2, Rational(4)}}, {{1, 0, 3}});
}

Instance fig4_right() {
  return path_instance({{"u0", Rational(0)}, {"u2", Rational(2)}, {"u4", Rational(2)}, {"u6", Rational(2)}},
                       {{1, 0, Rational(9)}, {2, 1, Rational(5)}, {3, 2, Rational(5)}}, {{1, 0, 3}});
}

std::vector<NamedInstance> figure_replicas() {
  return {{"fig2", fig2_instance()},
          {"fig3-scenario", fig3_scenario()},
          {"fig4-left", fig4_left()},
          {"fig4-right", fig4_right()}};
}

// ---------------------------------------------------------------------------
// Audits

const std::vector<Rational>& misreport_factors() {
  static const std::vector<Rational> grid{Rational(0),    Rational(1, 8), Rational(1, 2), Rational(7, 8),
                                          Rational(9, 8), Rational(2),    Rational(8)};
  return grid;
}

std::string to_string(CheckResult r) {
  switch (r) {
    case CheckResult::kPass: return "pass";
    case CheckResult::kFail: return "fail";
    case CheckResult::kWitness: return "witness";
    case CheckResult::kNoWitness: return "no-witness";
    case CheckResult::kSkipped: return "skipped";
  }
  return "unknown";
}

io::Json to_json(const AuditRecord& r) {
  io::Json j = {{"check", r.check}, {"instance_seed", r.instance_seed}};
  j["mechanism"] = r.mechanism.empty() ? io::Json(nullptr) : io::Json(r.mechanism);
  j["agent"] = r.agent ? io::Json(*r.agent) : io::Json(nullptr);
  j["result"] = to_string(r.result);
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

bool is_failure(const AuditRecord& r) { return r.result == CheckResult::kFail; }

std::vector<AuditRecord> audit_truthfulness(const CorpusEntry& entry, MechanismKind kind, std::uint64_t cap) {
  const Instance& inst = entry.instance;
  std::vector<AuditRecord> out;
  if (is_single_package(kind) && inst.num_packages() != 1) return out;
  const DistanceOracle dist = all_pairs_distances(inst);
  const WeightVector truth = inst.weights();
  const MechanismOutcome honest = run_mechanism(kind, inst, dist, truth, cap);
  for (const AgentSpec& a : inst.agents()) {
    AuditRecord r = record("truthfulness", entry, kind, a.id);
    const Rational& u_truth = honest.utilities.at(a.id);
    for (const Rational& f : misreport_factors()) {
      const WeightVector lie = scaled(truth, a.id, f);
      const MechanismOutcome o = run_mechanism(kind, inst, dist, lie, truth, cap);
      const Rational& u_lie = o.utilities.at(a.id);
      if (u_truth < u_lie) {
        r.witness = io::Json{{"factor", f.str()},
                             {"reported_weight", lie.at(a.id).str()},
                             {"utility_truthful", u_truth.str()},
                             {"utility_misreport", u_lie.str()}};
        break;
      }
    }
    if (kind == MechanismKind::kAposNaive) {
      r.result = r.witness ? CheckResult::kWitness : CheckResult::kNoWitness;
    } else {
      r.result = r.witness ? CheckResult::kFail : CheckResult::kPass;
    }
    r.detail = "truthful utility " + u_truth.str();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AuditRecord> audit_vp(const CorpusEntry& entry, MechanismKind kind, std::uint64_t cap) {
  const Instance& inst = entry.instance;
  std::vector<AuditRecord> out;
  if (is_single_package(kind) && inst.num_packages() != 1) return out;
  const DistanceOracle dist = all_pairs_distances(inst);
  const MechanismOutcome o = run_mechanism(kind, inst, dist, inst.weights(), cap);
  const Rational& chosen = o.chosen.cost.total;
  for (const AgentSpec& a : inst.agents()) {
    AuditRecord r = record("vp", entry, kind, a.id);
    const Rational& u = o.utilities.at(a.id);
    const Rational& fallback = o.fallback.at(a.id).cost.total;
    const bool ok = u.sign() >= 0 && !(fallback < chosen);
    r.detail = "utility " + u.str() + ", cost " + chosen.str() + " <= fallback " + fallback.str();
    if (kind == MechanismKind::kAposNaive) {
      r.result = ok ? CheckResult::kPass : CheckResult::kSkipped;
    } else {
      r.result = ok ? CheckResult::kPass : CheckResult::kFail;
    }
    out.push_back(std::move(r));
  }
  return out;
}

FrugalityReport audit_frugality(const Instance& instance) {
  if (instance.num_packages() != 1) throw PreconditionError("frugality audit needs m = 1");
  if (instance.num_agents() < 2) throw PreconditionError("frugality audit needs k > 1");
  const DistanceOracle dist = all_pairs_distances(instance);
  const WeightVector w = instance.weights();
  FrugalityReport r;

  const SingleOptimalResult opt = solve_single_optimal(instance, dist, w);
  const LonelyResult lonely = solve_single_lonely(instance, dist, w);
  r.opt = opt.result.cost.total;
  r.lopt = lonely.result.cost.total;
  r.lonely_selected = lonely.selected;
  r.monopoly_free = opt.max_optimal_carriers >= 2;

  const MechanismOutcome opt_mech = run_mechanism(MechanismKind::kSingleOptimal, instance, dist, w);
  const MechanismOutcome lonely_mech = run_mechanism(MechanismKind::kSingleLonely, instance, dist, w);
  for (const AgentSpec& a : instance.agents()) {
    r.opt_minus.emplace(a.id, opt_mech.pivots.at(a.id));
    r.lopt_minus.emplace(a.id, lonely_mech.pivots.at(a.id));
  }
  r.opt_payments = opt_mech.payments;
  r.opt_total_payment = opt_mech.total_payment;
  r.lonely_total_payment = lonely_mech.total_payment;
  if (!r.opt.is_zero()) {
    r.opt_ratio = r.opt_total_payment / r.opt;
    r.lonely_ratio = r.lonely_total_payment / r.opt;
  }
  for (const auto& [id, d] : opt.result.distance) {
    if (d.is_zero()) continue;
    r.removal_bound[id] = !(r.opt + w.at(id) * d < r.opt_minus.at(id));
  }
  // 2/ln 2 compared against the upper end of its enclosure.
  const Rational two_over_ln2 = Rational(2) * inv_ln2_interval().hi;
  r.opt_bound_holds = !(Rational(2) * r.opt < r.opt_total_payment);
  r.lonely_bound_holds = !(two_over_ln2 * r.opt < r.lonely_total_payment);
  return r;
}

io::Json to_json(const FrugalityReport& r) {
  auto per_agent = [](const std::map<AgentId, Rational>& m) {
    io::Json j = io::Json::object();
    for (const auto& [id, v] : m) j[std::to_string(id)] = v.str();
    return j;
  };
  io::Json removal_bound = io::Json::object();
  for (const auto& [id, ok] : r.removal_bound) removal_bound[std::to_string(id)] = ok;
  return {{"opt", r.opt.str()},
          {"opt_minus", per_agent(r.opt_minus)},
          {"lopt", r.lopt.str()},
          {"lopt_minus", per_agent(r.lopt_minus)},
          {"lonely_selected", r.lonely_selected},
          {"opt_payments", per_agent(r.opt_payments)},
          {"opt_total_payment", r.opt_total_payment.str()},
          {"lonely_total_payment", r.lonely_total_payment.str()},
          {"opt_ratio", r.opt_ratio ? io::Json(r.opt_ratio->str()) : io::Json(nullptr)},
          {"lonely_ratio", r.lonely_ratio ? io::Json(r.lonely_ratio->str()) : io::Json(nullptr)},
          {"monopoly_free", r.monopoly_free},
          {"removal_bound", removal_bound},
          {"opt_bound_holds", r.opt_bound_holds},
          {"lonely_bound_holds", r.lonely_bound_holds}};
}

BocReport measure_boc(const Instance& instance, std::uint64_t oracle_cap) {
  const DistanceOracle dist = all_pairs_distances(instance);
  const WeightVector w = instance.weights();
  BocReport r;
  r.opt = solve_oracle(instance, dist, w, Collaboration::kAllowed, oracle_cap).cost.total;
  r.noc = solve_oracle(instance, dist, w, Collaboration::kForbidden, oracle_cap).cost.total;
  r.rstar = solve_am_basic(instance, dist, w).cost.total;
  r.boc_le_boc_star = !(r.rstar < r.noc);
  r.boc_star_le_2 = !(Rational(2) * r.opt < r.rstar);
  if (!r.opt.is_zero()) {
    r.boc = r.noc / r.opt;
    r.boc_star = r.rstar / r.opt;
  }
  if (instance.active_packages().size() == 1) {
    r.single_le_inv_ln2 = !(inv_ln2_interval().hi * r.opt < r.noc);
  }
  return r;
}

io::Json to_json(const BocReport& r) {
  return {{"opt", r.opt.str()},
          {"noc", r.noc.str()},
          {"rstar", r.rstar.str()},
          {"boc", r.boc ? io::Json(r.boc->str()) : io::Json(nullptr)},
          {"boc_star", r.boc_star ? io::Json(r.boc_star->str()) : io::Json(nullptr)},
          {"boc_le_boc_star", r.boc_le_boc_star},
          {"boc_star_le_2", r.boc_star_le_2},
          {"single_le_inv_ln2", r.single_le_inv_ln2}};
}

std::vector<AuditRecord> audit_ratios(const CorpusEntry& entry, std::uint64_t cap) {
  const Instance& inst = entry.instance;
  std::vector<AuditRecord> out;
  if (oracle_state_count(inst, Collaboration::kAllowed) > kDefaultOracleStateCap) {
    AuditRecord r = record("ratios", entry);
    r.result = CheckResult::kSkipped;
    r.detail = "oracle state space above cap";
    out.push_back(std::move(r));
    return out;
  }
  const DistanceOracle dist = all_pairs_distances(inst);
  const WeightVector w = inst.weights();
  const Rational opt = solve_oracle(inst, dist, w, Collaboration::kAllowed).cost.total;
  const Rational am = solve_am_basic(inst, dist, w, cap).cost.total;
  const Rational ak = solve_ak(inst, dist, w, ScpMode::kApprox, false, cap).chosen.cost.total;
  const Rational apos = make_result("apos", inst, dist, solve_apos(inst, dist), w).cost.total;
  const Rational astar = solve_astar(inst, dist, w).chosen.cost.total;
  Rational wmax = inst.agents().front().weight, wmin = wmax;
  for (const AgentSpec& a : inst.agents()) {
    wmax = max(wmax, a.weight);
    wmin = min(wmin, a.weight);
  }

  out.push_back(bound(record("ratio-am-le-2opt", entry), am, "<=", Rational(2) * opt, !(Rational(2) * opt < am)));
  out.push_back(bound(record("ratio-akapprox-le-1.8am", entry), ak, "<=", Rational(9, 5) * am,
                      !(Rational(9, 5) * am < ak)));
  out.push_back(bound(record("ratio-akapprox-le-3.6opt", entry), ak, "<=", Rational(18, 5) * opt,
                      !(Rational(18, 5) * opt < ak)));
  if (wmin.is_zero()) {
    AuditRecord r = record("ratio-apos-le-4wratio-opt", entry);
    r.result = CheckResult::kSkipped;
    r.detail = "zero weight";
    out.push_back(std::move(r));
  } else {
    const Rational rhs = Rational(4) * wmax / wmin * opt;
    out.push_back(bound(record("ratio-apos-le-4wratio-opt", entry), apos, "<=", rhs, !(rhs < apos)));
  }
  out.push_back(bound(record("ratio-astar-le-apos", entry), astar, "<=", apos, !(apos < astar)));
  return out;
}

std::vector<AuditRecord> audit_boc(const CorpusEntry& entry) {
  std::vector<AuditRecord> out;
  if (oracle_state_count(entry.instance, Collaboration::kForbidden) > kDefaultOracleStateCap) {
    AuditRecord r = record("boc", entry);
    r.result = CheckResult::kSkipped;
    r.detail = "oracle state space above cap";
    out.push_back(std::move(r));
    return out;
  }
  const BocReport b = measure_boc(entry.instance);
  out.push_back(bound(record("boc-le-boc-star", entry), b.noc, "<=", b.rstar, b.boc_le_boc_star));
  out.push_back(bound(record("boc-star-le-2", entry), b.rstar, "<=", Rational(2) * b.opt, b.boc_star_le_2));
  if (entry.instance.active_packages().size() == 1) {
    AuditRecord r = record("boc-single-le-inv-ln2", entry);
    r.result = b.single_le_inv_ln2 ? CheckResult::kPass : CheckResult::kFail;
    r.detail = "noc " + b.noc.str() + ", opt " + b.opt.str();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<AuditRecord> audit_frugality_records(const CorpusEntry& entry) {
  std::vector<AuditRecord> out;
  if (entry.instance.num_packages() != 1) return out;
  const FrugalityReport f = audit_frugality(entry.instance);
  const std::string tag = f.monopoly_free ? "monopoly-free" : "monopoly";
  for (const auto& [id, q] : f.opt_minus) {
    out.push_back(bound(record("opt-le-opt-minus", entry), f.opt, "<=", q, !(q < f.opt)));
    out.back().agent = id;
  }
  for (const auto& [id, q] : f.lopt_minus) {
    out.push_back(bound(record("lopt-le-lopt-minus", entry), f.lopt, "<=", q, !(q < f.lopt)));
    out.back().agent = id;
  }
  AuditRecord opt = record("frugality-opt-le-2opt", entry);
  AuditRecord lonely = record("frugality-lonely-le-2inv-ln2-opt", entry);
  opt.detail = tag + ", payments " + f.opt_total_payment.str() + ", opt " + f.opt.str();
  lonely.detail = tag + ", payment " + f.lonely_total_payment.str() + ", opt " + f.opt.str();
  if (f.monopoly_free) {
    opt.result = f.opt_bound_holds ? CheckResult::kPass : CheckResult::kFail;
    lonely.result = f.lonely_bound_holds ? CheckResult::kPass : CheckResult::kFail;
    for (const auto& [id, ok] : f.removal_bound) {
      AuditRecord r = record("removal-opt-minus-le-opt-plus-own", entry);
      r.agent = id;
      r.result = ok ? CheckResult::kPass : CheckResult::kFail;
      r.detail = "opt_minus " + f.opt_minus.at(id).str() + ", opt " + f.opt.str();
      out.push_back(std::move(r));
    }
  } else {
    opt.result = CheckResult::kSkipped;
    lonely.result = CheckResult::kSkipped;
  }
  out.push_back(std::move(opt));
  out.push_back(std::move(lonely));
  return out;
}

}  // namespace delivery::analysis
