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
#include <limits>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "delivery/solvers.hpp"

namespace delivery {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t pow_sat(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kSaturated / base) return kSaturated;
    out *= base;
  }
  return out;
}

// Package state. With collaboration allowed: node v (< n) or carried by agent
// index a (n + a). Forbidden: additionally remembers who touched it, as
// owner * n + v for owner 0 (nobody) .. k, or n(k+1) + a when carried by a.
struct Codec {
  std::uint64_t n = 0, k = 0, m = 0;
  bool track_owner = false;

  std::uint64_t package_base() const { return track_owner ? n * (k + 1) + k : n + k; }

  struct State {
    std::vector<std::uint64_t> pos;  // agent nodes
    std::vector<std::uint64_t> pkg;  // package states
  };

  std::uint64_t encode(const State& s) const {
    std::uint64_t code = 0;
    for (std::size_t j = m; j-- > 0;) code = code * package_base() + s.pkg[j];
    for (std::size_t a = k; a-- > 0;) code = code * n + s.pos[a];
    return code;
  }
  State decode(std::uint64_t code) const {
    State s{std::vector<std::uint64_t>(k), std::vector<std::uint64_t>(m)};
    for (std::size_t a = 0; a < k; ++a) {
      s.pos[a] = code % n;
      code /= n;
    }
    for (std::size_t j = 0; j < m; ++j) {
      s.pkg[j] = code % package_base();
      code /= package_base();
    }
    return s;
  }

  // -1 when on the ground.
  long carrier(std::uint64_t st) const {
    const std::uint64_t first = track_owner ? n * (k + 1) : n;
    return st >= first ? static_cast<long>(st - first) : -1;
  }
  std::uint64_t node(std::uint64_t st) const { return st % n; }
  std::uint64_t owner(std::uint64_t st) const { return st / n; }  // ground states only
  std::uint64_t carried_by(std::uint64_t a) const { return (track_owner ? n * (k + 1) : n) + a; }
  std::uint64_t on_ground(std::uint64_t v, std::uint64_t owner) const { return track_owner ? owner * n + v : v; }
};

struct Step {
  std::uint64_t prev = 0;
  std::size_t agent = 0;
  Action action;
};

}  // namespace

std::uint64_t oracle_state_count(const Instance& instance, Collaboration collaboration) {
  const std::uint64_t n = static_cast<std::uint64_t>(instance.graph().num_nodes());
  const std::uint64_t k = static_cast<std::uint64_t>(instance.num_agents());
  const std::size_t m = instance.active_packages().size();
  const std::uint64_t base = collaboration == Collaboration::kForbidden ? n * (k + 1) + k : n + k;
  const std::uint64_t agents = pow_sat(n, static_cast<std::size_t>(k));
  const std::uint64_t packages = pow_sat(base, m);
  if (agents != 0 && packages > kSaturated / agents) return kSaturated;
  return agents * packages;
}

SolveResult solve_oracle(const Instance& instance, const DistanceOracle& dist, const WeightVector& weights,
                         Collaboration collaboration, std::uint64_t cap) {
  const std::uint64_t states = oracle_state_count(instance, collaboration);
  if (states > cap) {
    throw CapExceeded("oracle configuration space " +
                      (states == kSaturated ? std::string("exceeds 2^64") : std::to_string(states)) +
                      " exceeds cap " + std::to_string(cap));
  }
  const auto& agents = instance.agents();
  const std::vector<PackageSpec> packages = instance.active_packages();
  Codec codec;
  codec.n = static_cast<std::uint64_t>(instance.graph().num_nodes());
  codec.k = agents.size();
  codec.m = packages.size();
  codec.track_owner = collaboration == Collaboration::kForbidden;

  // Shortest parallel edge per node pair, then per-agent move costs.
  std::vector<std::vector<std::pair<NodeIndex, Rational>>> adj(codec.n);
  for (const Edge& e : instance.graph().edges()) {
    for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      auto& list = adj[static_cast<std::size_t>(u)];
      auto it = std::find_if(list.begin(), list.end(), [v](const auto& x) { return x.first == v; });
      if (it == list.end()) {
        list.emplace_back(v, e.length);
      } else if (e.length < it->second) {
        it->second = e.length;
      }
    }
  }
  std::vector<Rational> w;
  for (const AgentSpec& a : agents) w.push_back(weight_of(weights, a.id));

  Codec::State start{std::vector<std::uint64_t>(codec.k), std::vector<std::uint64_t>(codec.m)};
  for (std::size_t a = 0; a < codec.k; ++a) start.pos[a] = static_cast<std::uint64_t>(agents[a].start);
  for (std::size_t j = 0; j < codec.m; ++j) start.pkg[j] = codec.on_ground(static_cast<std::uint64_t>(packages[j].source), 0);
  auto delivered = [&](std::size_t j, std::uint64_t st) {
    return codec.carrier(st) < 0 && codec.node(st) == static_cast<std::uint64_t>(packages[j].target);
  };

  using Entry = std::pair<Rational, std::uint64_t>;
  auto later = [](const Entry& x, const Entry& y) {
    if (x.first != y.first) return x.first > y.first;
    return x.second > y.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  std::unordered_map<std::uint64_t, Rational> best;
  std::unordered_map<std::uint64_t, Step> parent;
  std::unordered_set<std::uint64_t> closed;
  const std::uint64_t source = codec.encode(start);
  best.emplace(source, Rational(0));
  queue.emplace(Rational(0), source);

  auto relax = [&](std::uint64_t from, const Rational& base, const Codec::State& next, const Rational& step,
                   std::size_t agent, Action action) {
    const std::uint64_t code = codec.encode(next);
    if (closed.contains(code)) return;
    Rational c = base + step;
    auto it = best.find(code);
    if (it != best.end() && !(c < it->second)) return;
    best.insert_or_assign(code, c);
    parent.insert_or_assign(code, Step{from, agent, action});
    queue.emplace(std::move(c), code);
  };

  std::optional<std::uint64_t> goal;
  while (!queue.empty()) {
    const auto [cost, code] = queue.top();
    queue.pop();
    if (closed.contains(code)) continue;
    closed.insert(code);
    const Codec::State s = codec.decode(code);
    bool done = true;
    for (std::size_t j = 0; j < codec.m && done; ++j) done = delivered(j, s.pkg[j]);
    if (done) {
      goal = code;
      break;
    }
    for (std::size_t a = 0; a < codec.k; ++a) {
      long held = -1;
      for (std::size_t j = 0; j < codec.m; ++j) {
        if (codec.carrier(s.pkg[j]) == static_cast<long>(a)) held = static_cast<long>(j);
      }
      const std::uint64_t here = s.pos[a];
      if (held >= 0) {
        Codec::State next = s;
        const std::uint64_t owner = codec.track_owner ? a + 1 : 0;
        next.pkg[static_cast<std::size_t>(held)] = codec.on_ground(here, owner);
        relax(code, cost, next, Rational(0), a, Action::drop(packages[static_cast<std::size_t>(held)].id));
      } else {
        for (std::size_t j = 0; j < codec.m; ++j) {
          const std::uint64_t st = s.pkg[j];
          if (codec.carrier(st) >= 0 || codec.node(st) != here || delivered(j, st)) continue;
          if (codec.track_owner && codec.owner(st) != 0 && codec.owner(st) != a + 1) continue;
          Codec::State next = s;
          next.pkg[j] = codec.carried_by(a);
          relax(code, cost, next, Rational(0), a, Action::pickup(packages[j].id));
        }
      }
      for (const auto& [v, len] : adj[here]) {
        Codec::State next = s;
        next.pos[a] = static_cast<std::uint64_t>(v);
        relax(code, cost, next, w[a] * len, a, Action::move(v));
      }
    }
  }
  if (!goal) throw PreconditionError("oracle found no feasible solution");

  std::vector<Step> steps;
  for (std::uint64_t c = *goal; c != source;) {
    const Step& st = parent.at(c);
    steps.push_back(st);
    c = st.prev;
  }
  std::reverse(steps.begin(), steps.end());
  Solution sol;
  for (const Step& st : steps) sol.itineraries[agents[st.agent].id].push_back(st.action);
  // Agents that only wandered without touching a package would have been
  // pruned by optimality unless their weight is zero; drop pure-move tails.
  for (auto& [id, it] : sol.itineraries) {
    while (!it.empty() && it.back().kind == Action::Kind::kMove) it.pop_back();
  }
  std::erase_if(sol.itineraries, [](const auto& kv) { return kv.second.empty(); });
  return make_result(collaboration == Collaboration::kAllowed ? "oracle" : "oracle-noC", instance, dist,
                     std::move(sol), weights);
}

}  // namespace delivery
