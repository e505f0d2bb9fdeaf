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

#include "delivery/schedules.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace delivery {
namespace {

constexpr std::uint64_t kOverflow = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kOverflow / b) return kOverflow;
  return a * b;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) {
    // out * (n - r + i) / i stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - r + i);
    if (out > kOverflow / num) return kOverflow;
    out = out * num / static_cast<std::uint64_t>(i);
  }
  return out;
}

void check_cap(std::uint64_t count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    throw CapExceeded(std::string(what) + " enumeration needs " +
                      (count == kOverflow ? std::string("more than 2^64") : std::to_string(count)) +
                      " items, cap is " + std::to_string(cap));
  }
}

std::vector<PackageId> iota_ids(int m) {
  std::vector<PackageId> out(static_cast<std::size_t>(m));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

}  // namespace

Rational schedule_travel_distance(const Instance& instance, const DistanceOracle& dist,
                                  AgentId agent, const PackageList& order) {
  if (order.empty()) return Rational(0);
  const NodeIndex home = instance.agent(agent).start;
  Rational d;
  NodeIndex at = home;
  for (PackageId j : order) {
    const PackageSpec& p = instance.package(j);
    d += dist(at, p.source);
    d += dist(p.source, p.target);
    at = p.target;
  }
  d += dist(at, home);
  return d;
}

Solution realize_schedule(const Instance& instance, const DistanceOracle& dist,
                          const Schedule& schedule) {
  (void)dist;
  const auto& agents = instance.agents();
  if (schedule.lists.size() != agents.size()) {
    throw InputError("schedule has " + std::to_string(schedule.lists.size()) + " lists for " +
                     std::to_string(agents.size()) + " agents");
  }
  std::set<PackageId> seen;
  for (const PackageList& list : schedule.lists) {
    for (PackageId j : list) {
      if (instance.package(j).degenerate()) {
        throw InputError("degenerate package " + std::to_string(j) + " cannot be scheduled");
      }
      if (!seen.insert(j).second) throw InputError("package " + std::to_string(j) + " scheduled twice");
    }
  }
  for (const PackageSpec& p : instance.active_packages()) {
    if (!seen.contains(p.id)) throw InputError("package " + std::to_string(p.id) + " is not scheduled");
  }

  Solution out;
  for (std::size_t a = 0; a < agents.size(); ++a) {
    const PackageList& list = schedule.lists[a];
    if (list.empty()) continue;
    Itinerary it;
    NodeIndex at = agents[a].start;
    for (PackageId j : list) {
      const PackageSpec& p = instance.package(j);
      append_move(it, at, p.source);
      it.push_back(Action::pickup(j));
      append_move(it, at, p.target);
      it.push_back(Action::drop(j));
    }
    append_move(it, at, agents[a].start);
    out.itineraries.emplace(agents[a].id, std::move(it));
  }
  return out;
}

std::uint64_t lists_of_lists_count(int m, int k) {
  if (m < 0 || k < 1) return 0;
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f = mul_sat(f, static_cast<std::uint64_t>(i));
  return mul_sat(f, binomial(m + k - 1, k - 1));
}

std::uint64_t sets_of_lists_count(int m) {
  if (m < 0) return 0;
  // a(m) = (2m-1) a(m-1) - (m-1)(m-2) a(m-2), a(0) = a(1) = 1.
  std::uint64_t prev = 1, cur = 1;
  for (int i = 2; i <= m; ++i) {
    const std::uint64_t plus = mul_sat(static_cast<std::uint64_t>(2 * i - 1), cur);
    const std::uint64_t minus = mul_sat(static_cast<std::uint64_t>((i - 1) * (i - 2)), prev);
    if (plus == kOverflow) return kOverflow;
    prev = cur;
    cur = plus - minus;
  }
  return cur;
}

// ---------------------------------------------------------------------------

ListsOfListsEnumerator::ListsOfListsEnumerator(std::vector<PackageId> packages, int k, std::uint64_t cap)
    : perm_(std::move(packages)), k_(k) {
  if (k < 1) throw PreconditionError("need at least one list");
  std::sort(perm_.begin(), perm_.end());
  count_ = lists_of_lists_count(static_cast<int>(perm_.size()), k);
  check_cap(count_, cap, "lists-of-lists");
  delims_.resize(static_cast<std::size_t>(k - 1));
  std::iota(delims_.begin(), delims_.end(), 0);
}

void ListsOfListsEnumerator::emit(Schedule& out) const {
  out.lists.assign(static_cast<std::size_t>(k_), {});
  // Slots 0..m+k-2 hold either a delimiter or the next package of perm_.
  const int slots = static_cast<int>(perm_.size()) + k_ - 1;
  std::size_t list = 0, item = 0, d = 0;
  for (int s = 0; s < slots; ++s) {
    if (d < delims_.size() && delims_[d] == s) {
      ++list;
      ++d;
    } else {
      out.lists[list].push_back(perm_[item++]);
    }
  }
}

bool ListsOfListsEnumerator::advance_delimiters() {
  const int slots = static_cast<int>(perm_.size()) + k_ - 1;
  const int r = static_cast<int>(delims_.size());
  for (int i = r - 1; i >= 0; --i) {
    if (delims_[static_cast<std::size_t>(i)] < slots - r + i) {
      ++delims_[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j) {
        delims_[static_cast<std::size_t>(j)] = delims_[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

bool ListsOfListsEnumerator::next(Schedule& out) {
  if (done_) return false;
  if (started_) {
    if (!advance_delimiters()) {
      if (!std::next_permutation(perm_.begin(), perm_.end())) {
        done_ = true;
        return false;
      }
      std::iota(delims_.begin(), delims_.end(), 0);
    }
  }
  started_ = true;
  emit(out);
  return true;
}

// ---------------------------------------------------------------------------

SetsOfListsEnumerator::SetsOfListsEnumerator(std::vector<PackageId> packages, std::uint64_t cap)
    : items_(std::move(packages)) {
  std::sort(items_.begin(), items_.end());
  count_ = sets_of_lists_count(static_cast<int>(items_.size()));
  check_cap(count_, cap, "sets-of-lists");
  growth_.assign(items_.size(), 0);
}

bool SetsOfListsEnumerator::advance_partition() {
  // Restricted growth strings: growth_[0] = 0, growth_[i] <= 1 + max(prefix).
  const std::size_t n = growth_.size();
  for (std::size_t i = n; i-- > 1;) {
    int prefix_max = 0;
    for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, growth_[j]);
    if (growth_[i] <= prefix_max) {
      ++growth_[i];
      for (std::size_t j = i + 1; j < n; ++j) growth_[j] = 0;
      return true;
    }
  }
  return false;
}

void SetsOfListsEnumerator::load_blocks() {
  int blocks = 0;
  for (int g : growth_) blocks = std::max(blocks, g + 1);
  blocks_.assign(static_cast<std::size_t>(blocks), {});
  for (std::size_t i = 0; i < items_.size(); ++i) {
    blocks_[static_cast<std::size_t>(growth_[i])].push_back(items_[i]);
  }
}

bool SetsOfListsEnumerator::advance_block_permutations() {
  // Odometer over blocks, last block fastest; each block cycles through its
  // permutations and resets to sorted order on wrap.
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    if (std::next_permutation(blocks_[b].begin(), blocks_[b].end())) return true;
  }
  return false;
}

bool SetsOfListsEnumerator::next(ListBundle& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    load_blocks();
  } else if (!advance_block_permutations()) {
    if (items_.empty() || !advance_partition()) {
      done_ = true;
      return false;
    }
    load_blocks();
  }
  out.lists = blocks_;
  return true;
}

std::vector<Schedule> enumerate_lists_of_lists(int m, int k, std::uint64_t cap) {
  ListsOfListsEnumerator e(iota_ids(m), k, cap);
  std::vector<Schedule> out;
  Schedule s;
  while (e.next(s)) out.push_back(s);
  return out;
}

std::vector<ListBundle> enumerate_sets_of_lists(int m, std::uint64_t cap) {
  SetsOfListsEnumerator e(iota_ids(m), cap);
  std::vector<ListBundle> out;
  ListBundle b;
  while (e.next(b)) out.push_back(b);
  return out;
}

}  // namespace delivery
