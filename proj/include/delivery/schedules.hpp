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

// Non-collaborative solutions with direct delivery and return, encoded as
// package lists. A Schedule assigns one ordered list to every agent; a
// ListBundle is an unassigned set of non-empty lists.

#pragma once

#include <cstdint>
#include <vector>

#include "delivery/model.hpp"

namespace delivery {

using PackageList = std::vector<PackageId>;

/// lists[a] is the delivery order of the a-th agent of the instance.
struct Schedule {
  std::vector<PackageList> lists;

  friend bool operator==(const Schedule&, const Schedule&) = default;
  friend auto operator<=>(const Schedule&, const Schedule&) = default;
};

/// Unordered collection of non-empty lists, stored in canonical order
/// (lists sorted by their smallest package id).
struct ListBundle {
  std::vector<PackageList> lists;

  friend bool operator==(const ListBundle&, const ListBundle&) = default;
  friend auto operator<=>(const ListBundle&, const ListBundle&) = default;
};

/// d_i for agent `agent` delivering `order` directly, one by one, and
/// returning to its start. Zero for an empty list.
Rational schedule_travel_distance(const Instance& instance, const DistanceOracle& dist,
                                  AgentId agent, const PackageList& order);

/// The cheapest itinerary set that respects the schedule (shortest paths
/// everywhere). Throws InputError when the schedule is not a partition of the
/// instance's non-degenerate packages or has the wrong number of lists.
Solution realize_schedule(const Instance& instance, const DistanceOracle& dist,
                          const Schedule& schedule);

/// m! * C(m+k-1, k-1), or UINT64_MAX on overflow.
std::uint64_t lists_of_lists_count(int m, int k);
/// Number of sets of non-empty lists of m items: 1, 1, 3, 13, 73, 501, ...
std::uint64_t sets_of_lists_count(int m);

/// Lazily yields every list of exactly k possibly-empty lists over
/// `packages`: permutations in lexicographic order, then delimiter positions
/// in lexicographic order. Throws CapExceeded on construction when the count
/// exceeds `cap`.
class ListsOfListsEnumerator {
 public:
  ListsOfListsEnumerator(std::vector<PackageId> packages, int k, std::uint64_t cap = kDefaultEnumerationCap);

  /// Writes the next schedule into `out`; false when exhausted.
  bool next(Schedule& out);
  std::uint64_t count() const { return count_; }

 private:
  void emit(Schedule& out) const;
  bool advance_delimiters();

  std::vector<PackageId> perm_;
  int k_;
  std::uint64_t count_;
  std::vector<int> delims_;  // strictly increasing slots in [0, m+k-1)
  bool started_ = false;
  bool done_ = false;
};

/// Lazily yields every set of non-empty lists over `packages`: set
/// partitions by restricted growth strings (packages considered one by one),
/// then every within-block permutation.
class SetsOfListsEnumerator {
 public:
  explicit SetsOfListsEnumerator(std::vector<PackageId> packages, std::uint64_t cap = kDefaultEnumerationCap);

  bool next(ListBundle& out);
  std::uint64_t count() const { return count_; }

 private:
  bool advance_partition();
  void load_blocks();
  bool advance_block_permutations();

  std::vector<PackageId> items_;
  std::uint64_t count_;
  std::vector<int> growth_;
  std::vector<PackageList> blocks_;
  bool started_ = false;
  bool done_ = false;
};

/// Convenience: materialized enumerations (tests, small inputs).
std::vector<Schedule> enumerate_lists_of_lists(int m, int k, std::uint64_t cap = kDefaultEnumerationCap);
std::vector<ListBundle> enumerate_sets_of_lists(int m, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace delivery
