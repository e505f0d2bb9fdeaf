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

#include <set>

#include "delivery/analysis.hpp"
#include "delivery/schedules.hpp"
#include "support.hpp"

namespace delivery {
namespace {

// Lah numbers summed: ordered lists into j unlabeled nonempty lists.
std::uint64_t lah_total(int m) {
  if (m == 0) return 1;
  std::uint64_t total = 0;
  for (int j = 1; j <= m; ++j) total += testing::binomial(m - 1, j - 1) * testing::factorial(m) / testing::factorial(j);
  return total;
}

TEST(Counting, ListsOfLists) {
  for (int m = 0; m <= 5; ++m) {
    for (int k = 1; k <= 4; ++k) {
      const std::uint64_t want = testing::factorial(m) * testing::binomial(m + k - 1, k - 1);
      EXPECT_EQ(lists_of_lists_count(m, k), want) << m << "," << k;
      const auto all = enumerate_lists_of_lists(m, k);
      EXPECT_EQ(all.size(), want) << m << "," << k;
      const std::set<Schedule> distinct(all.begin(), all.end());
      EXPECT_EQ(distinct.size(), all.size());
      for (const Schedule& s : all) {
        ASSERT_EQ(s.lists.size(), static_cast<std::size_t>(k));
        std::multiset<PackageId> seen;
        for (const auto& l : s.lists) seen.insert(l.begin(), l.end());
        std::multiset<PackageId> expected;
        for (int j = 1; j <= m; ++j) expected.insert(j);
        EXPECT_EQ(seen, expected);
      }
    }
  }
}

TEST(Counting, SetsOfLists) {
  const std::uint64_t known[] = {1, 3, 13, 73, 501};
  for (int m = 1; m <= 5; ++m) {
    EXPECT_EQ(sets_of_lists_count(m), known[m - 1]);
    EXPECT_EQ(lah_total(m), known[m - 1]);
    const auto all = enumerate_sets_of_lists(m);
    EXPECT_EQ(all.size(), known[m - 1]);
    // Distinct as sets: canonicalize the order of the lists.
    std::set<std::vector<PackageList>> canon;
    for (const ListBundle& b : all) {
      auto lists = b.lists;
      for (const auto& l : lists) EXPECT_FALSE(l.empty());
      std::sort(lists.begin(), lists.end());
      canon.insert(lists);
    }
    EXPECT_EQ(canon.size(), all.size());
  }
}

TEST(Counting, CapIsEnforcedUpFront) {
  EXPECT_THROW(ListsOfListsEnumerator({1, 2, 3, 4, 5}, 4, 100), CapExceeded);
  EXPECT_THROW(SetsOfListsEnumerator({1, 2, 3, 4, 5}, 500), CapExceeded);
  EXPECT_NO_THROW(SetsOfListsEnumerator({1, 2, 3, 4, 5}, 501));
}

TEST(Counting, StreamingMatchesMaterialized) {
  ListsOfListsEnumerator e({1, 2, 3}, 3);
  std::vector<Schedule> streamed;
  Schedule s;
  while (e.next(s)) streamed.push_back(s);
  EXPECT_EQ(streamed, enumerate_lists_of_lists(3, 3));
}

TEST(Schedules, RealizationIsFeasibleAndCostsTheRoundTrip) {
  analysis::RandomSpec spec;
  spec.m_max = 3;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = analysis::gen_random(seed, spec);
    const DistanceOracle d = all_pairs_distances(inst);
    const auto matrix = testing::bellman_ford_apsp(inst.graph());
    std::vector<PackageId> ids;
    for (const PackageSpec& p : inst.active_packages()) ids.push_back(p.id);
    ListsOfListsEnumerator e(ids, inst.num_agents());
    Schedule s;
    int checked = 0;
    while (e.next(s) && checked++ < 40) {
      const Solution x = realize_schedule(inst, d, s);
      ASSERT_TRUE(validate_solution(inst, x)) << validate_solution(inst, x).violation;
      const auto dist = travel_distances(inst, d, x);
      for (std::size_t a = 0; a < s.lists.size(); ++a) {
        const AgentSpec& agent = inst.agents()[a];
        std::vector<PackageSpec> order;
        for (PackageId j : s.lists[a]) order.push_back(inst.package(j));
        const Rational want = testing::round_trip(inst, matrix, agent.start, order);
        EXPECT_EQ(dist.at(agent.id), want);
        EXPECT_EQ(schedule_travel_distance(inst, d, agent.id, s.lists[a]), want);
      }
    }
  }
}

}  // namespace
}  // namespace delivery
