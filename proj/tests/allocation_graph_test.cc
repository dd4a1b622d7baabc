// Copyright 2026 The wsdprop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wsdprop/allocation_graph.h"

#include <set>

#include <gtest/gtest.h>

#include "oracles.h"

namespace wsdprop {
namespace {

std::set<std::size_t> RightNeighbors(const BipartiteGraph& g, std::size_t l) {
  std::set<std::size_t> out;
  for (const Edge& e : g.Neighbors(l)) out.insert(e.right);
  return out;
}

TEST(BipartiteGraphTest, SortedAdjacencyAndRanks) {
  BipartiteGraph g(2, 3);
  g.AddEdge(0, 2, 4);
  g.AddEdge(0, 0, 1);
  EXPECT_THROW(g.AddEdge(0, 2), std::invalid_argument);
  ASSERT_EQ(g.Neighbors(0).size(), 2u);
  EXPECT_EQ(g.Neighbors(0)[0].right, 0u);
  EXPECT_EQ(g.Rank(0, 2), 4);
  EXPECT_FALSE(g.Rank(1, 2).has_value());
  EXPECT_EQ(g.max_rank(), 4);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(SlotThresholdTest, Examples) {
  const Instance hh = oracle::HalfHalfChores();
  EXPECT_EQ(SlotThreshold(hh, 0, 2), 2);
  EXPECT_EQ(SlotThreshold(hh, 1, 1), 0);
  const Instance goods = oracle::Uniform(ItemKind::kGoods, 4, {"1/2", "1/2"});
  EXPECT_EQ(SlotThreshold(goods, 0, 1), 3);
}

TEST(SlotThresholdTest, OutOfRange) {
  const Instance hh = oracle::HalfHalfChores();
  EXPECT_THROW(SlotThreshold(hh, 0, 0), std::out_of_range);
  EXPECT_THROW(SlotThreshold(hh, 0, 3), std::out_of_range);
}

TEST(AllocationGraphTest, HalfHalfAdjacency) {
  const Instance hh = oracle::HalfHalfChores();
  const AllocationGraph g = BuildAllocationGraph(hh);
  ASSERT_EQ(g.slots().size(), 4u);
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(RightNeighbors(g.graph(), g.SlotIndex(a, 1)),
              (std::set<std::size_t>{0, 1, 2}));
    EXPECT_EQ(RightNeighbors(g.graph(), g.SlotIndex(a, 2)),
              (std::set<std::size_t>{1, 2}));
  }
  // b3 is the least disliked chore, so its edges have rank 1.
  EXPECT_EQ(g.graph().Rank(0, 2), 1);
  EXPECT_EQ(g.graph().Rank(0, 0), 3);
}

TEST(AllocationGraphTest, GoodsSlotCounts) {
  const Instance inst = oracle::Uniform(ItemKind::kGoods, 3, {"2/3", "1/3"});
  const AllocationGraph g = BuildAllocationGraph(inst);
  EXPECT_EQ(g.SlotsOf(0).size(), 1u);
  EXPECT_EQ(g.SlotsOf(1).size(), 0u);
}

TEST(AllocationGraphTest, SingleAgentChores) {
  const std::size_t m = 5;
  const Instance inst = oracle::Uniform(ItemKind::kChores, m, {"1"});
  const AllocationGraph g = BuildAllocationGraph(inst);
  ASSERT_EQ(g.slots().size(), m + 1);
  for (std::size_t l = 1; l <= m + 1; ++l) {
    const std::size_t missing = l >= 2 ? l - 2 : 0;
    EXPECT_EQ(g.graph().Neighbors(g.SlotIndex(0, l)).size(), m - missing);
  }
}

TEST(ExtendAllocationGraphTest, HalfHalfGetsOneDummy) {
  const Instance hh = oracle::HalfHalfChores();
  const AllocationGraph g = ExtendAllocationGraph(BuildAllocationGraph(hh), hh);
  EXPECT_EQ(g.dummy_count(), 1u);
  EXPECT_TRUE(g.IsBalanced());
  EXPECT_EQ(g.item_vertices().size(), 4u);
  for (std::size_t s = 0; s < 4; ++s) EXPECT_EQ(g.graph().Rank(s, 3), 4);
}

TEST(ExtendAllocationGraphTest, GoodsSpareSlotsAndDummies) {
  const Instance inst = oracle::Uniform(ItemKind::kGoods, 4, {"1/2", "1/2"});
  const AllocationGraph g = ExtendAllocationGraph(BuildAllocationGraph(inst), inst);
  EXPECT_EQ(g.spare_per_agent(), 2u);
  EXPECT_EQ(g.slots().size(), 6u);
  EXPECT_EQ(g.dummy_count(), 2u);
  EXPECT_TRUE(g.IsBalanced());
  EXPECT_EQ(SlotName(g, inst, g.SlotIndex(0, 2)), "s'[a1,2]");
  EXPECT_EQ(ItemVertexName(g, inst, 5), "d2");
}

TEST(ExtendAllocationGraphTest, RejectsDoubleExtension) {
  const Instance hh = oracle::HalfHalfChores();
  const AllocationGraph g = ExtendAllocationGraph(BuildAllocationGraph(hh), hh);
  EXPECT_THROW(ExtendAllocationGraph(g, hh), std::invalid_argument);
}

TEST(AllocationGraphTest, DotMarksDummies) {
  const Instance hh = oracle::HalfHalfChores();
  const AllocationGraph g = ExtendAllocationGraph(BuildAllocationGraph(hh), hh);
  const std::string dot = ToDot(g, hh);
  EXPECT_NE(dot.find("\"d1\" [shape=ellipse, style=dashed]"), std::string::npos);
  EXPECT_NE(dot.find("\"s[a1,2]\" -- \"b3\" [label=1]"), std::string::npos);
}

class RandomGraphs : public ::testing::TestWithParam<ItemKind> {};

// Every item overlapping interval l of an agent is adjacent to slot l.
TEST_P(RandomGraphs, IntervalItemsAreNeighbors) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst =
        GenerateInstance(1 + seed % 6, seed % 14, GetParam(), seed);
    const AllocationGraph g = BuildAllocationGraph(inst);
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      const IntervalSet set = MakeIntervalSet(inst, i);
      // A chores agent can have one slot past its last interval.
      const std::size_t slots = std::min(g.SlotsOf(i).size(), set.intervals.size());
      ASSERT_LE(g.SlotsOf(i).size() - slots, 1u);
      for (std::size_t l = 1; l <= slots; ++l) {
        for (std::size_t pos = 1; pos <= inst.num_items(); ++pos) {
          if (Overlap(set.intervals[l - 1], pos).IsZero()) continue;
          EXPECT_TRUE(g.graph().HasEdge(g.SlotIndex(i, l), inst.ItemAt(i, pos)))
              << "seed " << seed << " agent " << i << " slot " << l;
        }
      }
    }
  }
}

TEST_P(RandomGraphs, ExtendedGraphShape) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst =
        GenerateInstance(1 + seed % 7, seed % 13, GetParam(), seed);
    const AllocationGraph plain = BuildAllocationGraph(inst);
    const AllocationGraph g = ExtendAllocationGraph(plain, inst);
    const std::size_t m = inst.num_items();
    ASSERT_TRUE(g.IsBalanced());
    if (GetParam() == ItemKind::kChores) {
      EXPECT_EQ(g.dummy_count(), plain.slots().size() - m);
      // n + sum floor(m alpha) always exceeds m, so chores get a dummy.
      EXPECT_GE(g.dummy_count(), 1u);
      for (std::size_t s = 0; s < g.slots().size(); ++s) {
        for (std::size_t d = 0; d < g.dummy_count(); ++d) {
          EXPECT_EQ(g.graph().Rank(s, m + d), static_cast<int>(m + 1 + d));
        }
      }
    } else {
      EXPECT_EQ(g.spare_per_agent(), m - plain.slots().size());
      for (std::size_t s = 0; s < g.slots().size(); ++s) {
        const std::size_t degree = g.graph().Neighbors(s).size();
        if (g.slots()[s].spare) {
          EXPECT_EQ(degree, g.item_vertices().size());
        } else {
          for (const Edge& e : g.graph().Neighbors(s)) {
            EXPECT_FALSE(g.IsDummy(e.right));
          }
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, RandomGraphs,
                         ::testing::Values(ItemKind::kChores, ItemKind::kGoods));

// Chores: a less disliked chore is reachable from every slot that reaches a
// more disliked one.
TEST(AllocationGraphProperty, ChoresNeighborhoodsNestByRank) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst =
        GenerateInstance(1 + seed % 5, 1 + seed % 10, ItemKind::kChores, seed);
    const AllocationGraph g = BuildAllocationGraph(inst);
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      for (std::size_t pj = 1; pj <= inst.num_items(); ++pj) {
        for (std::size_t pk = pj; pk <= inst.num_items(); ++pk) {
          for (std::size_t s : g.SlotsOf(i)) {
            if (g.graph().HasEdge(s, inst.ItemAt(i, pj))) {
              EXPECT_TRUE(g.graph().HasEdge(s, inst.ItemAt(i, pk)));
            }
          }
        }
      }
    }
  }
}

TEST(AllocationGraphProperty, GoodsSlotNeighborhoodsGrow) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst =
        GenerateInstance(1 + seed % 5, 1 + seed % 12, ItemKind::kGoods, seed);
    const AllocationGraph g = BuildAllocationGraph(inst);
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      const auto& own = g.SlotsOf(i);
      for (std::size_t p = 0; p + 1 < own.size(); ++p) {
        const auto lo = RightNeighbors(g.graph(), own[p]);
        const auto hi = RightNeighbors(g.graph(), own[p + 1]);
        EXPECT_TRUE(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
      }
    }
  }
}

TEST(AllocationGraphProperty, LargerEntitlementSmallerGoodsNeighborhood) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Instance inst =
        GenerateInstance(2 + seed % 5, 1 + seed % 12, ItemKind::kGoods, seed);
    const AllocationGraph g = BuildAllocationGraph(inst);
    for (std::size_t i = 0; i < inst.num_agents(); ++i) {
      for (std::size_t k = 0; k < inst.num_agents(); ++k) {
        if (inst.entitlement(i) < inst.entitlement(k)) continue;
        const std::size_t shared =
            std::min(g.SlotsOf(i).size(), g.SlotsOf(k).size());
        for (std::size_t l = 1; l <= shared; ++l) {
          EXPECT_LE(g.graph().Neighbors(g.SlotIndex(i, l)).size(),
                    g.graph().Neighbors(g.SlotIndex(k, l)).size());
        }
      }
    }
  }
}

}  // namespace
}  // namespace wsdprop
