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

#include "wsdprop/matching.h"

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "wsdprop/errors.h"
#include "wsdprop/fairness.h"

namespace wsdprop {
namespace {

TEST(MaxMatchingTest, HalfHalfSaturatesAllChores) {
  const Instance hh = oracle::HalfHalfChores();
  const AllocationGraph g = BuildAllocationGraph(hh);
  const Matching m = MaxMatching(g.graph());
  EXPECT_EQ(m.size(), 3u);
  EXPECT_TRUE(m.IsRightPerfect());
  EXPECT_TRUE(IsMatchingOf(g.graph(), m));
}

TEST(MaxMatchingTest, EmptyEdgeSet) {
  const BipartiteGraph g(3, 4);
  EXPECT_EQ(MaxMatching(g).size(), 0u);
}

TEST(MaxMatchingTest, CompleteThreeByThree) {
  BipartiteGraph g(3, 3);
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t r = 0; r < 3; ++r) g.AddEdge(l, r);
  }
  EXPECT_TRUE(MaxMatching(g).IsPerfect());
}

TEST(MaxMatchingTest, RejectsForeignSeed) {
  BipartiteGraph g(2, 2);
  g.AddEdge(0, 0);
  Matching seed(2, 2);
  seed.Match(1, 1);
  EXPECT_THROW(MaxMatching(g, seed), std::invalid_argument);
}

TEST(MaxMatchingProperty, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 400; ++t) {
    const std::size_t left = 1 + rng() % 8, right = 1 + rng() % 8;
    const double density = 0.1 + 0.1 * static_cast<double>(rng() % 7);
    const BipartiteGraph g = oracle::RandomGraph(rng, left, right, density, 1);
    const Matching m = MaxMatching(g);
    ASSERT_TRUE(IsMatchingOf(g, m));
    EXPECT_EQ(m.size(), oracle::BruteMaxMatching(g)) << "trial " << t;
  }
}

TEST(MaxMatchingProperty, SeededRunReachesMaximum) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const BipartiteGraph g = oracle::RandomGraph(rng, 7, 7, 0.4, 1);
    Matching seed(7, 7);
    for (std::size_t l = 0; l < 7; ++l) {
      for (const Edge& e : g.Neighbors(l)) {
        if (seed.MateOfRight(e.right) == kUnmatched) {
          seed.Match(l, e.right);
          break;
        }
      }
    }
    EXPECT_EQ(MaxMatching(g, seed).size(), oracle::BruteMaxMatching(g));
  }
}

TEST(SignatureTest, CountsPerRank) {
  BipartiteGraph g(2, 2);
  g.AddEdge(0, 0, 1);
  g.AddEdge(1, 1, 3);
  Matching m(2, 2);
  m.Match(0, 0);
  m.Match(1, 1);
  EXPECT_EQ(ComputeSignature(g, m).counts, (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_LT((Signature{{0, 2}}), (Signature{{1, 0}}));
}

TEST(PerfectAllocationTest, HalfHalfIsATwoOneSplit) {
  const Instance hh = oracle::HalfHalfChores();
  const IntegralAllocation a = PerfectAllocation(hh);
  ASSERT_TRUE(a.IsComplete());
  const std::size_t first = a.bundle(0).size(), second = a.bundle(1).size();
  EXPECT_EQ(std::min(first, second), 1u);
  EXPECT_EQ(std::max(first, second), 2u);
}

TEST(PerfectAllocationTest, SingleAgentGetsAllGoods) {
  const Instance inst = oracle::Uniform(ItemKind::kGoods, 4, {"1"});
  EXPECT_EQ(PerfectAllocation(inst).bundle(0).size(), 4u);
}

TEST(PerfectAllocationTest, EqualSplitOfFourGoodsHitsTopThree) {
  const Instance inst = oracle::Uniform(ItemKind::kGoods, 4, {"1/2", "1/2"});
  const IntegralAllocation a = PerfectAllocation(inst);
  ASSERT_TRUE(a.IsComplete());
  for (std::size_t i = 0; i < 2; ++i) {
    ASSERT_FALSE(a.bundle(i).empty());
    EXPECT_LT(a.bundle(i).front(), 3u);
  }
}

TEST(PerfectAllocationProperty, AlwaysWsdProp1) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    for (ItemKind kind : {ItemKind::kChores, ItemKind::kGoods}) {
      const Instance inst = GenerateInstance(1 + seed % 8, seed % 15, kind, seed);
      const IntegralAllocation a = PerfectAllocation(inst);
      EXPECT_TRUE(a.IsComplete());
      EXPECT_TRUE(CheckAllocation(inst, a).passes) << "seed " << seed;
    }
  }
}

// Expected set: the 2-1 splits among all eight owner vectors.
TEST(EnumerateMatchingAllocationsTest, HalfHalfHasSixSplits) {
  const Instance hh = oracle::HalfHalfChores();
  const auto found = EnumerateMatchingAllocations(hh);
  std::vector<IntegralAllocation> expected;
  for (const auto& owner : oracle::AllOwnerVectors(2, 3)) {
    std::size_t first = 0;
    for (std::size_t o : owner) first += o == 0;
    if (first == 1 || first == 2) {
      expected.push_back(IntegralAllocation::FromOwners(2, owner));
    }
  }
  ASSERT_EQ(expected.size(), 6u);
  EXPECT_EQ(found, expected);
}

TEST(EnumerateMatchingAllocationsTest, CapIsEnforced) {
  const Instance inst = GenerateInstance(3, 6, ItemKind::kChores, 1);
  EXPECT_THROW(EnumerateMatchingAllocations(inst, 3), InstanceTooLarge);
}

}  // namespace
}  // namespace wsdprop
