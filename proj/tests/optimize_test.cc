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

#include "wsdprop/optimize.h"

#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "wsdprop/errors.h"
#include "wsdprop/fairness.h"

namespace wsdprop {
namespace {

CostSpec RandomCosts(std::mt19937_64& rng, std::size_t n, std::size_t m,
                     Direction direction) {
  CostSpec spec;
  spec.direction = direction;
  spec.values.assign(n, std::vector<Rational>(m));
  for (auto& row : spec.values) {
    for (auto& v : row) v = oracle::RandomRational(rng, 9, 3);
  }
  return spec;
}

Rational Objective(const CostSpec& spec, const std::vector<std::size_t>& owner) {
  Rational sum;
  for (std::size_t j = 0; j < owner.size(); ++j) sum += spec.values[owner[j]][j];
  return sum;
}

// Best objective over all complete allocations passing the literal
// definition, by exhaustive search.
std::optional<Rational> BruteBest(const Instance& inst, const CostSpec& spec) {
  std::optional<Rational> best;
  for (const auto& owner : oracle::AllOwnerVectors(inst.num_agents(), inst.num_items())) {
    const IntegralAllocation a = IntegralAllocation::FromOwners(inst.num_agents(), owner);
    bool ok = true;
    for (std::size_t i = 0; i < inst.num_agents() && ok; ++i) {
      ok = StepValuationOracle(inst, i, a.bundle(i));
    }
    if (!ok) continue;
    const Rational v = Objective(spec, owner);
    if (!best || (spec.direction == Direction::kMaximize ? v > *best : v < *best)) {
      best = v;
    }
  }
  return best;
}

TEST(OptimizeTest, HalfHalfMaximize) {
  const Instance hh = oracle::HalfHalfChores();
  CostSpec spec{{{1, 0, 0}, {0, 1, 1}}, Direction::kMaximize};
  const OptimizedAllocation r = OptimizeAllocation(hh, spec);
  EXPECT_EQ(r.objective, Rational(3));
  EXPECT_EQ(r.allocation.owners(), (std::vector<std::size_t>{0, 1, 1}));
}

TEST(OptimizeTest, HalfHalfMinimizeStillFair) {
  // Agent 1 finds everything free, but may not take all three chores.
  const Instance hh = oracle::HalfHalfChores();
  CostSpec spec{{{0, 0, 0}, {5, 5, 5}}, Direction::kMinimize};
  const OptimizedAllocation r = OptimizeAllocation(hh, spec);
  EXPECT_EQ(r.objective, Rational(5));
  EXPECT_TRUE(CheckAllocation(hh, r.allocation).passes);
}

TEST(OptimizeTest, ShapeErrors) {
  const Instance hh = oracle::HalfHalfChores();
  EXPECT_THROW(OptimizeAllocation(hh, {{{1, 2, 3}}, Direction::kMaximize}),
               IncompleteCostSpec);
  EXPECT_THROW(OptimizeAllocation(hh, {{{1, 2}, {1, 2}}, Direction::kMaximize}),
               IncompleteCostSpec);
}

TEST(OptimizeProperty, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(21);
  for (ItemKind kind : {ItemKind::kChores, ItemKind::kGoods}) {
    for (Direction dir : {Direction::kMinimize, Direction::kMaximize}) {
      for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 1 + seed % 3, m = seed % 6;
        const Instance inst = GenerateInstance(n, m, kind, seed);
        const CostSpec spec = RandomCosts(rng, n, m, dir);
        const OptimizedAllocation r = OptimizeAllocation(inst, spec);
        ASSERT_TRUE(r.allocation.IsComplete());
        EXPECT_TRUE(CheckAllocation(inst, r.allocation).passes);
        EXPECT_EQ(r.objective, Objective(spec, r.allocation.owners()));
        const auto best = BruteBest(inst, spec);
        ASSERT_TRUE(best.has_value());
        EXPECT_EQ(r.objective, *best) << "seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace wsdprop
