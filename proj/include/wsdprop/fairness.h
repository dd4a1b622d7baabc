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

#ifndef WSDPROP_FAIRNESS_H_
#define WSDPROP_FAIRNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wsdprop/instance.h"
#include "wsdprop/rational.h"

namespace wsdprop {

enum class Condition { kCountBound, kRankBound };

std::string_view ToString(Condition condition);

struct BundleReport {
  std::size_t agent = 0;
  bool passes = true;
  std::optional<Condition> violated;
  // 1-based index into the sorted bundle for kRankBound, 0 otherwise.
  std::size_t rank_index = 0;
  // Present exactly when the bundle fails; the bundle is not WPROP1 under it.
  std::optional<StepValuation> witness;
};

// Bundle test on sorted positions r_1 < ... < r_k in the agent's ranking.
// Chores: k <= floor(m*alpha)+1 and r_l >= ceil((l-1)/alpha).
// Goods:  k >= ceil(m*alpha)-1 and r_l <= floor(l/alpha)+1.
BundleReport CheckBundle(const Instance& instance, std::size_t agent,
                         std::span<const std::size_t> bundle);

struct AllocationReport {
  bool passes = true;
  std::vector<BundleReport> agents;
};

// Throws MalformedAllocation on a size mismatch or, for chores, unallocated
// items.
AllocationReport CheckAllocation(const Instance& instance,
                                 const IntegralAllocation& allocation);

// WPROP1 of the bundle under every step valuation k = 1..m, evaluated
// literally through CheckWprop1Cardinal. Independent of CheckBundle.
bool StepValuationOracle(const Instance& instance, std::size_t agent,
                         std::span<const std::size_t> bundle);

// Chores: some b in X has v(X \ b) <= alpha*v(B); an empty X compares v(X).
// Goods: some b in B has v(X + b) >= alpha*v(B); with B empty this reads
// v(X) >= 0. `values` is indexed by item. Throws NegativeValue.
bool CheckWprop1Cardinal(ItemKind kind, std::span<const std::size_t> bundle,
                         std::span<const Rational> values,
                         const Rational& alpha);

// Each turn the agent takes its best remaining item: the lowest position for
// goods, the highest for chores. Throws InvalidSequence when the sequence is
// longer than m, names an unknown agent, or (chores) leaves items unpicked.
IntegralAllocation SimulatePickingSequence(const Instance& instance,
                                           const PickingSequence& sequence);

// Weighted SD envy-freeness: for every ordered pair (i, k) and every prefix
// of i's ranking, x_i(prefix)/alpha_i >= x_k(prefix)/alpha_k for goods and
// <= for chores.
bool CheckWsdefFractional(const Instance& instance,
                          const FractionalAllocation& allocation);

// Every complete allocation that passes CheckAllocation, ordered by owner
// vector. Throws InstanceTooLarge when n^m exceeds `cap`.
std::vector<IntegralAllocation> EnumerateWsdprop1(const Instance& instance,
                                                  std::uint64_t cap = 1'000'000);

}  // namespace wsdprop

#endif  // WSDPROP_FAIRNESS_H_
