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

#ifndef WSDPROP_INSTANCE_H_
#define WSDPROP_INSTANCE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsdprop/rational.h"

namespace wsdprop {

enum class ItemKind { kGoods, kChores };

std::string_view ToString(ItemKind kind);
// Accepts "goods" / "chores"; throws std::invalid_argument otherwise.
ItemKind ParseItemKind(std::string_view text);

// Unvalidated instance data, as read from a file or assembled by a caller.
// Rankings refer to items by name.
struct RawAgent {
  std::string name;
  Rational entitlement;
  std::vector<std::string> ranking;
};

struct RawInstance {
  ItemKind kind = ItemKind::kChores;
  std::vector<std::string> items;
  std::vector<RawAgent> agents;
};

enum class ValidationCode {
  kEmptyAgentList,
  kEntitlementSumNotOne,
  kZeroEntitlement,
  kEntitlementOutOfRange,
  kDuplicateItemInRanking,
  kMissingItemInRanking,
  kUnknownItemInRanking,
  kDuplicateItemId,
  kDuplicateAgentName,
};

std::string_view ToString(ValidationCode code);

struct ValidationIssue {
  ValidationCode code;
  std::string message;
};

// Thrown by ValidateInstance. Carries every problem found, not just the first.
class InstanceError : public std::runtime_error {
 public:
  explicit InstanceError(std::vector<ValidationIssue> issues);
  const std::vector<ValidationIssue>& issues() const { return issues_; }
  bool Has(ValidationCode code) const;

 private:
  std::vector<ValidationIssue> issues_;
};

struct Agent {
  std::string name;
  Rational entitlement;
  // ranking[j] is the item at 1-based position j+1. For goods position 1 is
  // the most favourite; for chores position 1 is the least favourite.
  std::vector<std::size_t> ranking;
};

// A validated instance: entitlements sum to exactly one, each is in (0, 1],
// and every ranking is a permutation of the items. Immutable.
class Instance {
 public:
  ItemKind kind() const { return kind_; }
  std::size_t num_agents() const { return agents_.size(); }
  std::size_t num_items() const { return items_.size(); }
  const std::vector<std::string>& items() const { return items_; }
  const std::vector<Agent>& agents() const { return agents_; }
  const Agent& agent(std::size_t i) const { return agents_.at(i); }
  const Rational& entitlement(std::size_t i) const {
    return agents_.at(i).entitlement;
  }

  // 1-based position of `item` in the agent's ranking.
  std::size_t Position(std::size_t agent, std::size_t item) const {
    return positions_.at(agent).at(item);
  }
  // Item at 1-based `position` in the agent's ranking.
  std::size_t ItemAt(std::size_t agent, std::size_t position) const {
    return agents_.at(agent).ranking.at(position - 1);
  }

  std::optional<std::size_t> FindItem(std::string_view name) const;
  std::optional<std::size_t> FindAgent(std::string_view name) const;

  RawInstance ToRaw() const;

 private:
  friend Instance ValidateInstance(const RawInstance& raw);
  Instance() = default;

  ItemKind kind_ = ItemKind::kChores;
  std::vector<std::string> items_;
  std::vector<Agent> agents_;
  std::vector<std::vector<std::size_t>> positions_;
};

// Throws InstanceError listing all violations.
Instance ValidateInstance(const RawInstance& raw);

struct Interval {
  Rational lo;
  Rational hi;
  Rational Length() const { return hi - lo; }
};

// Partition of [0, m] into ceil(m * alpha) pieces of length 1/alpha, the last
// clipped at m. Empty when m = 0.
struct IntervalSet {
  std::size_t agent = 0;
  std::vector<Interval> intervals;
};

IntervalSet MakeIntervalSet(const Instance& instance, std::size_t agent);

// Length of [position-1, position] intersected with `interval`.
Rational Overlap(const Interval& interval, std::size_t position);

inline constexpr std::size_t kUnassigned =
    std::numeric_limits<std::size_t>::max();

class MalformedAllocation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integral allocation of items to agents. Items may be unassigned (partial
// goods allocations); bundles are disjoint by construction.
class IntegralAllocation {
 public:
  IntegralAllocation() = default;
  IntegralAllocation(std::size_t num_agents, std::size_t num_items);

  // owner[j] is the agent holding item j, or kUnassigned.
  static IntegralAllocation FromOwners(std::size_t num_agents,
                                       std::vector<std::size_t> owner);
  // Throws MalformedAllocation when bundles overlap or name unknown items.
  static IntegralAllocation FromBundles(
      std::size_t num_items, const std::vector<std::vector<std::size_t>>& bundles);

  std::size_t num_agents() const { return bundles_.size(); }
  std::size_t num_items() const { return owner_.size(); }

  void Assign(std::size_t item, std::size_t agent);

  // Sorted item indices held by `agent`.
  const std::vector<std::size_t>& bundle(std::size_t agent) const {
    return bundles_.at(agent);
  }
  const std::vector<std::vector<std::size_t>>& bundles() const {
    return bundles_;
  }
  std::size_t owner(std::size_t item) const { return owner_.at(item); }
  const std::vector<std::size_t>& owners() const { return owner_; }
  bool IsComplete() const;

  friend bool operator==(const IntegralAllocation& a,
                         const IntegralAllocation& b) {
    return a.owner_ == b.owner_ && a.bundles_.size() == b.bundles_.size();
  }
  friend bool operator<(const IntegralAllocation& a,
                        const IntegralAllocation& b) {
    return a.owner_ < b.owner_;
  }

 private:
  std::vector<std::size_t> owner_;
  std::vector<std::vector<std::size_t>> bundles_;
};

// n x m matrix of shares; every column sums to one.
class FractionalAllocation {
 public:
  FractionalAllocation(std::size_t num_agents, std::size_t num_items);

  std::size_t num_agents() const { return rows_; }
  std::size_t num_items() const { return cols_; }
  Rational& at(std::size_t agent, std::size_t item) {
    return shares_.at(agent * cols_ + item);
  }
  const Rational& at(std::size_t agent, std::size_t item) const {
    return shares_.at(agent * cols_ + item);
  }
  // True when all entries lie in [0, 1] and every column sums to one.
  bool IsValid() const;

  static FractionalAllocation Uniform(const Instance& instance);

  friend bool operator==(const FractionalAllocation&,
                         const FractionalAllocation&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> shares_;
};

// 0/1 valuation respecting the agent's ranking: the `threshold` items at
// positions 1..threshold are worth 1. For chores that is the `threshold`
// worst chores, for goods the `threshold` best goods.
struct StepValuation {
  std::size_t threshold = 0;

  // Per-item values (indexed by item) for the given agent.
  std::vector<Rational> Values(const Instance& instance,
                               std::size_t agent) const;
};

// Agents in turn order; each turn takes the agent's best available item.
struct PickingSequence {
  std::vector<std::size_t> agents;

  friend bool operator==(const PickingSequence&,
                         const PickingSequence&) = default;
};

// Deterministic random instance: entitlements w_i / sum(w) with small
// integer weights, rankings uniform permutations.
Instance GenerateInstance(std::size_t num_agents, std::size_t num_items,
                          ItemKind kind, std::uint64_t seed);

}  // namespace wsdprop

#endif  // WSDPROP_INSTANCE_H_
