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

#include "wsdprop/fairness.h"

#include <algorithm>
#include <string>

#include "wsdprop/errors.h"

namespace wsdprop {

std::string_view ToString(Condition condition) {
  switch (condition) {
    case Condition::kCountBound:
      return "CountBound";
    case Condition::kRankBound:
      return "RankBound";
  }
  return "?";
}

namespace {

BundleReport Fail(std::size_t agent, Condition c, std::size_t index,
                  std::int64_t k) {
  BundleReport r;
  r.agent = agent;
  r.passes = false;
  r.violated = c;
  r.rank_index = index;
  r.witness = StepValuation{static_cast<std::size_t>(k)};
  return r;
}

}  // namespace

BundleReport CheckBundle(const Instance& instance, std::size_t agent,
                         std::span<const std::size_t> bundle) {
  const Rational& alpha = instance.entitlement(agent);
  const auto m = static_cast<std::int64_t>(instance.num_items());
  const Rational share = Rational(m) * alpha;
  std::vector<std::int64_t> ranks;
  ranks.reserve(bundle.size());
  for (std::size_t item : bundle) {
    ranks.push_back(static_cast<std::int64_t>(instance.Position(agent, item)));
  }
  std::sort(ranks.begin(), ranks.end());
  const auto size = static_cast<std::int64_t>(ranks.size());

  if (instance.kind() == ItemKind::kChores) {
    if (size > share.Floor() + 1) {
      return Fail(agent, Condition::kCountBound, 0, m);
    }
    for (std::int64_t l = 1; l <= size; ++l) {
      const std::int64_t bound = (Rational(l - 1) / alpha).Ceil();
      if (ranks[l - 1] < bound) {
        return Fail(agent, Condition::kRankBound, l, bound - 1);
      }
    }
  } else {
    if (size < share.Ceil() - 1) {
      return Fail(agent, Condition::kCountBound, 0, m);
    }
    for (std::int64_t l = 1; l <= size; ++l) {
      const std::int64_t bound = (Rational(l) / alpha).Floor() + 1;
      if (ranks[l - 1] > bound) {
        return Fail(agent, Condition::kRankBound, l, bound);
      }
    }
  }
  BundleReport ok;
  ok.agent = agent;
  return ok;
}

AllocationReport CheckAllocation(const Instance& instance,
                                 const IntegralAllocation& allocation) {
  if (allocation.num_agents() != instance.num_agents() ||
      allocation.num_items() != instance.num_items()) {
    throw MalformedAllocation("allocation shape does not match the instance");
  }
  if (instance.kind() == ItemKind::kChores && !allocation.IsComplete()) {
    throw MalformedAllocation("every chore must be allocated");
  }
  AllocationReport report;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    report.agents.push_back(CheckBundle(instance, i, allocation.bundle(i)));
    report.passes = report.passes && report.agents.back().passes;
  }
  return report;
}

bool CheckWprop1Cardinal(ItemKind kind, std::span<const std::size_t> bundle,
                         std::span<const Rational> values,
                         const Rational& alpha) {
  Rational total;
  for (const Rational& v : values) {
    if (v.Sign() < 0) throw NegativeValue("valuation has a negative entry");
    total += v;
  }
  std::vector<char> in_bundle(values.size(), 0);
  Rational own;
  for (std::size_t item : bundle) {
    in_bundle.at(item) = 1;
    own += values[item];
  }
  const Rational target = alpha * total;
  if (kind == ItemKind::kChores) {
    Rational best_removal;
    for (std::size_t item : bundle) best_removal = Max(best_removal, values[item]);
    return own - best_removal <= target;
  }
  Rational best_addition;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (!in_bundle[j]) best_addition = Max(best_addition, values[j]);
  }
  return own + best_addition >= target;
}

bool StepValuationOracle(const Instance& instance, std::size_t agent,
                         std::span<const std::size_t> bundle) {
  const Rational& alpha = instance.entitlement(agent);
  for (std::size_t k = 1; k <= instance.num_items(); ++k) {
    const std::vector<Rational> v = StepValuation{k}.Values(instance, agent);
    if (!CheckWprop1Cardinal(instance.kind(), bundle, v, alpha)) return false;
  }
  return true;
}

IntegralAllocation SimulatePickingSequence(const Instance& instance,
                                           const PickingSequence& sequence) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_items();
  if (sequence.agents.size() > m) {
    throw InvalidSequence("sequence has " +
                          std::to_string(sequence.agents.size()) +
                          " turns but there are only " + std::to_string(m) +
                          " items");
  }
  const bool chores = instance.kind() == ItemKind::kChores;
  if (chores && sequence.agents.size() < m) {
    throw InvalidSequence("sequence leaves chores unallocated");
  }
  IntegralAllocation alloc(n, m);
  std::vector<char> taken(m, 0);
  // Next position to inspect per agent; goods scan forward, chores backward.
  std::vector<std::size_t> cursor(n, chores ? m : 1);
  for (std::size_t a : sequence.agents) {
    if (a >= n) throw InvalidSequence("unknown agent index in sequence");
    std::size_t& pos = cursor[a];
    while (taken[instance.ItemAt(a, pos)]) chores ? --pos : ++pos;
    const std::size_t item = instance.ItemAt(a, pos);
    taken[item] = 1;
    alloc.Assign(item, a);
  }
  return alloc;
}

bool CheckWsdefFractional(const Instance& instance,
                          const FractionalAllocation& allocation) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_items();
  const bool goods = instance.kind() == ItemKind::kGoods;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& ai = instance.entitlement(i);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      const Rational& ak = instance.entitlement(k);
      Rational own, other;
      for (std::size_t pos = 1; pos <= m; ++pos) {
        const std::size_t item = instance.ItemAt(i, pos);
        own += allocation.at(i, item);
        other += allocation.at(k, item);
        // own/ai vs other/ak, cross-multiplied (both entitlements positive).
        const Rational lhs = own * ak;
        const Rational rhs = other * ai;
        if (goods ? lhs < rhs : lhs > rhs) return false;
      }
    }
  }
  return true;
}

std::vector<IntegralAllocation> EnumerateWsdprop1(const Instance& instance,
                                                  std::uint64_t cap) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_items();
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (count > cap / n) {
      throw InstanceTooLarge("n^m exceeds the enumeration cap of " +
                             std::to_string(cap));
    }
    count *= n;
  }
  if (count > cap) {
    throw InstanceTooLarge("n^m exceeds the enumeration cap of " +
                           std::to_string(cap));
  }

  std::vector<IntegralAllocation> out;
  std::vector<std::size_t> owner(m, 0);
  while (true) {
    IntegralAllocation alloc = IntegralAllocation::FromOwners(n, owner);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = CheckBundle(instance, i, alloc.bundle(i)).passes;
    }
    if (ok) out.push_back(std::move(alloc));
    // Odometer with the last item varying fastest, so output is sorted.
    std::size_t j = m;
    while (j > 0 && owner[j - 1] + 1 == n) owner[--j] = 0;
    if (j == 0) break;
    ++owner[j - 1];
  }
  return out;
}

}  // namespace wsdprop
