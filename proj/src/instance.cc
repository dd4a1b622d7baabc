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

#include "wsdprop/instance.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

namespace wsdprop {

std::string_view ToString(ItemKind kind) {
  return kind == ItemKind::kGoods ? "goods" : "chores";
}

ItemKind ParseItemKind(std::string_view text) {
  if (text == "goods") return ItemKind::kGoods;
  if (text == "chores") return ItemKind::kChores;
  throw std::invalid_argument("kind must be \"goods\" or \"chores\", got \"" +
                              std::string(text) + "\"");
}

std::string_view ToString(ValidationCode code) {
  switch (code) {
    case ValidationCode::kEmptyAgentList: return "EmptyAgentList";
    case ValidationCode::kEntitlementSumNotOne: return "EntitlementSumNotOne";
    case ValidationCode::kZeroEntitlement: return "ZeroEntitlement";
    case ValidationCode::kEntitlementOutOfRange: return "EntitlementOutOfRange";
    case ValidationCode::kDuplicateItemInRanking:
      return "DuplicateItemInRanking";
    case ValidationCode::kMissingItemInRanking: return "MissingItemInRanking";
    case ValidationCode::kUnknownItemInRanking: return "UnknownItemInRanking";
    case ValidationCode::kDuplicateItemId: return "DuplicateItemId";
    case ValidationCode::kDuplicateAgentName: return "DuplicateAgentName";
  }
  return "Unknown";
}

namespace {

std::string JoinIssues(const std::vector<ValidationIssue>& issues) {
  std::string out = "invalid instance";
  for (const auto& issue : issues) {
    out += "; ";
    out += ToString(issue.code);
    out += ": ";
    out += issue.message;
  }
  return out;
}

}  // namespace

InstanceError::InstanceError(std::vector<ValidationIssue> issues)
    : std::runtime_error(JoinIssues(issues)), issues_(std::move(issues)) {}

bool InstanceError::Has(ValidationCode code) const {
  return std::any_of(issues_.begin(), issues_.end(),
                     [code](const ValidationIssue& i) { return i.code == code; });
}

std::optional<std::size_t> Instance::FindItem(std::string_view name) const {
  const auto it = std::find(items_.begin(), items_.end(), name);
  if (it == items_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin());
}

std::optional<std::size_t> Instance::FindAgent(std::string_view name) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i].name == name) return i;
  }
  return std::nullopt;
}

RawInstance Instance::ToRaw() const {
  RawInstance raw;
  raw.kind = kind_;
  raw.items = items_;
  for (const Agent& a : agents_) {
    RawAgent ra{a.name, a.entitlement, {}};
    for (std::size_t item : a.ranking) ra.ranking.push_back(items_[item]);
    raw.agents.push_back(std::move(ra));
  }
  return raw;
}

Instance ValidateInstance(const RawInstance& raw) {
  std::vector<ValidationIssue> issues;
  auto report = [&issues](ValidationCode code, std::string message) {
    issues.push_back({code, std::move(message)});
  };

  std::map<std::string, std::size_t, std::less<>> item_index;
  for (std::size_t j = 0; j < raw.items.size(); ++j) {
    if (!item_index.emplace(raw.items[j], j).second) {
      report(ValidationCode::kDuplicateItemId,
             "item \"" + raw.items[j] + "\" listed twice");
    }
  }
  if (raw.agents.empty()) {
    report(ValidationCode::kEmptyAgentList, "instance has no agents");
  }

  Instance inst;
  inst.kind_ = raw.kind;
  inst.items_ = raw.items;

  std::set<std::string, std::less<>> names;
  Rational total = 0;
  for (const RawAgent& ra : raw.agents) {
    if (!names.insert(ra.name).second) {
      report(ValidationCode::kDuplicateAgentName,
             "agent name \"" + ra.name + "\" used twice");
    }
    total += ra.entitlement;
    if (ra.entitlement.IsZero()) {
      report(ValidationCode::kZeroEntitlement,
             "agent \"" + ra.name + "\" has zero entitlement; remove it");
    } else if (ra.entitlement.Sign() < 0 || ra.entitlement > Rational(1)) {
      report(ValidationCode::kEntitlementOutOfRange,
             "agent \"" + ra.name + "\" has entitlement " +
                 ra.entitlement.ToString() + " outside (0, 1]");
    }

    Agent agent{ra.name, ra.entitlement, {}};
    std::vector<bool> seen(raw.items.size(), false);
    for (const std::string& name : ra.ranking) {
      const auto it = item_index.find(name);
      if (it == item_index.end()) {
        report(ValidationCode::kUnknownItemInRanking,
               "agent \"" + ra.name + "\" ranks unknown item \"" + name + "\"");
        continue;
      }
      if (seen[it->second]) {
        report(ValidationCode::kDuplicateItemInRanking,
               "agent \"" + ra.name + "\" ranks \"" + name + "\" twice");
        continue;
      }
      seen[it->second] = true;
      agent.ranking.push_back(it->second);
    }
    for (std::size_t j = 0; j < raw.items.size(); ++j) {
      if (!seen[j]) {
        report(ValidationCode::kMissingItemInRanking,
               "agent \"" + ra.name + "\" does not rank \"" + raw.items[j] +
                   "\"");
      }
    }
    inst.agents_.push_back(std::move(agent));
  }
  if (!raw.agents.empty() && total != Rational(1)) {
    report(ValidationCode::kEntitlementSumNotOne,
           "entitlements sum to " + total.ToString() + ", not 1");
  }
  if (!issues.empty()) throw InstanceError(std::move(issues));

  for (const Agent& a : inst.agents_) {
    std::vector<std::size_t> pos(inst.items_.size());
    for (std::size_t p = 0; p < a.ranking.size(); ++p) pos[a.ranking[p]] = p + 1;
    inst.positions_.push_back(std::move(pos));
  }
  return inst;
}

IntervalSet MakeIntervalSet(const Instance& instance, std::size_t agent) {
  const Rational& alpha = instance.entitlement(agent);
  const Rational m(static_cast<std::int64_t>(instance.num_items()));
  const std::int64_t count = (m * alpha).Ceil();
  const Rational width = Rational(1) / alpha;

  IntervalSet set;
  set.agent = agent;
  for (std::int64_t l = 1; l <= count; ++l) {
    Rational lo = Rational(l - 1) * width;
    Rational hi = Min(Rational(l) * width, m);
    set.intervals.push_back({std::move(lo), std::move(hi)});
  }
  return set;
}

Rational Overlap(const Interval& interval, std::size_t position) {
  const Rational lo = Max(interval.lo, Rational(static_cast<std::int64_t>(position) - 1));
  const Rational hi = Min(interval.hi, Rational(static_cast<std::int64_t>(position)));
  return hi > lo ? hi - lo : Rational(0);
}

IntegralAllocation::IntegralAllocation(std::size_t num_agents,
                                       std::size_t num_items)
    : owner_(num_items, kUnassigned), bundles_(num_agents) {}

IntegralAllocation IntegralAllocation::FromOwners(
    std::size_t num_agents, std::vector<std::size_t> owner) {
  IntegralAllocation a(num_agents, owner.size());
  for (std::size_t j = 0; j < owner.size(); ++j) {
    if (owner[j] != kUnassigned) a.Assign(j, owner[j]);
  }
  return a;
}

IntegralAllocation IntegralAllocation::FromBundles(
    std::size_t num_items, const std::vector<std::vector<std::size_t>>& bundles) {
  IntegralAllocation a(bundles.size(), num_items);
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    for (std::size_t item : bundles[i]) a.Assign(item, i);
  }
  return a;
}

void IntegralAllocation::Assign(std::size_t item, std::size_t agent) {
  if (item >= owner_.size()) {
    throw MalformedAllocation("item index " + std::to_string(item) +
                              " out of range");
  }
  if (agent >= bundles_.size()) {
    throw MalformedAllocation("agent index " + std::to_string(agent) +
                              " out of range");
  }
  if (owner_[item] != kUnassigned) {
    throw MalformedAllocation("item " + std::to_string(item) +
                              " assigned twice");
  }
  owner_[item] = agent;
  auto& b = bundles_[agent];
  b.insert(std::upper_bound(b.begin(), b.end(), item), item);
}

bool IntegralAllocation::IsComplete() const {
  return std::find(owner_.begin(), owner_.end(), kUnassigned) == owner_.end();
}

FractionalAllocation::FractionalAllocation(std::size_t num_agents,
                                           std::size_t num_items)
    : rows_(num_agents), cols_(num_items), shares_(num_agents * num_items) {}

bool FractionalAllocation::IsValid() const {
  for (std::size_t j = 0; j < cols_; ++j) {
    Rational sum = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rational& x = at(i, j);
      if (x.Sign() < 0 || x > Rational(1)) return false;
      sum += x;
    }
    if (sum != Rational(1)) return false;
  }
  return true;
}

FractionalAllocation FractionalAllocation::Uniform(const Instance& instance) {
  FractionalAllocation x(instance.num_agents(), instance.num_items());
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    for (std::size_t j = 0; j < instance.num_items(); ++j) {
      x.at(i, j) = instance.entitlement(i);
    }
  }
  return x;
}

std::vector<Rational> StepValuation::Values(const Instance& instance,
                                            std::size_t agent) const {
  std::vector<Rational> v(instance.num_items(), Rational(0));
  for (std::size_t p = 1; p <= threshold && p <= instance.num_items(); ++p) {
    v[instance.ItemAt(agent, p)] = 1;
  }
  return v;
}

namespace {

// Uniform integer in [0, bound) from a 64-bit engine, by rejection; the
// standard distributions are not specified bit-for-bit across libraries.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Instance GenerateInstance(std::size_t num_agents, std::size_t num_items,
                          ItemKind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RawInstance raw;
  raw.kind = kind;
  for (std::size_t j = 0; j < num_items; ++j) {
    raw.items.push_back("b" + std::to_string(j + 1));
  }
  std::vector<std::int64_t> weights(num_agents);
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = static_cast<std::int64_t>(1 + UniformBelow(rng, 9));
    total += w;
  }
  for (std::size_t i = 0; i < num_agents; ++i) {
    RawAgent agent{"a" + std::to_string(i + 1), Rational(weights[i], total),
                   raw.items};
    for (std::size_t k = agent.ranking.size(); k > 1; --k) {
      std::swap(agent.ranking[k - 1], agent.ranking[UniformBelow(rng, k)]);
    }
    raw.agents.push_back(std::move(agent));
  }
  return ValidateInstance(raw);
}

}  // namespace wsdprop
