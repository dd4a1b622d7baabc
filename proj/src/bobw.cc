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

#include "wsdprop/bobw.h"

#include <map>
#include <string>

#include "wsdprop/errors.h"

namespace wsdprop {

DoublyStochasticMatrix BuildFractionalMatching(const Instance& instance,
                                               const AllocationGraph& graph) {
  if (!graph.extended()) {
    throw std::invalid_argument("fractional matching needs an extended graph");
  }
  const BipartiteGraph& g = graph.graph();
  const std::size_t p = graph.slots().size();
  std::vector<DoublyStochasticMatrix::Row> rows(p);
  std::vector<Rational> load(p);
  const Rational one(1);

  auto add = [&](std::size_t slot, std::size_t right, const Rational& w) {
    if (!g.HasEdge(slot, right)) {
      throw InternalError("fractional weight on missing edge " +
                          SlotName(graph, instance, slot) + " -- " +
                          ItemVertexName(graph, instance, right));
    }
    rows[slot][right] += w;
    load[slot] += w;
    if (load[slot] > one) {
      throw InternalError("slot " + SlotName(graph, instance, slot) +
                          " exceeds capacity one");
    }
  };

  const bool goods = instance.kind() == ItemKind::kGoods;
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    const Rational& alpha = instance.entitlement(i);
    const IntervalSet set = MakeIntervalSet(instance, i);
    const std::size_t k = set.intervals.size();
    for (std::size_t l = 1; l <= k; ++l) {
      const Interval& iv = set.intervals[l - 1];
      // For goods the last interval has no regular slot; it lands on the
      // first spare slot, which sits right after the regular ones.
      const std::size_t slot = graph.SlotIndex(i, l);
      if (goods && l == k && !graph.slots()[slot].spare) {
        throw InternalError("expected a spare slot for the last interval");
      }
      const std::size_t first = static_cast<std::size_t>(iv.lo.Floor()) + 1;
      const std::size_t last = static_cast<std::size_t>(iv.hi.Ceil());
      for (std::size_t pos = first; pos <= last; ++pos) {
        const Rational delta = Overlap(iv, pos);
        if (delta.IsZero()) continue;
        add(slot, instance.ItemAt(i, pos), alpha * delta);
      }
    }
  }

  const std::size_t m = graph.num_real_items();
  std::vector<Rational> dummy_room(graph.dummy_count(), one);
  std::size_t d = 0;
  for (std::size_t s = 0; s < p; ++s) {
    while (load[s] < one) {
      while (d < dummy_room.size() && dummy_room[d].IsZero()) ++d;
      if (d == dummy_room.size()) {
        throw InternalError("dummies exhausted before slot " +
                            SlotName(graph, instance, s) + " was filled");
      }
      const Rational w = Min(one - load[s], dummy_room[d]);
      add(s, m + d, w);
      dummy_room[d] -= w;
    }
  }
  return DoublyStochasticMatrix(std::move(rows));
}

FractionalAllocation AgentShares(const AllocationGraph& graph,
                                 const DoublyStochasticMatrix& matching) {
  FractionalAllocation x(graph.num_agents(), graph.num_real_items());
  for (std::size_t s = 0; s < matching.size(); ++s) {
    for (const auto& [j, w] : matching.rows()[s]) {
      if (!graph.IsDummy(j)) x.at(graph.slots()[s].agent, j) += w;
    }
  }
  return x;
}

FractionalAllocation Mixture(const Lottery& lottery, std::size_t num_agents,
                             std::size_t num_items) {
  FractionalAllocation x(num_agents, num_items);
  for (const LotteryPart& part : lottery.parts) {
    for (std::size_t j = 0; j < num_items; ++j) {
      const std::size_t owner = part.allocation.owner(j);
      if (owner != kUnassigned) x.at(owner, j) += part.probability;
    }
  }
  return x;
}

UniformLotteryResult UniformLottery(const Instance& instance) {
  const AllocationGraph graph =
      ExtendAllocationGraph(BuildAllocationGraph(instance), instance);
  const DoublyStochasticMatrix x = BuildFractionalMatching(instance, graph);
  const std::vector<PermutationTerm> terms = BvnDecompose(x);

  UniformLotteryResult result;
  result.side_size = graph.slots().size();
  result.decomposition_size = terms.size();
  std::map<std::vector<std::size_t>, std::size_t> index_of;
  for (const PermutationTerm& t : terms) {
    IntegralAllocation alloc(instance.num_agents(), instance.num_items());
    for (std::size_t s = 0; s < t.permutation.size(); ++s) {
      const std::size_t r = t.permutation[s];
      if (!graph.IsDummy(r)) alloc.Assign(r, graph.slots()[s].agent);
    }
    const auto [it, fresh] =
        index_of.emplace(alloc.owners(), result.lottery.parts.size());
    if (fresh) {
      result.lottery.parts.push_back({t.weight, std::move(alloc)});
    } else {
      result.lottery.parts[it->second].probability += t.weight;
    }
  }
  return result;
}

}  // namespace wsdprop
