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

#include "wsdprop/rank_maximal.h"

#include <algorithm>
#include <map>
#include <string>

#include "wsdprop/assignment.h"
#include "wsdprop/errors.h"
#include "wsdprop/fairness.h"

namespace wsdprop {

Matching RankMaximalPerfectMatching(const BipartiteGraph& graph) {
  // On a balanced graph every right vertex is matched, so one whose edges
  // all share a rank adds the same amount to every signature. Those edges
  // cost nothing, and ranks used only by them get no coordinate. This keeps
  // the cost vectors short on extended graphs, where each dummy has its own
  // rank.
  const std::size_t right = graph.right_size();
  std::vector<char> constant(right, 0);
  if (graph.left_size() == right) {
    std::vector<int> seen(right, 0);
    std::fill(constant.begin(), constant.end(), 1);
    for (std::size_t l = 0; l < graph.left_size(); ++l) {
      for (const Edge& e : graph.Neighbors(l)) {
        if (seen[e.right] == 0) {
          seen[e.right] = e.rank;
        } else if (seen[e.right] != e.rank) {
          constant[e.right] = 0;
        }
      }
    }
  }
  std::map<int, std::size_t> coordinate;
  for (std::size_t l = 0; l < graph.left_size(); ++l) {
    for (const Edge& e : graph.Neighbors(l)) {
      if (!constant[e.right]) coordinate.emplace(e.rank, 0);
    }
  }
  std::size_t dim = 0;
  for (auto& [rank, index] : coordinate) index = dim++;

  // Minimizing -e_rank lexicographically maximizes the rank-1 count first,
  // then rank 2, and so on.
  auto cost = [&](std::size_t, const Edge& e, LexCost& out) {
    out.SetUnit(constant[e.right] ? dim : coordinate.at(e.rank), -1);
  };
  return AssignmentMinCost(graph, cost, LexCost(dim)).matching;
}

Matching NormalizeSlotOrder(const Matching& m, const AllocationGraph& graph) {
  const BipartiteGraph& g = graph.graph();
  Matching out(m.left_size(), m.right_size());
  for (std::size_t a = 0; a < graph.num_agents(); ++a) {
    std::vector<std::size_t> slots;
    std::vector<std::pair<int, std::size_t>> items;  // (rank, right vertex)
    for (std::size_t s : graph.SlotsOf(a)) {
      const std::size_t r = m.MateOfLeft(s);
      if (r == kUnmatched) continue;
      // Dummies stay where they are: a dummy edge says nothing about the
      // slot's real neighbourhood, so moving one could force a non-edge.
      if (graph.IsDummy(r)) {
        out.Match(s, r);
        continue;
      }
      slots.push_back(s);
      const auto rank = g.Rank(s, r);
      if (!rank) throw InternalError("matched pair is not an edge");
      items.emplace_back(*rank, r);
    }
    std::sort(items.begin(), items.end());
    if (graph.kind() == ItemKind::kChores) {
      std::reverse(slots.begin(), slots.end());
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (!g.HasEdge(slots[k], items[k].second)) {
        throw InternalError("normalization needs a missing edge at slot " +
                            std::to_string(slots[k]));
      }
      out.Match(slots[k], items[k].second);
    }
  }
  return out;
}

std::vector<std::size_t> ExtractSlotOrder(const BipartiteGraph& graph,
                                          const Matching& m) {
  const std::size_t left = graph.left_size();
  std::vector<char> done(left, 0);
  std::vector<char> gone(graph.right_size(), 0);
  std::vector<std::size_t> order;
  std::size_t remaining = 0;
  for (std::size_t l = 0; l < left; ++l) {
    if (m.MateOfLeft(l) == kUnmatched) {
      done[l] = 1;
    } else {
      ++remaining;
    }
  }
  order.reserve(remaining);

  auto has_plus_edge = [&](std::size_t l) {
    const int own = *graph.Rank(l, m.MateOfLeft(l));
    for (const Edge& e : graph.Neighbors(l)) {
      if (!gone[e.right] && e.rank < own) return true;
    }
    return false;
  };

  while (remaining > 0) {
    std::size_t pick = left;
    for (std::size_t l = 0; l < left && pick == left; ++l) {
      if (!done[l] && !has_plus_edge(l)) pick = l;
    }
    if (pick == left) {
      throw NotRankMaximal("every remaining slot has a better available item");
    }
    done[pick] = 1;
    gone[m.MateOfLeft(pick)] = 1;
    order.push_back(pick);
    --remaining;
  }
  return order;
}

PickingSequence ExtractPickingSequence(const Matching& m,
                                       const AllocationGraph& graph) {
  PickingSequence seq;
  for (std::size_t s : ExtractSlotOrder(graph.graph(), m)) {
    if (graph.IsDummy(m.MateOfLeft(s))) continue;
    seq.agents.push_back(graph.slots()[s].agent);
  }
  return seq;
}

SequencedAllocation SequenceFromGraph(const Instance& instance,
                                      const AllocationGraph& graph) {
  const Matching rank_max = RankMaximalPerfectMatching(graph.graph());
  const Matching normalized = NormalizeSlotOrder(rank_max, graph);
  PickingSequence seq = ExtractPickingSequence(normalized, graph);
  const IntegralAllocation matched = MatchingToAllocation(graph, normalized);

  const std::size_t m = instance.num_items();
  const std::size_t n = instance.num_agents();
  for (std::size_t turn = 0; seq.agents.size() < m; ++turn) {
    seq.agents.push_back(turn % n);
  }
  IntegralAllocation alloc = SimulatePickingSequence(instance, seq);
  for (std::size_t j = 0; j < m; ++j) {
    if (matched.owner(j) != kUnassigned && matched.owner(j) != alloc.owner(j)) {
      throw InternalError("picking sequence does not reproduce the matching");
    }
  }
  return {std::move(alloc), std::move(seq), normalized};
}

SequencedAllocation SolveSequencible(const Instance& instance) {
  const AllocationGraph plain = BuildAllocationGraph(instance);
  if (instance.kind() == ItemKind::kGoods) {
    return SequenceFromGraph(instance, plain);
  }
  return SequenceFromGraph(instance, ExtendAllocationGraph(plain, instance));
}

}  // namespace wsdprop
