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

#ifndef WSDPROP_ALLOCATION_GRAPH_H_
#define WSDPROP_ALLOCATION_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wsdprop/bipartite_graph.h"
#include "wsdprop/errors.h"
#include "wsdprop/instance.h"

namespace wsdprop {

// The position-th capacity unit of an agent (1-based). Spare slots only
// appear in extended goods graphs and accept any good.
struct Slot {
  std::size_t agent;
  std::size_t position;
  bool spare;
};

// Right-hand vertex: a real item (index into Instance::items) or a dummy.
struct ItemVertex {
  std::size_t index;
  bool dummy;
};

// Number of regular slots of an agent: floor(m*alpha)+1 for chores,
// max(ceil(m*alpha)-1, 0) for goods.
std::size_t RegularSlotCount(const Instance& instance, std::size_t agent);

// Rank bound of slot `position`: a chore is reachable when its position is at
// least ceil((position-1)/alpha); a good when its position is at most
// floor(position/alpha)+1. Throws std::out_of_range for positions outside
// 1..RegularSlotCount.
std::int64_t SlotThreshold(const Instance& instance, std::size_t agent,
                           std::size_t position);

// Slots on the left, items on the right. Left vertex i is slots()[i], right
// vertex j is item_vertices()[j]; real items come first, in instance order,
// then dummies. Slots are grouped by agent in input order, positions
// ascending, spare slots after regular ones.
class AllocationGraph {
 public:
  ItemKind kind() const { return kind_; }
  bool extended() const { return extended_; }
  const BipartiteGraph& graph() const { return graph_; }
  const std::vector<Slot>& slots() const { return slots_; }
  const std::vector<ItemVertex>& item_vertices() const { return items_; }
  std::size_t num_real_items() const { return num_real_items_; }
  std::size_t dummy_count() const { return dummy_count_; }
  std::size_t spare_per_agent() const { return spare_per_agent_; }
  std::size_t num_agents() const { return agent_slots_.size(); }

  // Left-vertex indices belonging to an agent, in position order.
  const std::vector<std::size_t>& SlotsOf(std::size_t agent) const {
    return agent_slots_.at(agent);
  }
  // Left-vertex index of (agent, position); throws std::out_of_range.
  std::size_t SlotIndex(std::size_t agent, std::size_t position) const;

  bool IsDummy(std::size_t right) const { return items_.at(right).dummy; }
  bool IsBalanced() const { return slots_.size() == items_.size(); }

 private:
  friend AllocationGraph BuildAllocationGraph(const Instance& instance);
  friend AllocationGraph ExtendAllocationGraph(const AllocationGraph& plain,
                                               const Instance& instance);

  ItemKind kind_ = ItemKind::kChores;
  bool extended_ = false;
  BipartiteGraph graph_;
  std::vector<Slot> slots_;
  std::vector<ItemVertex> items_;
  std::vector<std::vector<std::size_t>> agent_slots_;
  std::size_t num_real_items_ = 0;
  std::size_t dummy_count_ = 0;
  std::size_t spare_per_agent_ = 0;
};

// Matching-rank of the edge between an agent's slot and a real item: for
// chores m+1-position (the least disliked chore has rank 1), for goods the
// position itself.
int RealItemRank(const Instance& instance, std::size_t agent, std::size_t item);

AllocationGraph BuildAllocationGraph(const Instance& instance);

// Balances a plain graph. Chores: q = |S|-m dummy chores joined to every slot.
// Goods: q = m-|S| spare slots per agent joined to every good, then
// t = |S'|-m dummy goods. Dummy j (0-based) has rank m+1+j on every edge.
AllocationGraph ExtendAllocationGraph(const AllocationGraph& plain,
                                      const Instance& instance);

// Graphviz rendering: slots left, items right, spare/dummy vertices dashed,
// edges labelled with their rank.
std::string ToDot(const AllocationGraph& graph, const Instance& instance);

// Display names, e.g. "s[a1,2]", "s'[a1,3]", "b4", "d1".
std::string SlotName(const AllocationGraph& graph, const Instance& instance,
                     std::size_t left);
std::string ItemVertexName(const AllocationGraph& graph,
                           const Instance& instance, std::size_t right);

}  // namespace wsdprop

#endif  // WSDPROP_ALLOCATION_GRAPH_H_
