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

#include <sstream>

namespace wsdprop {
namespace {

Rational ItemCount(const Instance& instance) {
  return Rational(static_cast<std::int64_t>(instance.num_items()));
}

bool ReachesItem(const Instance& instance, std::int64_t threshold,
                 std::size_t agent, std::size_t item) {
  const auto pos = static_cast<std::int64_t>(instance.Position(agent, item));
  return instance.kind() == ItemKind::kChores ? pos >= threshold
                                              : pos <= threshold;
}

}  // namespace

std::size_t RegularSlotCount(const Instance& instance, std::size_t agent) {
  const Rational share = ItemCount(instance) * instance.entitlement(agent);
  if (instance.kind() == ItemKind::kChores) {
    return static_cast<std::size_t>(share.Floor()) + 1;
  }
  const std::int64_t c = share.Ceil() - 1;
  return c > 0 ? static_cast<std::size_t>(c) : 0;
}

std::int64_t SlotThreshold(const Instance& instance, std::size_t agent,
                           std::size_t position) {
  if (position < 1 || position > RegularSlotCount(instance, agent)) {
    throw std::out_of_range("slot position " + std::to_string(position) +
                            " out of range for agent " +
                            instance.agent(agent).name);
  }
  const Rational& alpha = instance.entitlement(agent);
  const auto l = static_cast<std::int64_t>(position);
  if (instance.kind() == ItemKind::kChores) {
    return (Rational(l - 1) / alpha).Ceil();
  }
  return (Rational(l) / alpha).Floor() + 1;
}

int RealItemRank(const Instance& instance, std::size_t agent,
                 std::size_t item) {
  const auto pos = static_cast<int>(instance.Position(agent, item));
  if (instance.kind() == ItemKind::kChores) {
    return static_cast<int>(instance.num_items()) + 1 - pos;
  }
  return pos;
}

std::size_t AllocationGraph::SlotIndex(std::size_t agent,
                                       std::size_t position) const {
  const auto& own = agent_slots_.at(agent);
  if (position < 1 || position > own.size()) {
    throw std::out_of_range("no slot at position " + std::to_string(position));
  }
  return own[position - 1];
}

AllocationGraph BuildAllocationGraph(const Instance& instance) {
  AllocationGraph g;
  g.kind_ = instance.kind();
  g.num_real_items_ = instance.num_items();
  g.agent_slots_.resize(instance.num_agents());
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    const std::size_t count = RegularSlotCount(instance, i);
    for (std::size_t l = 1; l <= count; ++l) {
      g.agent_slots_[i].push_back(g.slots_.size());
      g.slots_.push_back({i, l, false});
    }
  }
  for (std::size_t j = 0; j < instance.num_items(); ++j) {
    g.items_.push_back({j, false});
  }
  g.graph_ = BipartiteGraph(g.slots_.size(), g.items_.size());
  for (std::size_t s = 0; s < g.slots_.size(); ++s) {
    const Slot& slot = g.slots_[s];
    const std::int64_t threshold =
        SlotThreshold(instance, slot.agent, slot.position);
    for (std::size_t j = 0; j < instance.num_items(); ++j) {
      if (ReachesItem(instance, threshold, slot.agent, j)) {
        g.graph_.AddEdge(s, j, RealItemRank(instance, slot.agent, j));
      }
    }
  }
  return g;
}

AllocationGraph ExtendAllocationGraph(const AllocationGraph& plain,
                                      const Instance& instance) {
  if (plain.extended()) {
    throw std::invalid_argument("graph is already extended");
  }
  const std::size_t m = plain.num_real_items();
  const int base_rank = static_cast<int>(m) + 1;

  AllocationGraph g;
  g.kind_ = plain.kind_;
  g.extended_ = true;
  g.num_real_items_ = m;
  g.agent_slots_.resize(plain.num_agents());

  // Old left index -> new left index, for copying the regular edges.
  std::vector<std::size_t> remap(plain.slots_.size());
  if (plain.kind_ == ItemKind::kChores) {
    g.slots_ = plain.slots_;
    g.agent_slots_ = plain.agent_slots_;
    for (std::size_t s = 0; s < remap.size(); ++s) remap[s] = s;
    g.dummy_count_ = g.slots_.size() > m ? g.slots_.size() - m : 0;
  } else {
    const std::size_t q = m > plain.slots_.size() ? m - plain.slots_.size() : 0;
    g.spare_per_agent_ = q;
    for (std::size_t i = 0; i < plain.num_agents(); ++i) {
      const auto& own = plain.agent_slots_[i];
      for (std::size_t s : own) {
        remap[s] = g.slots_.size();
        g.agent_slots_[i].push_back(g.slots_.size());
        g.slots_.push_back(plain.slots_[s]);
      }
      for (std::size_t k = 1; k <= q; ++k) {
        g.agent_slots_[i].push_back(g.slots_.size());
        g.slots_.push_back({i, own.size() + k, true});
      }
    }
    g.dummy_count_ = g.slots_.size() > m ? g.slots_.size() - m : 0;
  }

  g.items_ = plain.items_;
  for (std::size_t d = 0; d < g.dummy_count_; ++d) g.items_.push_back({d, true});
  if (!g.IsBalanced()) {
    throw InternalError("extended allocation graph is not balanced: " +
                        std::to_string(g.slots_.size()) + " slots vs " +
                        std::to_string(g.items_.size()) + " items");
  }

  g.graph_ = BipartiteGraph(g.slots_.size(), g.items_.size());
  for (std::size_t s = 0; s < plain.slots_.size(); ++s) {
    for (const Edge& e : plain.graph_.Neighbors(s)) {
      g.graph_.AddEdge(remap[s], e.right, e.rank);
    }
  }
  for (std::size_t s = 0; s < g.slots_.size(); ++s) {
    const Slot& slot = g.slots_[s];
    if (slot.spare) {
      for (std::size_t j = 0; j < m; ++j) {
        g.graph_.AddEdge(s, j, RealItemRank(instance, slot.agent, j));
      }
    }
    const bool joins_dummies =
        g.kind_ == ItemKind::kChores || slot.spare;
    if (joins_dummies) {
      for (std::size_t d = 0; d < g.dummy_count_; ++d) {
        g.graph_.AddEdge(s, m + d, base_rank + static_cast<int>(d));
      }
    }
  }
  return g;
}

std::string SlotName(const AllocationGraph& graph, const Instance& instance,
                     std::size_t left) {
  const Slot& s = graph.slots().at(left);
  return std::string(s.spare ? "s'[" : "s[") + instance.agent(s.agent).name +
         "," + std::to_string(s.position) + "]";
}

std::string ItemVertexName(const AllocationGraph& graph,
                           const Instance& instance, std::size_t right) {
  const ItemVertex& v = graph.item_vertices().at(right);
  if (v.dummy) return "d" + std::to_string(v.index + 1);
  return instance.items().at(v.index);
}

namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ToDot(const AllocationGraph& graph, const Instance& instance) {
  std::ostringstream os;
  os << "graph allocation {\n  rankdir=LR;\n";
  os << "  subgraph cluster_slots {\n    label=\"slots\";\n";
  for (std::size_t s = 0; s < graph.slots().size(); ++s) {
    os << "    " << Quote(SlotName(graph, instance, s)) << " [shape=box"
       << (graph.slots()[s].spare ? ", style=dashed" : "") << "];\n";
  }
  os << "  }\n  subgraph cluster_items {\n    label=\"items\";\n";
  for (std::size_t j = 0; j < graph.item_vertices().size(); ++j) {
    os << "    " << Quote(ItemVertexName(graph, instance, j))
       << " [shape=ellipse" << (graph.IsDummy(j) ? ", style=dashed" : "")
       << "];\n";
  }
  os << "  }\n";
  for (std::size_t s = 0; s < graph.slots().size(); ++s) {
    for (const Edge& e : graph.graph().Neighbors(s)) {
      os << "  " << Quote(SlotName(graph, instance, s)) << " -- "
         << Quote(ItemVertexName(graph, instance, e.right))
         << " [label=" << e.rank
         << (graph.IsDummy(e.right) || graph.slots()[s].spare
                 ? ", style=dashed"
                 : "")
         << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace wsdprop
