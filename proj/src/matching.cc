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

#include <deque>
#include <functional>
#include <set>

#include "wsdprop/errors.h"

namespace wsdprop {

void Matching::Match(std::size_t left, std::size_t right) {
  if (left_.at(left) != kUnmatched || right_.at(right) != kUnmatched) {
    throw std::logic_error("vertex already matched");
  }
  left_[left] = right;
  right_[right] = left;
  ++size_;
}

void Matching::Unmatch(std::size_t left) {
  const std::size_t right = left_.at(left);
  if (right == kUnmatched) return;
  left_[left] = kUnmatched;
  right_[right] = kUnmatched;
  --size_;
}

std::vector<std::pair<std::size_t, std::size_t>> Matching::Pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(size_);
  for (std::size_t l = 0; l < left_.size(); ++l) {
    if (left_[l] != kUnmatched) out.emplace_back(l, left_[l]);
  }
  return out;
}

bool IsMatchingOf(const BipartiteGraph& graph, const Matching& m) {
  if (m.left_size() != graph.left_size() ||
      m.right_size() != graph.right_size()) {
    return false;
  }
  for (const auto& [l, r] : m.Pairs()) {
    if (!graph.HasEdge(l, r)) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& graph, Matching& m)
      : graph_(graph),
        m_(m),
        dist_(graph.left_size()),
        next_edge_(graph.left_size()) {}

  void Run() {
    while (Layer()) {
      std::fill(next_edge_.begin(), next_edge_.end(), 0);
      for (std::size_t u = 0; u < graph_.left_size(); ++u) {
        if (m_.MateOfLeft(u) == kUnmatched) Augment(u);
      }
    }
  }

 private:
  // BFS from all free left vertices; true when some free right vertex is
  // reachable along alternating paths.
  bool Layer() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < graph_.left_size(); ++u) {
      if (m_.MateOfLeft(u) == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInfinity;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const Edge& e : graph_.Neighbors(u)) {
        const std::size_t w = m_.MateOfRight(e.right);
        if (w == kUnmatched) {
          found = true;
        } else if (dist_[w] == kInfinity) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool Augment(std::size_t u) {
    const auto adj = graph_.Neighbors(u);
    for (std::size_t& k = next_edge_[u]; k < adj.size(); ++k) {
      const std::size_t v = adj[k].right;
      const std::size_t w = m_.MateOfRight(v);
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && Augment(w))) {
        m_.Unmatch(u);
        m_.Match(u, v);
        return true;
      }
    }
    dist_[u] = kInfinity;
    return false;
  }

  const BipartiteGraph& graph_;
  Matching& m_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace

Matching MaxMatching(const BipartiteGraph& graph) {
  return MaxMatching(graph, Matching(graph.left_size(), graph.right_size()));
}

Matching MaxMatching(const BipartiteGraph& graph, Matching seed) {
  if (!IsMatchingOf(graph, seed)) {
    throw std::invalid_argument("seed is not a matching of the graph");
  }
  HopcroftKarp(graph, seed).Run();
  return seed;
}

Signature ComputeSignature(const BipartiteGraph& graph, const Matching& m) {
  Signature sig;
  sig.counts.assign(static_cast<std::size_t>(graph.max_rank()), 0);
  for (const auto& [l, r] : m.Pairs()) {
    const auto rank = graph.Rank(l, r);
    if (!rank) throw std::invalid_argument("matched pair is not an edge");
    ++sig.counts.at(static_cast<std::size_t>(*rank - 1));
  }
  return sig;
}

IntegralAllocation MatchingToAllocation(const AllocationGraph& graph,
                                        const Matching& m) {
  IntegralAllocation alloc(graph.num_agents(), graph.num_real_items());
  for (const auto& [l, r] : m.Pairs()) {
    const ItemVertex& item = graph.item_vertices()[r];
    if (!item.dummy) alloc.Assign(item.index, graph.slots()[l].agent);
  }
  return alloc;
}

IntegralAllocation PerfectAllocation(const Instance& instance) {
  const AllocationGraph plain = BuildAllocationGraph(instance);
  const Matching m = MaxMatching(plain.graph());
  if (instance.kind() == ItemKind::kChores) {
    if (!m.IsRightPerfect()) {
      throw InternalError("chores allocation graph has no item-perfect matching");
    }
    return MatchingToAllocation(plain, m);
  }
  if (!m.IsLeftPerfect()) {
    throw InternalError("goods allocation graph has no slot-perfect matching");
  }
  // Carry the slot-perfect matching into the extended graph and finish it
  // there; leftover goods land on spare slots of some agent.
  const AllocationGraph extended = ExtendAllocationGraph(plain, instance);
  Matching seed(extended.slots().size(), extended.item_vertices().size());
  for (const auto& [l, r] : m.Pairs()) {
    const Slot& s = plain.slots()[l];
    seed.Match(extended.SlotIndex(s.agent, s.position), r);
  }
  const Matching full = MaxMatching(extended.graph(), std::move(seed));
  if (!full.IsPerfect()) {
    throw InternalError("extended goods graph has no perfect matching");
  }
  return MatchingToAllocation(extended, full);
}

std::vector<IntegralAllocation> EnumerateMatchingAllocations(
    const Instance& instance, std::uint64_t cap) {
  const AllocationGraph plain = BuildAllocationGraph(instance);
  const BipartiteGraph& g = plain.graph();
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_items();
  std::set<std::vector<std::size_t>> found;
  std::uint64_t explored = 0;
  auto tick = [&] {
    if (++explored > cap) {
      throw InstanceTooLarge("matching enumeration exceeded " +
                             std::to_string(cap) + " states");
    }
  };
  std::vector<std::size_t> owner(m, kUnassigned);

  if (instance.kind() == ItemKind::kChores) {
    std::vector<std::vector<std::size_t>> slots_of_item(m);
    for (std::size_t s = 0; s < g.left_size(); ++s) {
      for (const Edge& e : g.Neighbors(s)) slots_of_item[e.right].push_back(s);
    }
    std::vector<bool> used(g.left_size(), false);
    std::function<void(std::size_t)> place = [&](std::size_t item) {
      if (item == m) {
        tick();
        found.insert(owner);
        return;
      }
      for (std::size_t s : slots_of_item[item]) {
        if (used[s]) continue;
        used[s] = true;
        owner[item] = plain.slots()[s].agent;
        place(item + 1);
        used[s] = false;
      }
      owner[item] = kUnassigned;
    };
    place(0);
  } else {
    std::vector<bool> taken(m, false);
    std::function<void(std::size_t)> complete = [&](std::size_t item) {
      if (item == m) {
        tick();
        found.insert(owner);
        return;
      }
      if (taken[item]) {
        complete(item + 1);
        return;
      }
      for (std::size_t a = 0; a < n; ++a) {
        owner[item] = a;
        complete(item + 1);
      }
      owner[item] = kUnassigned;
    };
    std::function<void(std::size_t)> fill = [&](std::size_t slot) {
      if (slot == g.left_size()) {
        complete(0);
        return;
      }
      for (const Edge& e : g.Neighbors(slot)) {
        if (taken[e.right]) continue;
        taken[e.right] = true;
        owner[e.right] = plain.slots()[slot].agent;
        fill(slot + 1);
        owner[e.right] = kUnassigned;
        taken[e.right] = false;
      }
    };
    fill(0);
  }

  std::vector<IntegralAllocation> out;
  out.reserve(found.size());
  for (const auto& o : found) out.push_back(IntegralAllocation::FromOwners(n, o));
  return out;
}

}  // namespace wsdprop
