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

#ifndef WSDPROP_MATCHING_H_
#define WSDPROP_MATCHING_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "wsdprop/allocation_graph.h"
#include "wsdprop/bipartite_graph.h"
#include "wsdprop/instance.h"

namespace wsdprop {

inline constexpr std::size_t kUnmatched =
    std::numeric_limits<std::size_t>::max();

class Matching {
 public:
  Matching() = default;
  Matching(std::size_t left_size, std::size_t right_size)
      : left_(left_size, kUnmatched), right_(right_size, kUnmatched) {}

  // Both endpoints must currently be free.
  void Match(std::size_t left, std::size_t right);
  void Unmatch(std::size_t left);

  std::size_t left_size() const { return left_.size(); }
  std::size_t right_size() const { return right_.size(); }
  std::size_t MateOfLeft(std::size_t left) const { return left_.at(left); }
  std::size_t MateOfRight(std::size_t right) const { return right_.at(right); }
  std::size_t size() const { return size_; }

  bool IsLeftPerfect() const { return size_ == left_.size(); }
  bool IsRightPerfect() const { return size_ == right_.size(); }
  bool IsPerfect() const { return IsLeftPerfect() && IsRightPerfect(); }

  // (left, right) pairs ordered by left vertex.
  std::vector<std::pair<std::size_t, std::size_t>> Pairs() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  std::size_t size_ = 0;
};

// True when every pair of `m` is an edge of `graph` and sizes agree.
bool IsMatchingOf(const BipartiteGraph& graph, const Matching& m);

// Maximum-cardinality matching by Hopcroft-Karp, augmenting from `seed` when
// given. Deterministic for a fixed vertex and adjacency order.
Matching MaxMatching(const BipartiteGraph& graph);
Matching MaxMatching(const BipartiteGraph& graph, Matching seed);

// Per-rank edge counts of a matching; counts[r-1] is the number of matched
// edges of rank r, for r = 1..graph.max_rank(). Ordered lexicographically.
struct Signature {
  std::vector<std::int64_t> counts;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature ComputeSignature(const BipartiteGraph& graph, const Matching& m);

// Reads an allocation off a matching of an allocation graph: every real item
// goes to the owner of the slot it is matched to; dummies are dropped.
IntegralAllocation MatchingToAllocation(const AllocationGraph& graph,
                                        const Matching& m);

// A WSD-PROP1 allocation via a maximum matching in the allocation graph. For
// chores the matching saturates every chore; for goods it saturates every
// slot and is then completed through the extended graph so that every good
// is allocated. Throws InternalError if no such matching exists.
IntegralAllocation PerfectAllocation(const Instance& instance);

// Every allocation induced by a side-perfect matching of the plain allocation
// graph (item-perfect for chores; slot-perfect for goods, followed by every
// completion of the unassigned goods), deduplicated and sorted. Explores at
// most `cap` matchings before throwing InstanceTooLarge.
std::vector<IntegralAllocation> EnumerateMatchingAllocations(
    const Instance& instance, std::uint64_t cap = 10'000'000);

}  // namespace wsdprop

#endif  // WSDPROP_MATCHING_H_
