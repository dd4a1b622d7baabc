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

#ifndef WSDPROP_RANK_MAXIMAL_H_
#define WSDPROP_RANK_MAXIMAL_H_

#include <cstddef>
#include <vector>

#include "wsdprop/allocation_graph.h"
#include "wsdprop/bipartite_graph.h"
#include "wsdprop/instance.h"
#include "wsdprop/matching.h"

namespace wsdprop {

// Matching saturating the left side (perfect when the sides are equal) whose
// signature is lexicographically largest among all such matchings. Throws
// NoPerfectMatching when none exists.
Matching RankMaximalPerfectMatching(const BipartiteGraph& graph);

// Permutes each agent's real items among the slots holding them so that, for
// chores, a higher slot position holds a lower matching-rank and, for goods,
// a higher position holds a higher rank. Slots matched to dummies keep their
// dummy. The signature is unchanged. Throws InternalError if a required edge
// is missing.
Matching NormalizeSlotOrder(const Matching& m, const AllocationGraph& graph);

// Orders the matched left vertices of a rank-maximal left-perfect matching so
// that each vertex, when its turn comes, has no edge of strictly better rank
// to a right vertex that is still available. Among eligible vertices the
// lowest index goes first. Throws NotRankMaximal when no vertex is eligible.
std::vector<std::size_t> ExtractSlotOrder(const BipartiteGraph& graph,
                                          const Matching& m);

// Slot order mapped to owning agents; slots matched to dummy items are
// skipped.
PickingSequence ExtractPickingSequence(const Matching& m,
                                       const AllocationGraph& graph);

struct SequencedAllocation {
  IntegralAllocation allocation;
  PickingSequence sequence;
  Matching matching;
};

// Rank-maximal matching of `graph`, normalized and read off as a picking
// sequence. For goods, goods the matching leaves unassigned are handed out
// by appending round-robin turns (a1, a2, ..., an, a1, ...) to the sequence;
// the returned allocation is the simulation of the full sequence.
SequencedAllocation SequenceFromGraph(const Instance& instance,
                                      const AllocationGraph& graph);

// Chores use the extended graph. Goods use the plain graph, which is much
// smaller than the extended one and leads to the same guarantee once the
// leftover goods are picked round-robin.
SequencedAllocation SolveSequencible(const Instance& instance);

}  // namespace wsdprop

#endif  // WSDPROP_RANK_MAXIMAL_H_
