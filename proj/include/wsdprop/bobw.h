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

#ifndef WSDPROP_BOBW_H_
#define WSDPROP_BOBW_H_

#include <cstddef>
#include <vector>

#include "wsdprop/allocation_graph.h"
#include "wsdprop/birkhoff.h"
#include "wsdprop/instance.h"
#include "wsdprop/rational.h"

namespace wsdprop {

// Fractional perfect matching of an extended allocation graph, as a matrix
// with rows = slots and columns = item vertices. Slot l of agent i carries
// alpha_i times the overlap of each item with the l-th interval of i; for
// goods the last interval goes to the agent's first spare slot. Leftover
// slot capacity is filled with dummies, slots and dummies both in index
// order. Throws InternalError if a slot would exceed capacity one or a
// required edge is missing.
DoublyStochasticMatrix BuildFractionalMatching(const Instance& instance,
                                               const AllocationGraph& graph);

// Sums a fractional matching's real-item weights per agent.
FractionalAllocation AgentShares(const AllocationGraph& graph,
                                 const DoublyStochasticMatrix& matching);

struct LotteryPart {
  Rational probability;
  IntegralAllocation allocation;
};

struct Lottery {
  std::vector<LotteryPart> parts;
};

// Expected share matrix of a lottery.
FractionalAllocation Mixture(const Lottery& lottery, std::size_t num_agents,
                             std::size_t num_items);

struct UniformLotteryResult {
  Lottery lottery;
  // Terms produced by the decomposition, before parts that induce the same
  // allocation were merged.
  std::size_t decomposition_size = 0;
  // Side size p of the extended graph.
  std::size_t side_size = 0;
};

// Lottery over integral allocations whose mixture gives every agent exactly
// alpha_i of every item.
UniformLotteryResult UniformLottery(const Instance& instance);

}  // namespace wsdprop

#endif  // WSDPROP_BOBW_H_
