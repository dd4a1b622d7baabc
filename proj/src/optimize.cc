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

#include "wsdprop/optimize.h"

#include <string>

#include "wsdprop/allocation_graph.h"
#include "wsdprop/assignment.h"
#include "wsdprop/errors.h"
#include "wsdprop/matching.h"

namespace wsdprop {

OptimizedAllocation OptimizeAllocation(const Instance& instance,
                                       const CostSpec& cost) {
  const std::size_t n = instance.num_agents();
  const std::size_t m = instance.num_items();
  if (cost.values.size() != n) {
    throw IncompleteCostSpec("expected " + std::to_string(n) +
                             " cost rows, got " +
                             std::to_string(cost.values.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cost.values[i].size() != m) {
      throw IncompleteCostSpec("cost row " + std::to_string(i) + " has " +
                               std::to_string(cost.values[i].size()) +
                               " entries, expected " + std::to_string(m));
    }
  }

  const AllocationGraph graph =
      ExtendAllocationGraph(BuildAllocationGraph(instance), instance);
  const bool maximize = cost.direction == Direction::kMaximize;
  auto edge_cost = [&](std::size_t slot, const Edge& e, Rational& out) {
    if (graph.IsDummy(e.right)) {
      out = Rational();
      return;
    }
    const Rational& u = cost.values[graph.slots()[slot].agent][e.right];
    out = maximize ? -u : u;
  };
  Assignment<Rational> best =
      AssignmentMinCost(graph.graph(), edge_cost, Rational());
  if (!best.matching.IsPerfect()) {
    throw InternalError("extended allocation graph has no perfect matching");
  }

  OptimizedAllocation result{MatchingToAllocation(graph, best.matching),
                             Rational()};
  for (std::size_t j = 0; j < m; ++j) {
    result.objective += cost.values[result.allocation.owner(j)][j];
  }
  return result;
}

}  // namespace wsdprop
