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

#ifndef WSDPROP_OPTIMIZE_H_
#define WSDPROP_OPTIMIZE_H_

#include <cstddef>
#include <vector>

#include "wsdprop/instance.h"
#include "wsdprop/rational.h"

namespace wsdprop {

enum class Direction { kMinimize, kMaximize };

// values[i][j] = u_i(b_j) for every agent i and real item j.
struct CostSpec {
  std::vector<std::vector<Rational>> values;
  Direction direction = Direction::kMaximize;
};

struct OptimizedAllocation {
  IntegralAllocation allocation;
  Rational objective;
};

// Best WSD-PROP1 allocation for sum_j u_{owner(j)}(b_j), found as an exact
// min-cost perfect matching of the extended allocation graph. Every slot of
// an agent (spare ones included) prices item j at u_i(b_j); dummies cost 0.
// Throws IncompleteCostSpec when `cost` is not n x m.
OptimizedAllocation OptimizeAllocation(const Instance& instance,
                                       const CostSpec& cost);

}  // namespace wsdprop

#endif  // WSDPROP_OPTIMIZE_H_
