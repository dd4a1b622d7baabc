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

#ifndef WSDPROP_IO_H_
#define WSDPROP_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "wsdprop/allocation_graph.h"
#include "wsdprop/bobw.h"
#include "wsdprop/fairness.h"
#include "wsdprop/instance.h"
#include "wsdprop/optimize.h"

namespace wsdprop {

using Json = nlohmann::ordered_json;

// Structurally bad input: unparsable text, wrong field types, unknown
// fields, or names that do not resolve against the instance.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path);

// {"kind": "goods"|"chores", "items": [...], "agents": [{"name",
// "entitlement": "p/q", "ranking": [...]}]}. Unknown fields are rejected.
RawInstance ParseRawInstance(const Json& json);
// Parse plus ValidateInstance; throws InputError or InstanceError.
Instance ParseInstance(std::string_view text);
Json InstanceToJson(const Instance& instance);

// Agent name -> item names. Agents may be omitted (empty bundle). Also
// accepts an object whose "allocation" member has that shape, so the output
// of solve and optimize can be verified directly.
IntegralAllocation ParseAllocation(const Json& json, const Instance& instance);
Json AllocationToJson(const Instance& instance,
                      const IntegralAllocation& allocation);

// {"parts": [{"probability": "p/q", "allocation": {...}}, ...]}.
Lottery ParseLottery(const Json& json, const Instance& instance);
Json LotteryToJson(const Instance& instance, const Lottery& lottery,
                   bool decimal);

// One row per agent, one column per item, instance order. Entries are
// rationals "p/q" or integers separated by commas or whitespace. Blank lines
// and lines starting with '#' are skipped.
std::vector<std::vector<Rational>> ParseCostMatrix(std::string_view text);

Json GraphToJson(const AllocationGraph& graph, const Instance& instance);

// {"wsd_prop1": bool, "agents": [{"agent", "passes", "bundle",
// "violated", "rank_index", "witness": {"threshold", "valued_items"}}]}.
Json ReportToJson(const Instance& instance,
                  const IntegralAllocation& allocation,
                  const AllocationReport& report);

}  // namespace wsdprop

#endif  // WSDPROP_IO_H_
