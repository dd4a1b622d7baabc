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

#include "wsdprop/io.h"

#include <fstream>
#include <set>
#include <sstream>

namespace wsdprop {
namespace {

void RequireObject(const Json& json, std::string_view what,
                   std::initializer_list<std::string_view> allowed) {
  if (!json.is_object()) {
    throw InputError(std::string(what) + " must be an object");
  }
  for (const auto& [key, value] : json.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) {
      throw InputError("unknown field \"" + key + "\" in " + std::string(what));
    }
  }
}

const Json& Field(const Json& json, const char* key, std::string_view what) {
  const auto it = json.find(key);
  if (it == json.end()) {
    throw InputError(std::string(what) + " is missing \"" + key + "\"");
  }
  return *it;
}

std::string String(const Json& json, std::string_view what) {
  if (!json.is_string()) {
    throw InputError(std::string(what) + " must be a string");
  }
  return json.get<std::string>();
}

std::vector<std::string> StringArray(const Json& json, std::string_view what) {
  if (!json.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : json) out.push_back(String(e, what));
  return out;
}

Rational ParseRationalField(const Json& json, std::string_view what) {
  try {
    if (json.is_number_integer()) return Rational(json.get<std::int64_t>());
    return Rational::Parse(String(json, what));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Json Names(const Instance& instance, const std::vector<std::size_t>& items) {
  Json out = Json::array();
  for (std::size_t j : items) out.push_back(instance.items()[j]);
  return out;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RawInstance ParseRawInstance(const Json& json) {
  RequireObject(json, "instance", {"kind", "items", "agents"});
  RawInstance raw;
  try {
    raw.kind = ParseItemKind(String(Field(json, "kind", "instance"), "kind"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  raw.items = StringArray(Field(json, "items", "instance"), "items");
  const Json& agents = Field(json, "agents", "instance");
  if (!agents.is_array()) throw InputError("agents must be an array");
  for (const Json& a : agents) {
    RequireObject(a, "agent", {"name", "entitlement", "ranking"});
    RawAgent agent;
    agent.name = String(Field(a, "name", "agent"), "agent name");
    agent.entitlement = ParseRationalField(Field(a, "entitlement", "agent"),
                                           "entitlement of " + agent.name);
    agent.ranking = StringArray(Field(a, "ranking", "agent"), "ranking");
    raw.agents.push_back(std::move(agent));
  }
  return raw;
}

Instance ParseInstance(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  return ValidateInstance(ParseRawInstance(json));
}

Json InstanceToJson(const Instance& instance) {
  Json out;
  out["kind"] = std::string(ToString(instance.kind()));
  out["items"] = instance.items();
  out["agents"] = Json::array();
  for (const Agent& a : instance.agents()) {
    out["agents"].push_back({{"name", a.name},
                             {"entitlement", a.entitlement.ToString()},
                             {"ranking", Names(instance, a.ranking)}});
  }
  return out;
}

IntegralAllocation ParseAllocation(const Json& json, const Instance& instance) {
  if (!json.is_object()) throw InputError("allocation must be an object");
  if (json.contains("allocation") && !instance.FindAgent("allocation")) {
    return ParseAllocation(json["allocation"], instance);
  }
  std::vector<std::vector<std::size_t>> bundles(instance.num_agents());
  for (const auto& [name, items] : json.items()) {
    const auto agent = instance.FindAgent(name);
    if (!agent) throw InputError("unknown agent \"" + name + "\"");
    for (const std::string& item : StringArray(items, "bundle of " + name)) {
      const auto j = instance.FindItem(item);
      if (!j) throw InputError("unknown item \"" + item + "\"");
      bundles[*agent].push_back(*j);
    }
  }
  return IntegralAllocation::FromBundles(instance.num_items(), bundles);
}

Json AllocationToJson(const Instance& instance,
                      const IntegralAllocation& allocation) {
  Json out = Json::object();
  for (std::size_t i = 0; i < instance.num_agents(); ++i) {
    out[instance.agent(i).name] = Names(instance, allocation.bundle(i));
  }
  return out;
}

Lottery ParseLottery(const Json& json, const Instance& instance) {
  if (!json.is_object() || !json.contains("parts") ||
      !json["parts"].is_array()) {
    throw InputError("lottery must be an object with a \"parts\" array");
  }
  Lottery lottery;
  for (const Json& part : json["parts"]) {
    if (!part.is_object()) throw InputError("lottery part must be an object");
    lottery.parts.push_back(
        {ParseRationalField(Field(part, "probability", "lottery part"),
                            "probability"),
         ParseAllocation(Field(part, "allocation", "lottery part"), instance)});
  }
  return lottery;
}

Json LotteryToJson(const Instance& instance, const Lottery& lottery,
                   bool decimal) {
  Json parts = Json::array();
  for (const LotteryPart& p : lottery.parts) {
    Json part;
    part["probability"] = p.probability.ToString();
    if (decimal) part["probability_decimal"] = p.probability.ToDecimal();
    part["allocation"] = AllocationToJson(instance, p.allocation);
    parts.push_back(std::move(part));
  }
  Json out;
  out["parts"] = std::move(parts);
  return out;
}

std::vector<std::vector<Rational>> ParseCostMatrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    for (char& c : line) {
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    }
    std::istringstream tokens(line);
    std::string tok;
    std::vector<Rational> row;
    while (tokens >> tok) {
      if (row.empty() && tok[0] == '#') break;
      try {
        row.push_back(Rational::Parse(tok));
      } catch (const std::exception& e) {
        throw InputError("cost entry \"" + tok + "\": " + e.what());
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

Json GraphToJson(const AllocationGraph& graph, const Instance& instance) {
  Json out;
  out["kind"] = std::string(ToString(graph.kind()));
  out["extended"] = graph.extended();
  out["dummy_count"] = graph.dummy_count();
  out["spare_per_agent"] = graph.spare_per_agent();
  Json slots = Json::array();
  for (std::size_t s = 0; s < graph.slots().size(); ++s) {
    const Slot& slot = graph.slots()[s];
    slots.push_back({{"name", SlotName(graph, instance, s)},
                     {"agent", instance.agent(slot.agent).name},
                     {"position", slot.position},
                     {"spare", slot.spare}});
  }
  out["slots"] = std::move(slots);
  Json items = Json::array();
  for (std::size_t j = 0; j < graph.item_vertices().size(); ++j) {
    items.push_back({{"name", ItemVertexName(graph, instance, j)},
                     {"dummy", graph.IsDummy(j)}});
  }
  out["items"] = std::move(items);
  Json edges = Json::array();
  for (std::size_t s = 0; s < graph.slots().size(); ++s) {
    for (const Edge& e : graph.graph().Neighbors(s)) {
      edges.push_back({{"slot", SlotName(graph, instance, s)},
                       {"item", ItemVertexName(graph, instance, e.right)},
                       {"rank", e.rank}});
    }
  }
  out["edges"] = std::move(edges);
  return out;
}

Json ReportToJson(const Instance& instance,
                  const IntegralAllocation& allocation,
                  const AllocationReport& report) {
  Json agents = Json::array();
  for (const BundleReport& r : report.agents) {
    Json a;
    a["agent"] = instance.agent(r.agent).name;
    a["passes"] = r.passes;
    a["bundle"] = Names(instance, allocation.bundle(r.agent));
    if (!r.passes) {
      a["violated"] = std::string(ToString(*r.violated));
      if (*r.violated == Condition::kRankBound) a["rank_index"] = r.rank_index;
      // The witness values exactly the items at positions 1..threshold.
      std::vector<std::size_t> valued;
      for (std::size_t pos = 1; pos <= r.witness->threshold; ++pos) {
        valued.push_back(instance.ItemAt(r.agent, pos));
      }
      a["witness"] = {{"threshold", r.witness->threshold},
                      {"valued_items", Names(instance, valued)}};
    }
    agents.push_back(std::move(a));
  }
  Json out;
  out["wsd_prop1"] = report.passes;
  out["agents"] = std::move(agents);
  return out;
}

}  // namespace wsdprop
