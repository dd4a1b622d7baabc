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

#include "wsdprop/cli.h"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "CLI11.hpp"
#include "wsdprop/allocation_graph.h"
#include "wsdprop/bobw.h"
#include "wsdprop/errors.h"
#include "wsdprop/fairness.h"
#include "wsdprop/instance.h"
#include "wsdprop/io.h"
#include "wsdprop/matching.h"
#include "wsdprop/optimize.h"
#include "wsdprop/rank_maximal.h"

namespace wsdprop::cli {
namespace {

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

Json LoadJson(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + " is not valid JSON: " + e.what());
  }
}

void Emit(std::ostream& out, const Json& json) { out << json.dump(2) << "\n"; }

Json SequenceNames(const Instance& instance, const PickingSequence& seq) {
  Json names = Json::array();
  for (std::size_t a : seq.agents) names.push_back(instance.agent(a).name);
  return names;
}

struct Options {
  std::string instance;
  std::string second;  // allocation file for verify, cost file for optimize
  bool extended = false;
  bool dot = false;
  bool seq = false;
  bool minimize = false;
  bool maximize = false;
  bool decimal = false;
  std::uint64_t cap = 1'000'000;
  std::size_t agents = 0;
  std::size_t items = 0;
  std::string kind;
  std::uint64_t seed = 0;
};

int Graph(const Options& o, std::ostream& out) {
  const Instance inst = LoadInstance(o.instance);
  AllocationGraph g = BuildAllocationGraph(inst);
  if (o.extended) g = ExtendAllocationGraph(g, inst);
  if (o.dot) {
    out << ToDot(g, inst);
  } else {
    Emit(out, GraphToJson(g, inst));
  }
  return kExitOk;
}

int Solve(const Options& o, std::ostream& out) {
  const Instance inst = LoadInstance(o.instance);
  Json result;
  result["kind"] = std::string(ToString(inst.kind()));
  if (o.seq) {
    const SequencedAllocation s = SolveSequencible(inst);
    result["allocation"] = AllocationToJson(inst, s.allocation);
    result["sequence"] = SequenceNames(inst, s.sequence);
  } else {
    result["allocation"] = AllocationToJson(inst, PerfectAllocation(inst));
  }
  Emit(out, result);
  return kExitOk;
}

int Optimize(const Options& o, std::ostream& out) {
  const Instance inst = LoadInstance(o.instance);
  CostSpec spec;
  spec.values = ParseCostMatrix(ReadFile(o.second));
  spec.direction = o.minimize ? Direction::kMinimize : Direction::kMaximize;
  const OptimizedAllocation best = OptimizeAllocation(inst, spec);
  Json result;
  result["direction"] = o.minimize ? "minimize" : "maximize";
  result["allocation"] = AllocationToJson(inst, best.allocation);
  result["objective"] = best.objective.ToString();
  if (o.decimal) result["objective_decimal"] = best.objective.ToDecimal();
  Emit(out, result);
  return kExitOk;
}

int LotteryCommand(const Options& o, std::ostream& out) {
  const Instance inst = LoadInstance(o.instance);
  const UniformLotteryResult r = UniformLottery(inst);
  Json result = LotteryToJson(inst, r.lottery, o.decimal);
  const std::size_t p = r.side_size;
  result["decomposition_size"] = r.decomposition_size;
  result["side_size"] = p;
  result["part_bound"] = p * p - p + 2;
  Emit(out, result);
  return kExitOk;
}

int Verify(const Options& o, std::ostream& out) {
  const Instance inst = LoadInstance(o.instance);
  const IntegralAllocation alloc = ParseAllocation(LoadJson(o.second), inst);
  const AllocationReport report = CheckAllocation(inst, alloc);
  Emit(out, ReportToJson(inst, alloc, report));
  return report.passes ? kExitOk : kExitVerificationFailed;
}

int Oracle(const Options& o, std::ostream& out) {
  const Instance inst = LoadInstance(o.instance);
  const std::vector<IntegralAllocation> fair = EnumerateWsdprop1(inst, o.cap);
  const std::vector<IntegralAllocation> matched =
      EnumerateMatchingAllocations(inst);
  const bool agrees = fair == matched;
  Json list = Json::array();
  for (const IntegralAllocation& a : fair) list.push_back(AllocationToJson(inst, a));
  Json result;
  result["count"] = fair.size();
  result["matching_count"] = matched.size();
  result["agrees"] = agrees;
  result["allocations"] = std::move(list);
  Emit(out, result);
  return agrees ? kExitOk : kExitVerificationFailed;
}

int Gen(const Options& o, std::ostream& out) {
  ItemKind kind;
  try {
    kind = ParseItemKind(o.kind);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.agents == 0) throw InputError("--agents must be at least 1");
  Emit(out, InstanceToJson(GenerateInstance(o.agents, o.items, kind, o.seed)));
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Weighted SD-proportional allocations of goods and chores"};
  app.name("wsdprop");
  app.require_subcommand(1);
  app.fallthrough();  // --decimal may follow the subcommand
  Options o;
  app.add_flag("--decimal", o.decimal,
               "Add approximate decimal renderings next to exact values");

  std::function<int(const Options&, std::ostream&)> action;
  auto bind = [&action](CLI::App* sub, auto fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* graph = app.add_subcommand("graph", "Print the allocation graph");
  graph->add_option("instance", o.instance)->required();
  graph->add_flag("--extended", o.extended, "Balance with dummies/spare slots");
  graph->add_flag("--dot", o.dot, "Graphviz output instead of JSON");
  bind(graph, Graph);

  auto* solve = app.add_subcommand("solve", "Compute a WSD-PROP1 allocation");
  solve->add_option("instance", o.instance)->required();
  solve->add_flag("--seq", o.seq,
                  "Rank-maximal allocation together with a picking sequence");
  bind(solve, Solve);

  auto* optimize = app.add_subcommand(
      "optimize", "Best WSD-PROP1 allocation for a linear objective");
  optimize->add_option("instance", o.instance)->required();
  optimize->add_option("--costs", o.second, "Cost matrix file")->required();
  auto* min = optimize->add_flag("--minimize", o.minimize);
  auto* max = optimize->add_flag("--maximize", o.maximize);
  min->excludes(max);
  auto* direction = optimize->add_option_group("direction");
  direction->add_option(min);
  direction->add_option(max);
  direction->require_option(1);
  bind(optimize, Optimize);

  auto* lottery =
      app.add_subcommand("lottery", "Uniform lottery over WSD-PROP1 allocations");
  lottery->add_option("instance", o.instance)->required();
  bind(lottery, LotteryCommand);

  auto* verify = app.add_subcommand(
      "verify", "Check an allocation; exit 1 if it is not WSD-PROP1");
  verify->add_option("instance", o.instance)->required();
  verify->add_option("allocation", o.second)->required();
  bind(verify, Verify);

  auto* oracle = app.add_subcommand(
      "oracle", "Enumerate all WSD-PROP1 allocations by brute force");
  oracle->add_option("instance", o.instance)->required();
  oracle->add_option("--cap", o.cap, "Largest n^m to enumerate");
  bind(oracle, Oracle);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--agents", o.agents)->required();
  gen->add_option("--items", o.items)->required();
  gen->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"goods", "chores"}));
  gen->add_option("--seed", o.seed);
  bind(gen, Gen);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action(o, out);
  } catch (const InstanceError& e) {
    for (const ValidationIssue& issue : e.issues()) {
      err << "error: " << ToString(issue.code) << ": " << issue.message << "\n";
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const MalformedAllocation& e) {
    err << "error: malformed allocation: " << e.what() << "\n";
  } catch (const IncompleteCostSpec& e) {
    err << "error: incomplete cost matrix: " << e.what() << "\n";
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace wsdprop::cli
