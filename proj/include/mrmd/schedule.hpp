#pragma once

#include <optional>
#include <vector>

#include "mrmd/mcf.hpp"
#include "mrmd/reach.hpp"
#include "mrmd/types.hpp"

namespace mrmd {

// A scheduling flow network together with the node roles needed to read
// schedules back out of a flow.
struct ScheduleNet {
  FlowNetwork net;
  int source = 0;
  int sink = 0;
  std::vector<int> start_node;              // per start index of the subproblem
  std::vector<int> demand_entry;            // per local demand
  std::vector<int> demand_exit;             // per local demand
  const TypeSubproblem* sub = nullptr;
};

// Single-type scheduling network: start nodes fan out of a source, each
// demand is an entry/exit pair joined by a reward arc of cost -w, and
// chaining arcs follow the adjacency. All capacities are 1.
ScheduleNet build_1r1d_network(const Instance& inst, const TypeSubproblem& sub,
                               const std::vector<i64>* reward_override = nullptr);

// Per-type feasibility network for a fixed served set: each demand node
// carries an exact throughput capacity of 1 (served) or 0 (not served).
// With `use_costs` the start and chaining arcs carry travel costs, turning
// the feasibility check into a minimum-travel-cost service plan.
ScheduleNet build_fixed_service_network(const Instance& inst, const TypeSubproblem& sub,
                                        const std::vector<char>& served, bool use_costs);

// Peels an integral flow into start-anchored demand paths (global demand
// ids), greedily following the lowest-numbered successor. Paths that serve
// no demand are dropped.
struct StartPath {
  int start_index = 0;  // index into the subproblem's starts
  std::vector<int> demands;
};
std::vector<StartPath> decompose_flow_to_paths(const ScheduleNet& net, const FlowSolution& flow);

struct OneTypeSolution {
  i64 objective = 0;
  std::vector<StartPath> paths;
  std::vector<char> served;  // global mask
};

// Optimal single-type schedule (polynomial special case): maximizes served
// reward over the subproblem's demands.
OneTypeSolution solve_1r1d(const Instance& inst, const TypeSubproblem& sub,
                           const std::vector<i64>* reward_override = nullptr);

struct TypeServicePlan {
  bool feasible = false;
  i64 travel_cost = 0;
  std::vector<StartPath> paths;
};

// Serves exactly the demands of `served` that require the subproblem's
// type, or reports infeasibility; minimizes travel cost when requested.
TypeServicePlan solve_fixed_service(const Instance& inst, const TypeSubproblem& sub,
                                    const std::vector<char>& served, bool use_costs = false);

struct FeasibilityWitness {
  bool feasible = false;
  std::vector<ResourcePath> paths;
};

// Corollary-style full check: can every demand be served simultaneously?
FeasibilityWitness check_full_feasibility(const Instance& inst, const Reachability& reach);

// Converts per-type start paths into Solution resource paths.
std::vector<ResourcePath> to_resource_paths(const TypeSubproblem& sub,
                                            const std::vector<StartPath>& paths, int type);

}  // namespace mrmd
