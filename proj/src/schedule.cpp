#include "mrmd/schedule.hpp"

#include <stdexcept>

namespace mrmd {

ScheduleNet build_1r1d_network(const Instance& inst, const TypeSubproblem& sub,
                               const std::vector<i64>* reward_override) {
  ScheduleNet sn;
  sn.sub = &sub;
  const int n = static_cast<int>(sub.demands.size());
  i64 total_units = 0;
  for (const auto& s : sub.starts) total_units += s.count;

  sn.source = sn.net.add_node(total_units);
  sn.sink = sn.net.add_node(-total_units);
  for (std::size_t k = 0; k < sub.starts.size(); ++k) sn.start_node.push_back(sn.net.add_node());
  sn.demand_entry.resize(n);
  sn.demand_exit.resize(n);
  for (int i = 0; i < n; ++i) {
    sn.demand_entry[i] = sn.net.add_node();
    sn.demand_exit[i] = sn.net.add_node();
  }

  for (std::size_t k = 0; k < sub.starts.size(); ++k) {
    sn.net.add_arc(sn.source, sn.start_node[k], 0, sub.starts[k].count, 0);
    for (int i : sub.start_adj[k]) sn.net.add_arc(sn.start_node[k], sn.demand_entry[i], 0, 1, 0);
    // parking arc last so decomposition prefers serving demands
    sn.net.add_arc(sn.start_node[k], sn.sink, 0, sub.starts[k].count, 0);
  }
  for (int i = 0; i < n; ++i) {
    i64 w = reward_override ? (*reward_override)[sub.demands[i]] : inst.demands[sub.demands[i]].reward;
    sn.net.add_arc(sn.demand_entry[i], sn.demand_exit[i], 0, 1, -w);
    for (int j : sub.adj[i]) sn.net.add_arc(sn.demand_exit[i], sn.demand_entry[j], 0, 1, 0);
    sn.net.add_arc(sn.demand_exit[i], sn.sink, 0, 1, 0);
  }
  return sn;
}

ScheduleNet build_fixed_service_network(const Instance& inst, const TypeSubproblem& sub,
                                        const std::vector<char>& served, bool use_costs) {
  ScheduleNet sn;
  sn.sub = &sub;
  const int n = static_cast<int>(sub.demands.size());
  i64 total_units = 0;
  for (const auto& s : sub.starts) total_units += s.count;

  sn.source = sn.net.add_node(total_units);
  sn.sink = sn.net.add_node(-total_units);
  sn.net.add_arc(sn.source, sn.sink, 0, FlowNetwork::kUnbounded, 0);  // idle resources
  for (std::size_t k = 0; k < sub.starts.size(); ++k) sn.start_node.push_back(sn.net.add_node());
  sn.demand_entry.resize(n);
  sn.demand_exit.resize(n);
  for (int i = 0; i < n; ++i) {
    int node = sn.net.add_node();
    sn.demand_entry[i] = sn.demand_exit[i] = node;
    sn.net.set_node_capacity(node, served[sub.demands[i]] ? 1 : 0);
  }

  auto cost = [&](int from_loc, int to_loc) -> i64 {
    return use_costs ? inst.travel_cost(from_loc, to_loc) : 0;
  };
  for (std::size_t k = 0; k < sub.starts.size(); ++k) {
    sn.net.add_arc(sn.source, sn.start_node[k], 0, sub.starts[k].count, 0);
    for (int i : sub.start_adj[k])
      sn.net.add_arc(sn.start_node[k], sn.demand_entry[i], 0, 1,
                     cost(sub.starts[k].location, inst.demands[sub.demands[i]].location));
  }
  for (int i = 0; i < n; ++i) {
    for (int j : sub.adj[i])
      sn.net.add_arc(sn.demand_exit[i], sn.demand_entry[j], 0, 1,
                     cost(inst.demands[sub.demands[i]].location,
                          inst.demands[sub.demands[j]].location));
    sn.net.add_arc(sn.demand_exit[i], sn.sink, 0, 1, 0);
  }
  return sn;
}

std::vector<StartPath> decompose_flow_to_paths(const ScheduleNet& sn, const FlowSolution& flow) {
  if (!flow.feasible()) throw std::logic_error("cannot decompose an infeasible flow");
  const FlowNetwork& net = sn.net;

  std::vector<i64> remaining = flow.flow;
  std::vector<std::vector<int>> out(net.num_nodes());
  for (std::size_t a = 0; a < net.arcs.size(); ++a) out[net.arcs[a].from].push_back(static_cast<int>(a));

  // node -> local demand whose entry it is
  std::vector<int> entry_of(net.num_nodes(), -1);
  for (std::size_t i = 0; i < sn.demand_entry.size(); ++i) entry_of[sn.demand_entry[i]] = static_cast<int>(i);

  std::vector<i64> balance(net.num_nodes(), 0);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (flow.flow[a] < 0) throw std::logic_error("negative arc flow");
    balance[net.arcs[a].from] -= flow.flow[a];
    balance[net.arcs[a].to] += flow.flow[a];
  }
  for (int v = 0; v < net.num_nodes(); ++v)
    if (balance[v] + net.supply[v] != 0) throw std::logic_error("flow is not conserved");

  std::vector<StartPath> paths;
  for (std::size_t k = 0; k < sn.start_node.size(); ++k) {
    for (;;) {
      // another unit leaving this start toward a demand?
      int first = -1;
      for (int a : out[sn.start_node[k]]) {
        if (remaining[a] > 0 && entry_of[net.arcs[a].to] >= 0) {
          first = a;
          break;
        }
      }
      if (first < 0) break;
      StartPath path;
      path.start_index = static_cast<int>(k);
      --remaining[first];
      int node = net.arcs[first].to;
      while (node != sn.sink) {
        int local = entry_of[node];
        if (local >= 0) path.demands.push_back(sn.sub->demands[local]);
        int next = -1;
        for (int a : out[node])
          if (remaining[a] > 0) {
            next = a;
            break;
          }
        if (next < 0) throw std::logic_error("flow path ends before the sink");
        --remaining[next];
        node = net.arcs[next].to;
      }
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

OneTypeSolution solve_1r1d(const Instance& inst, const TypeSubproblem& sub,
                           const std::vector<i64>* reward_override) {
  ScheduleNet sn = build_1r1d_network(inst, sub, reward_override);
  FlowSolution flow = solve_min_cost_flow(sn.net);
  if (!flow.feasible()) throw std::logic_error("single-type network must always be feasible");
  OneTypeSolution out;
  out.objective = -flow.cost;
  out.paths = decompose_flow_to_paths(sn, flow);
  out.served.assign(inst.demands.size(), 0);
  for (const auto& p : out.paths)
    for (int d : p.demands) out.served[d] = 1;
  return out;
}

TypeServicePlan solve_fixed_service(const Instance& inst, const TypeSubproblem& sub,
                                    const std::vector<char>& served, bool use_costs) {
  ScheduleNet sn = build_fixed_service_network(inst, sub, served, use_costs);
  FlowSolution flow = solve_min_cost_flow(sn.net);
  TypeServicePlan plan;
  if (!flow.feasible()) return plan;
  plan.feasible = true;
  plan.travel_cost = flow.cost;
  plan.paths = decompose_flow_to_paths(sn, flow);
  return plan;
}

std::vector<ResourcePath> to_resource_paths(const TypeSubproblem& sub,
                                            const std::vector<StartPath>& paths, int type) {
  std::vector<ResourcePath> out;
  int unit = 0;
  for (const auto& p : paths) {
    if (p.demands.empty()) continue;
    out.push_back({type, unit++, sub.starts[p.start_index].location, p.demands});
  }
  return out;
}

FeasibilityWitness check_full_feasibility(const Instance& inst, const Reachability& reach) {
  std::vector<char> all(inst.demands.size(), 1);
  FeasibilityWitness out;
  std::vector<ResourcePath> paths;
  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    TypeSubproblem sub = restrict_to_type(reach, inst, static_cast<int>(r));
    TypeServicePlan plan = solve_fixed_service(inst, sub, all, false);
    if (!plan.feasible) return out;
    auto rp = to_resource_paths(sub, plan.paths, static_cast<int>(r));
    paths.insert(paths.end(), rp.begin(), rp.end());
  }
  out.feasible = true;
  out.paths = std::move(paths);
  return out;
}

}  // namespace mrmd
