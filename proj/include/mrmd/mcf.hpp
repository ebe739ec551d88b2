#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "mrmd/types.hpp"

namespace mrmd {

// Integral min-cost-flow network: node supplies b(i), arcs with lower/upper
// bounds and costs, and optional exact node throughput capacities v(i)
// (flow through a capacitated node must equal v(i)).
struct FlowNetwork {
  struct Arc {
    int from = 0;
    int to = 0;
    i64 lower = 0;
    i64 upper = 0;
    i64 cost = 0;
  };

  static constexpr i64 kUnbounded = i64{1} << 50;

  std::vector<i64> supply;
  std::vector<std::optional<i64>> node_cap;
  std::vector<Arc> arcs;

  int add_node(i64 b = 0) {
    supply.push_back(b);
    node_cap.push_back(std::nullopt);
    return static_cast<int>(supply.size()) - 1;
  }
  int add_arc(int from, int to, i64 lower, i64 upper, i64 cost) {
    arcs.push_back({from, to, lower, upper, cost});
    return static_cast<int>(arcs.size()) - 1;
  }
  void set_node_capacity(int node, i64 cap) { node_cap[node] = cap; }
  bool has_node_caps() const;
  int num_nodes() const { return static_cast<int>(supply.size()); }
};

struct FlowSolution {
  enum class Status { Optimal, Infeasible };
  Status status = Status::Infeasible;
  std::vector<i64> flow;  // per arc of the input network
  i64 cost = 0;
  bool feasible() const { return status == Status::Optimal; }
};

// Successive shortest paths with node potentials after lower-bound
// elimination; returns a minimum-cost integral flow or Infeasible. Handles
// node capacities by splitting internally. Deterministic: equal-cost paths
// are broken toward lower node ids.
FlowSolution solve_min_cost_flow(const FlowNetwork& net);

// Node-splitting transformation: every capacitated node i becomes a pair
// (i', i'') joined by an arc with bounds (v(i), v(i)) and cost 0; arcs into
// i enter i', arcs out of i leave i''. Feasible flows correspond one-to-one.
struct NodeSplit {
  FlowNetwork net;
  std::vector<int> in_node;   // original node -> entry node
  std::vector<int> out_node;  // original node -> exit node (== entry if uncapped)
  std::vector<int> arc_map;   // original arc index -> transformed arc index
  std::vector<int> cap_arc;   // original node -> its (i', i'') arc, or -1
};

NodeSplit apply_node_capacities(const FlowNetwork& net);

// DIMACS-style dump ("p min", "n", "a" lines; lower bounds in a comment
// column since plain DIMACS has none).
void dump_dimacs(std::ostream& os, const FlowNetwork& net);

}  // namespace mrmd
