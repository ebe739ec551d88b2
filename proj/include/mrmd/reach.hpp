#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "mrmd/types.hpp"

namespace mrmd {

// Sparse reachability data. `succ` encodes the demand-after-demand matrix A
// (A_ij = 1 iff tau_i + delta_i + f_ij <= tau_j and the requirement sets
// intersect) and `start_succ[r][k]` the start-to-demand matrix B restricted
// to type r's k-th starting location (B_sd = 1 iff f_sd <= tau_d and d
// requires r). When built from origin-destination data the arcs are
// per-type and live in `type_succ` instead.
struct Reachability {
  std::vector<std::vector<int>> succ;                      // A, shared
  std::vector<std::vector<std::vector<int>>> start_succ;   // [type][start] -> demands
  bool per_type_arcs = false;
  std::vector<std::vector<std::vector<int>>> type_succ;    // [type][demand] -> demands

  const std::vector<int>& successors(int type, int demand) const {
    return per_type_arcs ? type_succ[type][demand] : succ[demand];
  }
};

Reachability build_reachability(const Instance& inst);

// Origin-destination pairs for the extension where a resource must visit a
// drop-off location between demands: od[d] maps each required type of
// demand d to its (origin, destination) location indices.
struct OdPair {
  int origin = 0;
  int destination = 0;
};
using OdMap = std::vector<std::map<int, OdPair>>;

Reachability build_od_reachability(const Instance& inst, const OdMap& od);

// Single-type view: the demands requiring `type`, induced adjacency (local
// indices), per-start first-demand arcs, and the type's stocks.
struct TypeSubproblem {
  int type = 0;
  std::vector<int> demands;                  // global indices, ascending
  std::vector<StartStock> starts;
  std::vector<std::vector<int>> adj;         // local
  std::vector<std::vector<int>> start_adj;   // per start -> local demands
};

TypeSubproblem restrict_to_type(const Reachability& reach, const Instance& inst, int type);
// Same, over a subset of demands (mask indexed by global demand id).
TypeSubproblem restrict_to_type(const Reachability& reach, const Instance& inst, int type,
                                const std::vector<char>& mask);
// Subproblem over an explicit demand list, optionally overriding the unit
// count (all units pooled at the type's starts).
TypeSubproblem make_subproblem(const Reachability& reach, const Instance& inst, int type,
                               const std::vector<int>& demand_ids);

// Coordinate-list dump of A and B ("A i j" / "B r k d" lines).
void dump_reachability(std::ostream& os, const Reachability& reach);

// Checks every Solution invariant: path arcs exist in the reachability
// data, served demands appear exactly once on a path of each required
// type, per-start path counts respect stocks, and the objective matches
// the served rewards (net of path travel costs when `costed`).
std::vector<Violation> validate_solution(const Instance& inst, const Reachability& reach,
                                         const Solution& sol, bool costed = false);

}  // namespace mrmd
