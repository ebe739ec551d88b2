#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "mrmd/lp.hpp"
#include "mrmd/reach.hpp"
#include "mrmd/types.hpp"

namespace mrmd {

// One resource type's flow over the scheduling graph: nodes 0..num_starts-1
// are the type's starting locations, then one node per demand of the
// subproblem (local order), then the sink. Arc values may exceed 1.
struct TypeFlow {
  int num_starts = 0;
  int num_demands = 0;
  std::map<std::pair<int, int>, double> flow;

  int sink() const { return num_starts + num_demands; }
  bool is_start(int node) const { return node < num_starts; }
  bool is_sink(int node) const { return node == sink(); }
};

struct TriangleViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caps every arc at 1 while preserving conservation at demand nodes and
// keeping inflow at least 1 wherever `keep_inflow` is set, by repeatedly
// rerouting excess onto shortcut arcs. `arc_allowed` must admit a shortcut
// whenever the metrics satisfy the triangle inequality; a disallowed
// shortcut therefore signals an invalid metric (TriangleViolation). The
// total flow strictly decreases every step, which bounds the loop.
TypeFlow rebound_flows(const TypeFlow& in, const std::vector<char>& keep_inflow,
                       const std::function<bool(int, int)>& arc_allowed);

// Convenience: extracts the type's scaled LP flows and the admissibility
// oracle from the subproblem.
TypeFlow extract_type_flow(const LpRelaxation& lp, const FractionalSolution& frac,
                           const TypeSubproblem& sub, double scale);
std::function<bool(int, int)> reachability_oracle(const Instance& inst, const TypeSubproblem& sub);

struct NotSatisfiableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BicriteriaResult {
  Solution sol;
  double lp_objective = 0.0;
  std::vector<double> y_lp;                       // per demand
  std::vector<std::vector<i64>> inflated_stocks;  // per type, per start
  std::vector<std::vector<i64>> used_units;       // per type, per start
};

// LP-rounding bicriteria scheme: solves the relaxation, keeps the demands
// with y above 1 - k*eps, inflates every stock by 1/(1 - k*eps) rounded up,
// reruns the flow rebounding, and re-solves the per-type flows integrally
// for the kept demands. Throws NotSatisfiableError if the kept set cannot
// be served even with the inflated stocks.
BicriteriaResult run_bicriteria(const Instance& inst, const Reachability& reach, int k, double eps);

}  // namespace mrmd
