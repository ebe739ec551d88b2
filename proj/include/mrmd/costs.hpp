#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "mrmd/reach.hpp"
#include "mrmd/types.hpp"

namespace mrmd {

struct CostedObjective {
  i64 gross = 0;
  i64 travel_cost = 0;
  i64 net = 0;
};

struct CostedFixedY {
  bool feasible = false;
  i64 travel_cost = 0;  // minimum over all ways to serve the set
  std::vector<ResourcePath> paths;
};

// Serves exactly the given set at minimum total travel cost (one
// minimum-cost flow per type), or reports infeasibility.
CostedFixedY evaluate_fixed_y_costs(const Instance& inst, const Reachability& reach,
                                    const std::vector<char>& served);

struct ExactCostsResult {
  Solution sol;
  CostedObjective objective;
  bool optimal = false;
  i64 nodes = 0;
};

// Branch-and-bound maximizing reward minus travel cost; node bounds ignore
// costs (they only lower the objective), leaves price the served set with
// cost-carrying flows.
ExactCostsResult solve_exact_costs(const Instance& inst, const Reachability& reach,
                                   std::optional<std::chrono::milliseconds> budget = std::nullopt);

struct AlgorithmACostsResult {
  Solution sol;  // objective holds the net value
  CostedObjective objective;
};

// Runs the stock-ordered single-type algorithm ignoring costs, then charges
// the actual path travel costs. Certified within 2|R| when every pairwise
// travel cost is at most w_min / (2|R|); `force` runs without the
// certificate when the bound fails.
AlgorithmACostsResult run_algorithm_a_costs(const Instance& inst, const Reachability& reach,
                                            bool force = false);

}  // namespace mrmd
