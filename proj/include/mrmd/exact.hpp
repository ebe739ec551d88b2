#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "mrmd/reach.hpp"
#include "mrmd/schedule.hpp"
#include "mrmd/types.hpp"

namespace mrmd {

struct FixedYResult {
  bool feasible = false;
  std::vector<ResourcePath> paths;
};

// Decomposed feasibility for a fixed served set: one flow problem per
// resource type; feasible iff all of them are.
FixedYResult evaluate_fixed_y(const Instance& inst, const Reachability& reach,
                              const std::vector<char>& served);

// Exhaustive maximizer over served subsets; ties broken by the
// lexicographically smallest served set. Throws if |D| exceeds `cap`.
Solution solve_brute_force(const Instance& inst, const Reachability& reach, int cap = 16);

struct ExactResult {
  Solution sol;
  bool optimal = false;
  i64 nodes = 0;
};

// Best-first branch-and-bound on the served set. Node bounds combine the
// candidate reward sum with per-type single-type relaxations (rewards split
// evenly across a demand's required types). Returns the best incumbent and
// whether the search completed.
ExactResult solve_exact_bb(const Instance& inst, const Reachability& reach,
                           std::optional<std::chrono::milliseconds> budget = std::nullopt);

}  // namespace mrmd
