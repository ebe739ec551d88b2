#pragma once

#include <cstdint>
#include <vector>

#include "mrmd/types.hpp"

namespace mrmd {

// Parameters for the random instance generator: demands and resources placed
// uniformly on a grid, start times uniform on [0, horizon], service times
// triangular(tri_min, tri_mode, tri_max) rounded to the nearest minute,
// rewards = duration * |required types| (times 100 when scaled_rewards is
// set), and each type required independently with membership_prob,
// resampling empty requirement sets.
struct GeneratorConfig {
  int num_types = 2;
  int num_demands = 100;
  int total_resources = 10;  // split evenly across types
  int grid_width = 20;
  int grid_height = 20;
  i64 horizon = 1440;
  int tri_min = 15;
  int tri_mode = 30;
  int tri_max = 120;
  double membership_prob = 0.5;
  bool scaled_rewards = false;
  bool shared_start = false;  // all resources at a single location
};

// Deterministic under (config, seed); throws std::invalid_argument on a bad
// config (e.g. total_resources not divisible by num_types).
Instance generate_random_instance(const GeneratorConfig& config, std::uint64_t seed);

// Numerical 3-Dimensional Matching input: integers t, d and vectors a, b, c
// of length t with sum(a_i + b_i + c_i) = t*d and 0 < a_i, b_i, c_i < d.
struct N3dmInput {
  i64 t = 0;
  i64 d = 0;
  std::vector<i64> a, b, c;
};

// Builds the two-type instance whose optimum keeps every resource busy over
// [0, T] exactly when the matching instance is solvable. The instance has
// t^2 + t resources (t of "type1", t^2 of "type0"), zero travel times, and
// rewards equal to interval length times the number of required types.
Instance build_n3dm_instance(const N3dmInput& in);

// Objective value of a zero-idle schedule: (t^2 + t) * T. The instance
// built from `in` attains this exactly when the matching is solvable.
i64 n3dm_busy_reward(const N3dmInput& in);

}  // namespace mrmd
