#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mrmd/exact.hpp"
#include "mrmd/generate.hpp"
#include "support.hpp"

using namespace mrmd;
using namespace mrmd::testing;

TEST_CASE("empty served set is trivially feasible") {
  Instance inst = small_instance();
  Reachability r = build_reachability(inst);
  FixedYResult res = evaluate_fixed_y(inst, r, std::vector<char>(3, 0));
  CHECK(res.feasible);
  CHECK(res.paths.empty());
}

TEST_CASE("serving everything matches the full feasibility check") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Instance inst = generate_random_instance(tight_config(seed), seed);
    Reachability r = build_reachability(inst);
    std::vector<char> all(inst.demands.size(), 1);
    CHECK(evaluate_fixed_y(inst, r, all).feasible == check_full_feasibility(inst, r).feasible);
  }
}

TEST_CASE("conflicting unit-resource demands are infeasible together") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("d0", 0, 0, 10, 5, {0}));
  inst.demands.push_back(make_demand("d1", 0, 0, 10, 7, {0}));
  Reachability r = build_reachability(inst);
  CHECK(!evaluate_fixed_y(inst, r, {1, 1}).feasible);
  CHECK(evaluate_fixed_y(inst, r, {0, 1}).feasible);
}

TEST_CASE("brute force picks the heavier of two conflicting demands") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("d0", 0, 0, 10, 5, {0}));
  inst.demands.push_back(make_demand("d1", 0, 0, 10, 7, {0}));
  Reachability r = build_reachability(inst);
  Solution sol = solve_brute_force(inst, r);
  CHECK(sol.objective == 7);
  CHECK(sol.served == std::vector<int>{1});
}

TEST_CASE("brute force attains the full reward on satisfiable instances") {
  Instance inst = small_instance();
  Reachability r = build_reachability(inst);
  Solution sol = solve_brute_force(inst, r);
  CHECK(sol.objective == inst.total_reward());
  CHECK(validate_solution(inst, r, sol).empty());
}

TEST_CASE("brute force on no demands returns zero") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  Reachability r = build_reachability(inst);
  CHECK(solve_brute_force(inst, r).objective == 0);
}

TEST_CASE("brute force enforces its size cap") {
  GeneratorConfig cfg;
  cfg.num_demands = 20;
  Instance inst = generate_random_instance(cfg, 1);
  Reachability r = build_reachability(inst);
  CHECK_THROWS_AS(solve_brute_force(inst, r, 16), std::invalid_argument);
}

TEST_CASE("brute force ties break toward the lexicographically smallest set") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  // two interchangeable singletons: {0} wins over {1}
  inst.demands.push_back(make_demand("d0", 0, 0, 10, 5, {0}));
  inst.demands.push_back(make_demand("d1", 0, 0, 10, 5, {0}));
  Reachability r = build_reachability(inst);
  CHECK(solve_brute_force(inst, r).served == std::vector<int>{0});
}

TEST_CASE("branch and bound matches brute force on small instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = generate_random_instance(tight_config(seed), seed);
    Reachability r = build_reachability(inst);
    Solution brute = solve_brute_force(inst, r);
    ExactResult bb = solve_exact_bb(inst, r);
    CHECK(bb.optimal);
    CHECK(bb.sol.objective == brute.objective);
    CHECK(validate_solution(inst, r, bb.sol).empty());
  }
}

TEST_CASE("fully satisfiable instances close at the root") {
  Instance inst = small_instance();
  Reachability r = build_reachability(inst);
  ExactResult res = solve_exact_bb(inst, r);
  CHECK(res.optimal);
  CHECK(res.sol.objective == inst.total_reward());
  CHECK(res.nodes == 1);
}

TEST_CASE("zero budget returns the trivial incumbent") {
  Instance inst = small_instance();
  Reachability r = build_reachability(inst);
  ExactResult res = solve_exact_bb(inst, r, std::chrono::milliseconds(0));
  CHECK(!res.optimal);
  CHECK(res.sol.objective == 0);
  CHECK(res.sol.served.empty());
}
