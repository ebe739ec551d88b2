#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mrmd/generate.hpp"
#include "mrmd/schedule.hpp"
#include "support.hpp"

using namespace mrmd;
using namespace mrmd::testing;

namespace {

// One type, two overlapping demands with rewards 5 and 7.
Instance overlap_instance(i64 units) {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, units}}});
  inst.demands.push_back(make_demand("d0", 0, 0, 10, 5, {0}));
  inst.demands.push_back(make_demand("d1", 0, 5, 10, 7, {0}));
  return inst;
}

}  // namespace

TEST_CASE("single unit picks the better of two overlapping demands") {
  Instance inst = overlap_instance(1);
  Reachability r = build_reachability(inst);
  OneTypeSolution sol = solve_1r1d(inst, restrict_to_type(r, inst, 0));
  CHECK(sol.objective == 7);
  REQUIRE(sol.paths.size() == 1);
  CHECK(sol.paths[0].demands == std::vector<int>{1});
}

TEST_CASE("two units serve both overlapping demands") {
  Instance inst = overlap_instance(2);
  Reachability r = build_reachability(inst);
  OneTypeSolution sol = solve_1r1d(inst, restrict_to_type(r, inst, 0));
  CHECK(sol.objective == 12);
}

TEST_CASE("no demands means objective zero and no paths") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 2}}});
  Reachability r = build_reachability(inst);
  OneTypeSolution sol = solve_1r1d(inst, restrict_to_type(r, inst, 0));
  CHECK(sol.objective == 0);
  CHECK(sol.paths.empty());
}

TEST_CASE("reward overrides replace the objective coefficients") {
  Instance inst = overlap_instance(1);
  Reachability r = build_reachability(inst);
  std::vector<i64> rewards = {100, 1};
  OneTypeSolution sol = solve_1r1d(inst, restrict_to_type(r, inst, 0), &rewards);
  CHECK(sol.objective == 100);
  CHECK(sol.served[0] == 1);
}

TEST_CASE("path decomposition peels chains and disjoint units") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 2}}});
  inst.demands.push_back(make_demand("d0", 0, 0, 5, 3, {0}));
  inst.demands.push_back(make_demand("d1", 0, 5, 5, 3, {0}));   // chains after d0
  inst.demands.push_back(make_demand("d2", 0, 2, 10, 9, {0}));  // overlaps both
  Reachability r = build_reachability(inst);
  TypeSubproblem sub = restrict_to_type(r, inst, 0);
  OneTypeSolution sol = solve_1r1d(inst, sub);
  CHECK(sol.objective == 15);
  REQUIRE(sol.paths.size() == 2);
  CHECK(sol.paths[0].demands == std::vector<int>{0, 1});
  CHECK(sol.paths[1].demands == std::vector<int>{2});
}

TEST_CASE("zero flow decomposes to no paths") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("d0", 0, 0, 5, 3, {0}));
  Reachability r = build_reachability(inst);
  TypeSubproblem sub = restrict_to_type(r, inst, 0);
  ScheduleNet net = build_1r1d_network(inst, sub);
  FlowSolution flow;
  flow.status = FlowSolution::Status::Optimal;
  flow.flow.assign(net.net.arcs.size(), 0);
  // park the unit so the flow conserves
  for (std::size_t a = 0; a < net.net.arcs.size(); ++a) {
    const auto& arc = net.net.arcs[a];
    if (arc.from == net.source || arc.to == net.sink) flow.flow[a] = 1;
    if (arc.to == net.sink && arc.from != net.start_node[0]) flow.flow[a] = 0;
  }
  CHECK(decompose_flow_to_paths(net, flow).empty());
}

TEST_CASE("single-type optima match exhaustive schedules on random instances") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GeneratorConfig cfg = tight_config(seed);
    cfg.num_types = 1;
    cfg.num_demands = 4 + static_cast<int>(seed % 5);
    cfg.total_resources = 1 + static_cast<int>(seed % 3);
    Instance inst = generate_random_instance(cfg, seed);
    Reachability r = build_reachability(inst);
    OneTypeSolution sol = solve_1r1d(inst, restrict_to_type(r, inst, 0));
    CHECK(sol.objective == oracle_opt(inst));
  }
}

TEST_CASE("full feasibility holds when stocks dominate") {
  Instance inst = small_instance();  // disjoint in time, one unit each
  Reachability r = build_reachability(inst);
  FeasibilityWitness w = check_full_feasibility(inst, r);
  CHECK(w.feasible);
  Solution sol;
  sol.served = {0, 1, 2};
  sol.paths = w.paths;
  sol.objective = 18;
  CHECK(validate_solution(inst, r, sol).empty());
}

TEST_CASE("two simultaneous demands on one unit are infeasible") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("d0", 0, 0, 10, 5, {0}));
  inst.demands.push_back(make_demand("d1", 0, 0, 10, 5, {0}));
  Reachability r = build_reachability(inst);
  CHECK(!check_full_feasibility(inst, r).feasible);
}

TEST_CASE("fixed service plans serve exactly the requested set") {
  Instance inst = overlap_instance(1);
  Reachability r = build_reachability(inst);
  TypeSubproblem sub = restrict_to_type(r, inst, 0);
  std::vector<char> served = {1, 0};
  TypeServicePlan plan = solve_fixed_service(inst, sub, served);
  REQUIRE(plan.feasible);
  REQUIRE(plan.paths.size() == 1);
  CHECK(plan.paths[0].demands == std::vector<int>{0});

  served = {1, 1};  // both need the single unit simultaneously
  CHECK(!solve_fixed_service(inst, sub, served).feasible);
}
