#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "mrmd/generate.hpp"
#include "mrmd/reach.hpp"
#include "support.hpp"

using namespace mrmd;
using namespace mrmd::testing;

namespace {

bool has_arc(const Reachability& r, int i, int j) {
  return std::binary_search(r.succ[i].begin(), r.succ[i].end(), j);
}

}  // namespace

TEST_CASE("demand-after-demand arcs follow the timing rule") {
  Instance inst;
  inst.locations = {{"p", std::nullopt}, {"q", std::nullopt}};
  inst.travel.mode = TravelMode::Matrix;
  inst.travel.matrix = {{0, 3}, {3, 0}};
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.types.push_back({"r1", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("i", 0, 0, 5, 1, {0}));
  inst.demands.push_back(make_demand("j", 1, 10, 1, 1, {0}));

  Reachability r = build_reachability(inst);
  CHECK(has_arc(r, 0, 1));  // 0 + 5 + 3 <= 10
  CHECK(!has_arc(r, 1, 0));

  // same timing, disjoint requirements
  inst.demands[1].required_types = {1};
  r = build_reachability(inst);
  CHECK(!has_arc(r, 0, 1));
}

TEST_CASE("start arcs include the boundary") {
  Instance inst;
  inst.locations = {{"s", std::nullopt}, {"d", std::nullopt}};
  inst.travel.mode = TravelMode::Matrix;
  inst.travel.matrix = {{0, 7}, {7, 0}};
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("d0", 1, 7, 1, 1, {0}));  // f_sd == tau exactly
  Reachability r = build_reachability(inst);
  REQUIRE(r.start_succ[0].size() == 1);
  CHECK(r.start_succ[0][0] == std::vector<int>{0});

  inst.demands[0].start = 6;
  r = build_reachability(inst);
  CHECK(r.start_succ[0][0].empty());
}

TEST_CASE("restriction filters demands by requirement") {
  Instance inst = small_instance();  // requires {0}, {1}, {0,1}
  Reachability r = build_reachability(inst);
  TypeSubproblem s0 = restrict_to_type(r, inst, 0);
  CHECK(s0.demands == std::vector<int>{0, 2});
  TypeSubproblem s1 = restrict_to_type(r, inst, 1);
  CHECK(s1.demands == std::vector<int>{1, 2});

  std::vector<char> seen(inst.demands.size(), 0);
  for (int t = 0; t < 2; ++t)
    for (int d : restrict_to_type(r, inst, t).demands) seen[d] = 1;
  CHECK(std::count(seen.begin(), seen.end(), 1) == 3);  // union covers D

  CHECK_THROWS_AS(restrict_to_type(r, inst, 9), std::invalid_argument);
}

TEST_CASE("restriction to an unrequested type is empty") {
  Instance inst = small_instance();
  inst.types.push_back({"r2", {StartStock{0, 1}}});
  Reachability r = build_reachability(inst);
  CHECK(restrict_to_type(r, inst, 2).demands.empty());
}

TEST_CASE("cycles from zero durations are rejected") {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("a", 0, 5, 0, 1, {0}));
  inst.demands.push_back(make_demand("b", 0, 5, 0, 1, {0}));
  CHECK_THROWS_AS(build_reachability(inst), std::invalid_argument);
}

TEST_CASE("matrices match an independent re-evaluation on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Instance inst = generate_random_instance(tight_config(seed), seed);
    Reachability r = build_reachability(inst);
    const int n = static_cast<int>(inst.demands.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Demand& a = inst.demands[i];
        const Demand& b = inst.demands[j];
        bool intersect = false;
        for (int t : a.required_types)
          intersect = intersect || std::find(b.required_types.begin(), b.required_types.end(),
                                             t) != b.required_types.end();
        bool expected = raw_chain_ok(inst, a, b) && intersect;
        CHECK(has_arc(r, i, j) == expected);
      }
    for (std::size_t t = 0; t < inst.types.size(); ++t)
      for (std::size_t k = 0; k < inst.types[t].starts.size(); ++k)
        for (int d = 0; d < n; ++d) {
          const auto& row = r.start_succ[t][k];
          bool requires_t =
              std::find(inst.demands[d].required_types.begin(),
                        inst.demands[d].required_types.end(),
                        static_cast<int>(t)) != inst.demands[d].required_types.end();
          bool expected =
              requires_t && raw_start_ok(inst, inst.types[t].starts[k].location, inst.demands[d]);
          CHECK(std::binary_search(row.begin(), row.end(), d) == expected);
        }
  }
}

TEST_CASE("raising one travel time only removes arcs") {
  GeneratorConfig cfg = tight_config(4);
  Instance grid = generate_random_instance(cfg, 4);
  // rebuild as an explicit matrix so single entries can be bumped
  Instance inst = grid;
  inst.travel.mode = TravelMode::Matrix;
  inst.grid.reset();
  const int L = static_cast<int>(inst.locations.size());
  inst.travel.matrix.assign(L, std::vector<i64>(L, 0));
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b) inst.travel.matrix[a][b] = grid.travel_time(a, b);

  Reachability before = build_reachability(inst);
  Instance bumped = inst;
  bumped.travel.matrix[0][1 % L] += 5;
  Reachability after = build_reachability(bumped);
  for (std::size_t i = 0; i < before.succ.size(); ++i)
    for (int j : after.succ[i]) CHECK(has_arc(before, static_cast<int>(i), j));
  for (std::size_t t = 0; t < before.start_succ.size(); ++t)
    for (std::size_t k = 0; k < before.start_succ[t].size(); ++k)
      for (int d : after.start_succ[t][k]) {
        const auto& row = before.start_succ[t][k];
        CHECK(std::binary_search(row.begin(), row.end(), d));
      }
}

TEST_CASE("origin-destination arcs fold in the detour") {
  Instance inst;
  inst.locations = {{"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt}};
  inst.travel.mode = TravelMode::Matrix;
  inst.travel.matrix = {{0, 4, 3}, {4, 0, 3}, {3, 3, 0}};
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("i", 0, 0, 2, 1, {0}));
  inst.demands.push_back(make_demand("j", 2, 9, 1, 1, {0}));

  OdMap od(2);
  od[0][0] = {0, 1};  // serve at a, drop off at b: 0+2+4+3 <= 9
  od[1][0] = {2, 2};
  Reachability r = build_od_reachability(inst, od);
  CHECK(r.per_type_arcs);
  CHECK(r.type_succ[0][0] == std::vector<int>{1});

  inst.demands[1].start = 8;
  Reachability r2 = build_od_reachability(inst, od);
  CHECK(r2.type_succ[0][0].empty());

  // destination equal to origin reduces to the base rule
  OdMap same(2);
  same[0][0] = {0, 0};
  same[1][0] = {2, 2};
  Reachability base = build_reachability(inst);
  Reachability odr = build_od_reachability(inst, same);
  for (int i = 0; i < 2; ++i) CHECK(odr.type_succ[0][i] == base.succ[i]);

  OdMap missing(2);
  missing[0][0] = {0, 0};
  CHECK_THROWS_AS(build_od_reachability(inst, missing), std::invalid_argument);
}

TEST_CASE("reachability dump lists coordinates") {
  Instance inst = small_instance();
  Reachability r = build_reachability(inst);
  std::ostringstream os;
  dump_reachability(os, r);
  CHECK(os.str().find("A 0 1") != std::string::npos);
  CHECK(os.str().find("B 0 0 0") != std::string::npos);
}
