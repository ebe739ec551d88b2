#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "mrmd/mcf.hpp"

using namespace mrmd;

namespace {

// Exhaustive minimum over integral flows; small networks only.
std::optional<i64> oracle_min_cost(const FlowNetwork& net) {
  std::vector<i64> flow(net.arcs.size(), 0);
  std::optional<i64> best;
  auto dfs = [&](auto&& self, std::size_t a) -> void {
    if (a == net.arcs.size()) {
      std::vector<i64> balance(net.supply);
      i64 cost = 0;
      for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        balance[net.arcs[i].from] -= flow[i];
        balance[net.arcs[i].to] += flow[i];
        cost += flow[i] * net.arcs[i].cost;
      }
      for (i64 b : balance)
        if (b != 0) return;
      if (!best || cost < *best) best = cost;
      return;
    }
    for (i64 f = net.arcs[a].lower; f <= net.arcs[a].upper; ++f) {
      flow[a] = f;
      self(self, a + 1);
    }
    flow[a] = 0;
  };
  dfs(dfs, 0);
  return best;
}

}  // namespace

TEST_CASE("zero supplies and zero lower bounds give the zero flow") {
  FlowNetwork net;
  int a = net.add_node(0), b = net.add_node(0);
  net.add_arc(a, b, 0, 5, 3);
  FlowSolution sol = solve_min_cost_flow(net);
  REQUIRE(sol.feasible());
  CHECK(sol.flow == std::vector<i64>{0});
  CHECK(sol.cost == 0);
}

TEST_CASE("two parallel unit paths of costs 1 and 3 route supply 2 at cost 4") {
  FlowNetwork net;
  int s = net.add_node(2), t = net.add_node(-2);
  int m1 = net.add_node(0), m2 = net.add_node(0);
  net.add_arc(s, m1, 0, 1, 1);
  net.add_arc(m1, t, 0, 1, 0);
  net.add_arc(s, m2, 0, 1, 3);
  net.add_arc(m2, t, 0, 1, 0);
  FlowSolution sol = solve_min_cost_flow(net);
  REQUIRE(sol.feasible());
  CHECK(sol.cost == 4);
  CHECK(sol.cost == oracle_min_cost(net).value());
}

TEST_CASE("unroutable lower bound is infeasible") {
  FlowNetwork net;
  int a = net.add_node(0), b = net.add_node(0);
  net.add_arc(a, b, 1, 1, 0);  // nothing can return the unit
  FlowSolution sol = solve_min_cost_flow(net);
  CHECK(!sol.feasible());
}

TEST_CASE("node splitting is the identity without capacities") {
  FlowNetwork net;
  int s = net.add_node(1), t = net.add_node(-1);
  net.add_arc(s, t, 0, 1, 2);
  NodeSplit split = apply_node_capacities(net);
  CHECK(split.net.num_nodes() == 2);
  CHECK(split.net.arcs.size() == 1);
  CHECK(split.cap_arc == std::vector<int>{-1, -1});
}

TEST_CASE("a unit node capacity blocks a two-unit through-path") {
  FlowNetwork net;
  int s = net.add_node(2), t = net.add_node(-2);
  int mid = net.add_node(0);
  net.add_arc(s, mid, 0, 2, 0);
  net.add_arc(mid, t, 0, 2, 0);
  net.set_node_capacity(mid, 1);
  CHECK(!solve_min_cost_flow(net).feasible());

  // relieve the supply and the exact throughput pins one unit through mid
  FlowNetwork relieved = net;
  relieved.supply[0] = 1;
  relieved.supply[1] = -1;
  FlowSolution sol = solve_min_cost_flow(relieved);
  REQUIRE(sol.feasible());
  CHECK(sol.flow == std::vector<i64>{1, 1});
}

TEST_CASE("capacity zero removes the node from the flow") {
  FlowNetwork net;
  int s = net.add_node(1), t = net.add_node(-1);
  int mid = net.add_node(0);
  net.add_arc(s, mid, 0, 1, 0);
  net.add_arc(mid, t, 0, 1, 0);
  net.add_arc(s, t, 0, 1, 5);
  net.set_node_capacity(mid, 0);
  FlowSolution sol = solve_min_cost_flow(net);
  REQUIRE(sol.feasible());
  CHECK(sol.flow == std::vector<i64>{0, 0, 1});
  CHECK(sol.cost == 5);
}

TEST_CASE("negative costs on a dag are handled exactly") {
  FlowNetwork net;
  int s = net.add_node(1), t = net.add_node(-1);
  int u = net.add_node(0), v = net.add_node(0);
  net.add_arc(s, u, 0, 1, 2);
  net.add_arc(u, v, 0, 1, -7);
  net.add_arc(v, t, 0, 1, 0);
  net.add_arc(s, t, 0, 1, 0);
  FlowSolution sol = solve_min_cost_flow(net);
  REQUIRE(sol.feasible());
  CHECK(sol.cost == -5);
  CHECK(sol.cost == oracle_min_cost(net).value());
}

TEST_CASE("random small networks match exhaustive enumeration") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    FlowNetwork net;
    for (int i = 0; i < n; ++i) net.add_node(0);
    int total = 1 + static_cast<int>(rng() % 2);
    net.supply[0] = total;
    net.supply[n - 1] = -total;
    const int arcs = 4 + static_cast<int>(rng() % 5);
    for (int a = 0; a < arcs; ++a) {
      int from = static_cast<int>(rng() % n);
      int to = static_cast<int>(rng() % n);
      if (from == to) continue;
      if (from > to) std::swap(from, to);  // acyclic
      i64 upper = static_cast<i64>(rng() % 3);
      i64 lower = rng() % 4 == 0 ? std::min<i64>(1, upper) : 0;
      i64 cost = static_cast<i64>(rng() % 9) - 3;
      net.add_arc(from, to, lower, upper, cost);
    }
    auto expected = oracle_min_cost(net);
    FlowSolution sol = solve_min_cost_flow(net);
    if (expected) {
      REQUIRE(sol.feasible());
      CHECK(sol.cost == *expected);
      // integrality and bounds
      std::vector<i64> balance(net.supply);
      for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        CHECK(sol.flow[i] >= net.arcs[i].lower);
        CHECK(sol.flow[i] <= net.arcs[i].upper);
        balance[net.arcs[i].from] -= sol.flow[i];
        balance[net.arcs[i].to] += sol.flow[i];
      }
      for (i64 b : balance) CHECK(b == 0);
    } else {
      CHECK(!sol.feasible());
    }
  }
}

TEST_CASE("dimacs dump carries nodes and arcs") {
  FlowNetwork net;
  int s = net.add_node(1), t = net.add_node(-1);
  net.add_arc(s, t, 0, 1, 2);
  net.set_node_capacity(t, 1);
  std::ostringstream os;
  dump_dimacs(os, net);
  CHECK(os.str().find("p min 2 1") != std::string::npos);
  CHECK(os.str().find("a 1 2 0 1 2") != std::string::npos);
}
