#include "mrmd/mcf.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mrmd {

namespace {

constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

// Residual graph with paired forward/backward arcs (companion = id ^ 1).
struct Residual {
  std::vector<int> to;
  std::vector<i64> cap;
  std::vector<i64> cost;
  std::vector<std::vector<int>> out;

  explicit Residual(int n) : out(n) {}

  int add(int from, int to_, i64 cap_, i64 cost_) {
    int id = static_cast<int>(to.size());
    to.push_back(to_);
    cap.push_back(cap_);
    cost.push_back(cost_);
    out[from].push_back(id);
    to.push_back(from);
    cap.push_back(0);
    cost.push_back(-cost_);
    out[to_].push_back(id + 1);
    return id;
  }
};

// Exact shortest distances from `source` over positive-capacity arcs; used
// to seed potentials so Dijkstra sees nonnegative reduced costs. Uses a
// topological pass when the positive-capacity graph is acyclic (the usual
// case here) and Bellman-Ford otherwise.
std::vector<i64> initial_distances(const Residual& g, int n, int source) {
  std::vector<i64> dist(n, kInf);
  dist[source] = 0;

  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int id : g.out[u])
      if (g.cap[id] > 0) ++indeg[g.to[id]];
  std::vector<int> order;
  order.reserve(n);
  for (int u = 0; u < n; ++u)
    if (indeg[u] == 0) order.push_back(u);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int id : g.out[u])
      if (g.cap[id] > 0 && --indeg[g.to[id]] == 0) order.push_back(g.to[id]);
  }

  if (order.size() == static_cast<std::size_t>(n)) {
    for (int u : order) {
      if (dist[u] == kInf) continue;
      for (int id : g.out[u])
        if (g.cap[id] > 0) dist[g.to[id]] = std::min(dist[g.to[id]], dist[u] + g.cost[id]);
    }
    return dist;
  }

  for (int pass = 0; pass < n; ++pass) {
    bool any = false;
    for (int u = 0; u < n; ++u) {
      if (dist[u] == kInf) continue;
      for (int id : g.out[u]) {
        if (g.cap[id] > 0 && dist[u] + g.cost[id] < dist[g.to[id]]) {
          dist[g.to[id]] = dist[u] + g.cost[id];
          any = true;
        }
      }
    }
    if (!any) return dist;
  }
  throw std::invalid_argument("flow network has a negative-cost cycle");
}

}  // namespace

bool FlowNetwork::has_node_caps() const {
  for (const auto& c : node_cap)
    if (c) return true;
  return false;
}

NodeSplit apply_node_capacities(const FlowNetwork& net) {
  NodeSplit split;
  const int n = net.num_nodes();
  split.in_node.resize(n);
  split.out_node.resize(n);
  split.cap_arc.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    split.in_node[i] = split.net.add_node(net.supply[i]);
    split.out_node[i] = split.in_node[i];
  }
  for (int i = 0; i < n; ++i) {
    if (!net.node_cap[i]) continue;
    split.out_node[i] = split.net.add_node(0);
    split.cap_arc[i] =
        split.net.add_arc(split.in_node[i], split.out_node[i], *net.node_cap[i], *net.node_cap[i], 0);
  }
  split.arc_map.reserve(net.arcs.size());
  for (const auto& a : net.arcs)
    split.arc_map.push_back(
        split.net.add_arc(split.out_node[a.from], split.in_node[a.to], a.lower, a.upper, a.cost));
  return split;
}

FlowSolution solve_min_cost_flow(const FlowNetwork& net) {
  if (net.has_node_caps()) {
    NodeSplit split = apply_node_capacities(net);
    FlowSolution inner = solve_min_cost_flow(split.net);
    FlowSolution out;
    out.status = inner.status;
    if (inner.feasible()) {
      out.flow.resize(net.arcs.size());
      for (std::size_t a = 0; a < net.arcs.size(); ++a) out.flow[a] = inner.flow[split.arc_map[a]];
      out.cost = inner.cost;
    }
    return out;
  }

  const int n = net.num_nodes();
  i64 supply_sum = 0;
  for (i64 b : net.supply) supply_sum += b;
  if (supply_sum != 0) throw std::invalid_argument("node supplies must sum to zero");
  for (const auto& a : net.arcs) {
    if (a.lower < 0 || a.lower > a.upper)
      throw std::invalid_argument("arc bounds must satisfy 0 <= lower <= upper");
  }

  // Eliminate lower bounds: push the mandatory flow and track the excess it
  // creates at each endpoint.
  std::vector<i64> excess(net.supply.begin(), net.supply.end());
  for (const auto& a : net.arcs) {
    excess[a.from] -= a.lower;
    excess[a.to] += a.lower;
  }

  const int source = n;
  const int sink = n + 1;
  Residual g(n + 2);
  std::vector<int> residual_id(net.arcs.size(), -1);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (a.upper - a.lower > 0) residual_id[i] = g.add(a.from, a.to, a.upper - a.lower, a.cost);
  }
  i64 required = 0;
  for (int u = 0; u < n; ++u) {
    if (excess[u] > 0) {
      g.add(source, u, excess[u], 0);
      required += excess[u];
    } else if (excess[u] < 0) {
      g.add(u, sink, -excess[u], 0);
    }
  }

  std::vector<i64> pot = initial_distances(g, n + 2, source);
  for (i64& p : pot)
    if (p == kInf) p = 0;  // unreachable nodes never carry flow

  i64 routed = 0;
  std::vector<i64> dist(n + 2);
  std::vector<int> parent_arc(n + 2);
  using Item = std::pair<i64, int>;
  while (routed < required) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    dist[source] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.push({0, source});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (int id : g.out[u]) {
        if (g.cap[id] <= 0) continue;
        int v = g.to[id];
        i64 nd = d + g.cost[id] + pot[u] - pot[v];
        if (nd < dist[v]) {
          dist[v] = nd;
          parent_arc[v] = id;
          heap.push({nd, v});
        }
      }
    }
    if (dist[sink] == kInf) {
      FlowSolution out;
      out.status = FlowSolution::Status::Infeasible;
      return out;
    }
    for (int u = 0; u < n + 2; ++u) pot[u] += std::min(dist[u], dist[sink]);

    i64 push = required - routed;
    for (int v = sink; v != source;) {
      int id = parent_arc[v];
      push = std::min(push, g.cap[id]);
      v = g.to[id ^ 1];
    }
    for (int v = sink; v != source;) {
      int id = parent_arc[v];
      g.cap[id] -= push;
      g.cap[id ^ 1] += push;
      v = g.to[id ^ 1];
    }
    routed += push;
  }

  FlowSolution out;
  out.status = FlowSolution::Status::Optimal;
  out.flow.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    i64 extra = 0;
    if (residual_id[i] >= 0) extra = g.cap[residual_id[i] ^ 1];  // flow = gained reverse capacity
    out.flow[i] = a.lower + extra;
    out.cost += out.flow[i] * a.cost;
  }
  return out;
}

void dump_dimacs(std::ostream& os, const FlowNetwork& net) {
  os << "p min " << net.num_nodes() << ' ' << net.arcs.size() << '\n';
  for (int i = 0; i < net.num_nodes(); ++i) {
    if (net.supply[i] != 0) os << "n " << i + 1 << ' ' << net.supply[i] << '\n';
    if (net.node_cap[i]) os << "c node_cap " << i + 1 << ' ' << *net.node_cap[i] << '\n';
  }
  for (const auto& a : net.arcs)
    os << "a " << a.from + 1 << ' ' << a.to + 1 << ' ' << a.lower << ' ' << a.upper << ' '
       << a.cost << '\n';
}

}  // namespace mrmd
