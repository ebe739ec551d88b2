#include "mrmd/approx.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mrmd/schedule.hpp"

namespace mrmd {

namespace {

// All resources must share one starting location; returns it.
int shared_start_location(const Instance& inst) {
  int loc = -1;
  for (const auto& t : inst.types)
    for (const auto& s : t.starts) {
      if (loc < 0) loc = s.location;
      if (s.location != loc)
        throw std::invalid_argument("algorithm requires a single shared starting location");
    }
  if (loc < 0) throw std::invalid_argument("instance has no resources");
  return loc;
}

// Type indices ordered by increasing stock (ties by index), so that the
// r-th type has at least as many resources as any earlier one.
std::vector<int> types_by_stock(const Instance& inst) {
  std::vector<int> order(inst.types.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.types[a].total_count() < inst.types[b].total_count();
  });
  return order;
}

Solution assemble(const Instance& inst, std::vector<int> served, std::vector<ResourcePath> paths,
                  std::string certificate) {
  Solution sol;
  std::sort(served.begin(), served.end());
  sol.served = std::move(served);
  for (int d : sol.served) sol.objective += inst.demands[d].reward;
  sol.paths = std::move(paths);
  sol.certificate = std::move(certificate);
  return sol;
}

}  // namespace

ConflictGraph build_conflict_graph(const Instance& inst) {
  ConflictGraph g;
  std::map<std::vector<int>, int> index;
  g.node_of_demand.resize(inst.demands.size());
  for (std::size_t d = 0; d < inst.demands.size(); ++d) {
    const auto& types = inst.demands[d].required_types;
    auto it = index.find(types);
    if (it == index.end()) {
      it = index.emplace(types, static_cast<int>(g.node_types.size())).first;
      g.node_types.push_back(types);
      g.buckets.emplace_back();
    }
    g.node_of_demand[d] = it->second;
    g.buckets[it->second].push_back(static_cast<int>(d));
  }
  const int v = static_cast<int>(g.node_types.size());
  g.adj.resize(v);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      const auto& ta = g.node_types[a];
      const auto& tb = g.node_types[b];
      bool hit = false;
      for (std::size_t i = 0, j = 0; i < ta.size() && j < tb.size();) {
        if (ta[i] == tb[j]) {
          hit = true;
          break;
        }
        ta[i] < tb[j] ? ++i : ++j;
      }
      if (hit) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
      }
    }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  return g;
}

Coloring greedy_color(const ConflictGraph& g) {
  const int v = static_cast<int>(g.node_types.size());
  std::vector<int> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.adj[a].size() > g.adj[b].size(); });

  Coloring col;
  col.fold = 1;
  col.node_colors.assign(v, {});
  std::vector<int> color(v, -1);
  for (int node : order) {
    std::vector<char> used(v + 1, 0);
    for (int nb : g.adj[node])
      if (color[nb] >= 0) used[color[nb]] = 1;
    int c = 0;
    while (used[c]) ++c;
    color[node] = c;
    col.node_colors[node] = {c};
    col.num_colors = std::max(col.num_colors, c + 1);
  }
  return col;
}

namespace {

void check_coloring(const ConflictGraph& g, const Coloring& col) {
  if (col.fold < 1 || col.num_colors < 1) throw std::invalid_argument("empty coloring");
  if (col.node_colors.size() != g.node_types.size())
    throw std::invalid_argument("coloring does not cover the conflict graph");
  for (std::size_t v = 0; v < g.node_types.size(); ++v) {
    const auto& cs = col.node_colors[v];
    if (static_cast<int>(cs.size()) != col.fold)
      throw std::invalid_argument("node must carry exactly fold colors");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] < 0 || cs[i] >= col.num_colors) throw std::invalid_argument("color out of range");
      if (i > 0 && cs[i - 1] >= cs[i]) throw std::invalid_argument("colors must be sorted and distinct");
    }
  }
  for (std::size_t a = 0; a < g.adj.size(); ++a)
    for (int b : g.adj[a]) {
      for (int c : col.node_colors[a])
        if (std::binary_search(col.node_colors[b].begin(), col.node_colors[b].end(), c))
          throw std::invalid_argument("adjacent nodes share a color");
    }
}

Solution run_color_algorithm(const Instance& inst, const Reachability& reach,
                             const Coloring& coloring, std::string certificate) {
  shared_start_location(inst);
  ConflictGraph g = build_conflict_graph(inst);
  check_coloring(g, coloring);
  const int v = static_cast<int>(g.node_types.size());

  // Bucket subproblems are color-independent: solve each node once with the
  // smallest-stock type in its subset.
  std::vector<int> rep(v);
  std::vector<OneTypeSolution> bucket_sol(v);
  std::vector<TypeSubproblem> bucket_sub(v);
  for (int node = 0; node < v; ++node) {
    int best_type = g.node_types[node][0];
    for (int t : g.node_types[node])
      if (inst.types[t].total_count() < inst.types[best_type].total_count()) best_type = t;
    rep[node] = best_type;
    bucket_sub[node] = make_subproblem(reach, inst, best_type, g.buckets[node]);
    bucket_sol[node] = solve_1r1d(inst, bucket_sub[node]);
  }

  std::vector<std::vector<int>> color_nodes(coloring.num_colors);
  for (int node = 0; node < v; ++node)
    for (int c : coloring.node_colors[node]) color_nodes[c].push_back(node);

  int best_color = -1;
  i64 best_value = -1;
  for (int c = 0; c < coloring.num_colors; ++c) {
    i64 value = 0;
    for (int node : color_nodes[c]) value += bucket_sol[node].objective;
    if (value > best_value) {
      best_value = value;
      best_color = c;
    }
  }

  std::vector<int> served;
  std::vector<ResourcePath> paths;
  std::vector<int> unit_counter(inst.types.size(), 0);
  for (int node : color_nodes[best_color]) {
    for (std::size_t d = 0; d < inst.demands.size(); ++d)
      if (bucket_sol[node].served[d]) served.push_back(static_cast<int>(d));
    for (int t : g.node_types[node])
      for (const auto& p : bucket_sol[node].paths) {
        if (p.demands.empty()) continue;
        paths.push_back({t, unit_counter[t]++,
                         bucket_sub[node].starts[p.start_index].location, p.demands});
      }
  }
  return assemble(inst, std::move(served), std::move(paths), std::move(certificate));
}

}  // namespace

Solution run_algorithm_a(const Instance& inst, const Reachability& reach) {
  shared_start_location(inst);
  std::vector<int> order = types_by_stock(inst);

  std::vector<char> alive(inst.demands.size(), 1);
  int best_pos = -1;
  i64 best_value = -1;
  OneTypeSolution best_sol;
  TypeSubproblem best_sub;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    TypeSubproblem sub = restrict_to_type(reach, inst, order[pos], alive);
    OneTypeSolution one = solve_1r1d(inst, sub);
    for (int d : sub.demands) alive[d] = 0;
    if (one.objective > best_value) {
      best_value = one.objective;
      best_pos = static_cast<int>(pos);
      best_sol = std::move(one);
      best_sub = std::move(sub);
    }
  }

  std::vector<int> served;
  for (std::size_t d = 0; d < inst.demands.size(); ++d)
    if (best_sol.served[d]) served.push_back(static_cast<int>(d));

  // Every type with at least as many resources follows the winning schedule.
  std::vector<ResourcePath> paths;
  for (std::size_t pos = best_pos; pos < order.size(); ++pos) {
    int unit = 0;
    for (const auto& p : best_sol.paths) {
      if (p.demands.empty()) continue;
      paths.push_back({order[pos], unit++, best_sub.starts[p.start_index].location, p.demands});
    }
  }
  return assemble(inst, std::move(served), std::move(paths),
                  "≥ OPT/" + std::to_string(inst.types.size()));
}

Solution run_algorithm_b(const Instance& inst, const Reachability& reach,
                         const Coloring& coloring) {
  if (coloring.fold != 1) throw std::invalid_argument("expected a proper (fold-1) coloring");
  return run_color_algorithm(inst, reach, coloring,
                             "≥ OPT/" + std::to_string(coloring.num_colors));
}

Solution run_algorithm_c(const Instance& inst, const Reachability& reach,
                         const Coloring& coloring) {
  return run_color_algorithm(inst, reach, coloring,
                             "≥ " + std::to_string(coloring.fold) + "·OPT/" +
                                 std::to_string(coloring.num_colors));
}

namespace {

struct OneOrAllShape {
  std::vector<std::vector<int>> singles;  // per type: demands requiring just it
  std::vector<int> all;                   // demands requiring every type
};

void check_zero_travel(const Instance& inst) {
  std::vector<char> used(inst.locations.size(), 0);
  for (const auto& d : inst.demands) used[d.location] = 1;
  for (const auto& t : inst.types)
    for (const auto& s : t.starts) used[s.location] = 1;
  for (std::size_t a = 0; a < used.size(); ++a)
    for (std::size_t b = 0; b < used.size(); ++b)
      if (used[a] && used[b] &&
          inst.travel_time(static_cast<int>(a), static_cast<int>(b)) != 0)
        throw std::invalid_argument("special case requires zero travel times");
}

OneOrAllShape classify_one_or_all(const Instance& inst) {
  OneOrAllShape shape;
  shape.singles.resize(inst.types.size());
  for (std::size_t d = 0; d < inst.demands.size(); ++d) {
    const auto& req = inst.demands[d].required_types;
    if (inst.demands[d].start < 0)
      throw std::invalid_argument("special case requires nonnegative start times");
    if (req.size() == 1)
      shape.singles[req[0]].push_back(static_cast<int>(d));
    else if (req.size() == inst.types.size())
      shape.all.push_back(static_cast<int>(d));
    else
      throw std::invalid_argument("demand '" + inst.demands[d].id +
                                  "' must request one type or all types");
  }
  return shape;
}

// Core selection loop: serves the surplus of each single-type list, then
// repeatedly compares the best all-types demand against the sum of the best
// demand of each type.
std::vector<int> one_or_all_select(const Instance& inst, OneOrAllShape shape,
                                   const std::vector<i64>& stocks) {
  auto by_reward = [&](std::vector<int>& ids) {
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      if (inst.demands[a].reward != inst.demands[b].reward)
        return inst.demands[a].reward > inst.demands[b].reward;
      return a < b;
    });
  };
  for (auto& ids : shape.singles) by_reward(ids);
  by_reward(shape.all);

  i64 m = *std::min_element(stocks.begin(), stocks.end());
  std::vector<std::size_t> head(inst.types.size(), 0);
  std::size_t head_all = 0;
  std::vector<int> served;

  for (std::size_t t = 0; t < inst.types.size(); ++t) {
    i64 surplus = stocks[t] - m;
    while (surplus > 0 && head[t] < shape.singles[t].size()) {
      served.push_back(shape.singles[t][head[t]++]);
      --surplus;
    }
  }
  for (i64 round = 0; round < m; ++round) {
    i64 singles_sum = 0;
    for (std::size_t t = 0; t < inst.types.size(); ++t)
      if (head[t] < shape.singles[t].size()) singles_sum += inst.demands[shape.singles[t][head[t]]].reward;
    i64 all_head = head_all < shape.all.size() ? inst.demands[shape.all[head_all]].reward : 0;
    if (singles_sum == 0 && all_head == 0) break;
    if (singles_sum <= all_head) {
      served.push_back(shape.all[head_all++]);
    } else {
      for (std::size_t t = 0; t < inst.types.size(); ++t)
        if (head[t] < shape.singles[t].size()) served.push_back(shape.singles[t][head[t]++]);
    }
  }
  return served;
}

// Unit slots per type, in declared start order.
std::vector<std::vector<int>> unit_start_locations(const Instance& inst) {
  std::vector<std::vector<int>> units(inst.types.size());
  for (std::size_t t = 0; t < inst.types.size(); ++t)
    for (const auto& s : inst.types[t].starts)
      for (i64 u = 0; u < s.count; ++u) units[t].push_back(s.location);
  return units;
}

}  // namespace

Solution run_algorithm_e(const Instance& inst) {
  check_zero_travel(inst);
  if (!inst.demands.empty())
    for (const auto& d : inst.demands)
      if (d.start != inst.demands.front().start)
        throw std::invalid_argument("special case requires one shared service start time");
  OneOrAllShape shape = classify_one_or_all(inst);

  std::vector<i64> stocks;
  for (const auto& t : inst.types) stocks.push_back(t.total_count());
  std::vector<int> served = one_or_all_select(inst, std::move(shape), stocks);

  auto units = unit_start_locations(inst);
  std::vector<int> next_unit(inst.types.size(), 0);
  std::vector<ResourcePath> paths;
  for (int d : served)
    for (int t : inst.demands[d].required_types) {
      int u = next_unit[t]++;
      paths.push_back({t, u, units[t][u], {d}});
    }
  return assemble(inst, std::move(served), std::move(paths), {});
}

Solution run_algorithm_e_grouped(const Instance& inst) {
  check_zero_travel(inst);
  for (const auto& d : inst.demands) {
    if (d.duration != 1)
      throw std::invalid_argument("grouped special case requires unit service times");
  }
  classify_one_or_all(inst);  // shape/start-time validation

  std::map<i64, std::vector<int>> groups;
  for (std::size_t d = 0; d < inst.demands.size(); ++d)
    groups[inst.demands[d].start].push_back(static_cast<int>(d));

  std::vector<i64> stocks;
  for (const auto& t : inst.types) stocks.push_back(t.total_count());
  auto units = unit_start_locations(inst);

  std::vector<int> served_total;
  // unit -> chronological demand list, per type
  std::vector<std::vector<std::vector<int>>> unit_demands(inst.types.size());
  for (std::size_t t = 0; t < inst.types.size(); ++t) unit_demands[t].resize(units[t].size());

  for (auto& [start, ids] : groups) {
    OneOrAllShape shape;
    shape.singles.resize(inst.types.size());
    for (int d : ids) {
      const auto& req = inst.demands[d].required_types;
      if (req.size() == 1)
        shape.singles[req[0]].push_back(d);
      else
        shape.all.push_back(d);
    }
    std::vector<int> served = one_or_all_select(inst, std::move(shape), stocks);
    std::vector<int> next_unit(inst.types.size(), 0);
    for (int d : served)
      for (int t : inst.demands[d].required_types) unit_demands[t][next_unit[t]++].push_back(d);
    served_total.insert(served_total.end(), served.begin(), served.end());
  }

  std::vector<ResourcePath> paths;
  for (std::size_t t = 0; t < inst.types.size(); ++t)
    for (std::size_t u = 0; u < unit_demands[t].size(); ++u)
      if (!unit_demands[t][u].empty())
        paths.push_back({static_cast<int>(t), static_cast<int>(u), units[t][u],
                         unit_demands[t][u]});
  return assemble(inst, std::move(served_total), std::move(paths), {});
}

}  // namespace mrmd
