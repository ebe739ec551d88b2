#pragma once

// Test fixtures and independent oracles. The oracles re-derive everything
// from raw instance fields (never from the library's reachability or flow
// machinery) so they can vouch for it.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "mrmd/generate.hpp"
#include "mrmd/types.hpp"

namespace mrmd::testing {

// --- fixtures -------------------------------------------------------------

// One location, zero travel everywhere.
inline Instance zero_travel_base() {
  Instance inst;
  inst.locations.push_back({"o", std::nullopt});
  inst.travel.mode = TravelMode::Matrix;
  inst.travel.matrix = {{0}};
  return inst;
}

inline Demand make_demand(std::string id, int location, i64 start, i64 duration, i64 reward,
                          std::vector<int> requires_types) {
  Demand d;
  d.id = std::move(id);
  d.location = location;
  d.start = start;
  d.duration = duration;
  d.reward = reward;
  d.required_types = std::move(requires_types);
  return d;
}

// Two types, three demands, one shared start; everything reachable.
inline Instance small_instance() {
  Instance inst = zero_travel_base();
  inst.types.push_back({"r0", {StartStock{0, 1}}});
  inst.types.push_back({"r1", {StartStock{0, 1}}});
  inst.demands.push_back(make_demand("d0", 0, 0, 5, 5, {0}));
  inst.demands.push_back(make_demand("d1", 0, 10, 5, 7, {1}));
  inst.demands.push_back(make_demand("d2", 0, 20, 5, 6, {0, 1}));
  return inst;
}

// --- independent oracles ---------------------------------------------------

// Raw reachability tests straight from the model's inequalities.
inline bool raw_start_ok(const Instance& inst, int start_loc, const Demand& d) {
  return inst.travel_time(start_loc, d.location) <= d.start;
}
inline bool raw_chain_ok(const Instance& inst, const Demand& a, const Demand& b) {
  return a.start + a.duration + inst.travel_time(a.location, b.location) <= b.start;
}

// Per-type unit slots: start location per unit.
inline std::vector<std::vector<int>> oracle_units(const Instance& inst) {
  std::vector<std::vector<int>> units(inst.types.size());
  for (std::size_t t = 0; t < inst.types.size(); ++t)
    for (const auto& s : inst.types[t].starts)
      for (i64 u = 0; u < s.count; ++u) units[t].push_back(s.location);
  return units;
}

// Can `served` be scheduled for type r? Exhaustive assignment of the served
// demands requiring r to the type's units, in time order.
inline bool oracle_type_feasible(const Instance& inst, int type, const std::vector<char>& served,
                                 const std::vector<int>& unit_locs) {
  std::vector<int> ids;
  for (std::size_t d = 0; d < inst.demands.size(); ++d) {
    if (!served[d]) continue;
    const auto& req = inst.demands[d].required_types;
    if (std::find(req.begin(), req.end(), type) != req.end()) ids.push_back(static_cast<int>(d));
  }
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return inst.demands[a].start < inst.demands[b].start;
  });

  std::vector<int> last(unit_locs.size(), -1);  // last demand per unit
  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == ids.size()) return true;
    const Demand& d = inst.demands[ids[pos]];
    for (std::size_t u = 0; u < unit_locs.size(); ++u) {
      if (last[u] < 0) {
        // empty units at the same location are interchangeable
        bool dup = false;
        for (std::size_t v = 0; v < u && !dup; ++v)
          dup = last[v] < 0 && unit_locs[v] == unit_locs[u];
        if (dup) continue;
      }
      bool ok = last[u] < 0 ? raw_start_ok(inst, unit_locs[u], d)
                            : raw_chain_ok(inst, inst.demands[last[u]], d);
      if (!ok) continue;
      int saved = last[u];
      last[u] = ids[pos];
      if (self(self, pos + 1)) return true;
      last[u] = saved;
    }
    return false;
  };
  return dfs(dfs, 0);
}

inline bool oracle_served_feasible(const Instance& inst, const std::vector<char>& served) {
  auto units = oracle_units(inst);
  for (std::size_t t = 0; t < inst.types.size(); ++t)
    if (!oracle_type_feasible(inst, static_cast<int>(t), served, units[static_cast<int>(t)]))
      return false;
  return true;
}

// Exhaustive optimum over served subsets.
inline i64 oracle_opt(const Instance& inst) {
  const int n = static_cast<int>(inst.demands.size());
  i64 best = 0;
  std::vector<char> served(n, 0);
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    i64 reward = 0;
    for (int d = 0; d < n; ++d) {
      served[d] = (bits >> d) & 1;
      if (served[d]) reward += inst.demands[d].reward;
    }
    if (reward <= best) continue;
    if (oracle_served_feasible(inst, served)) best = reward;
  }
  return best;
}

// Minimum travel cost to serve `served` for one type, by exhaustive
// assignment; nullopt when infeasible.
inline std::optional<i64> oracle_type_min_cost(const Instance& inst, int type,
                                               const std::vector<char>& served,
                                               const std::vector<int>& unit_locs) {
  std::vector<int> ids;
  for (std::size_t d = 0; d < inst.demands.size(); ++d) {
    if (!served[d]) continue;
    const auto& req = inst.demands[d].required_types;
    if (std::find(req.begin(), req.end(), type) != req.end()) ids.push_back(static_cast<int>(d));
  }
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return inst.demands[a].start < inst.demands[b].start;
  });

  std::optional<i64> best;
  std::vector<int> last(unit_locs.size(), -1);
  auto dfs = [&](auto&& self, std::size_t pos, i64 cost) -> void {
    if (best && cost >= *best) return;
    if (pos == ids.size()) {
      best = cost;
      return;
    }
    const Demand& d = inst.demands[ids[pos]];
    for (std::size_t u = 0; u < unit_locs.size(); ++u) {
      bool fresh = last[u] < 0;
      bool ok = fresh ? raw_start_ok(inst, unit_locs[u], d)
                      : raw_chain_ok(inst, inst.demands[last[u]], d);
      if (!ok) continue;
      i64 leg = fresh ? inst.travel_cost(unit_locs[u], d.location)
                      : inst.travel_cost(inst.demands[last[u]].location, d.location);
      int saved = last[u];
      last[u] = ids[pos];
      self(self, pos + 1, cost + leg);
      last[u] = saved;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

// Exhaustive optimum of reward minus travel cost.
inline i64 oracle_opt_costed(const Instance& inst) {
  const int n = static_cast<int>(inst.demands.size());
  auto units = oracle_units(inst);
  i64 best = 0;
  std::vector<char> served(n, 0);
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    i64 reward = 0;
    for (int d = 0; d < n; ++d) {
      served[d] = (bits >> d) & 1;
      if (served[d]) reward += inst.demands[d].reward;
    }
    if (reward <= best) continue;
    i64 cost = 0;
    bool feasible = true;
    for (std::size_t t = 0; t < inst.types.size() && feasible; ++t) {
      auto c = oracle_type_min_cost(inst, static_cast<int>(t), served, units[t]);
      if (!c)
        feasible = false;
      else
        cost += *c;
    }
    if (feasible) best = std::max(best, reward - cost);
  }
  return best;
}

// --- random fixture streams -------------------------------------------------

// Conflict-heavy small instances for oracle comparisons.
inline GeneratorConfig tight_config(std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.num_types = 1 + static_cast<int>(seed % 3);
  cfg.num_demands = 6 + static_cast<int>(seed % 7);
  cfg.total_resources = cfg.num_types * (1 + static_cast<int>(seed % 2));
  cfg.grid_width = 6;
  cfg.grid_height = 6;
  cfg.horizon = 150;
  cfg.tri_min = 15;
  cfg.tri_mode = 30;
  cfg.tri_max = 120;
  return cfg;
}

// Demands requesting overlapping pairs of five types arranged in a ring;
// the conflict graph is the 5-cycle.
inline Instance ring_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Instance inst = zero_travel_base();
  for (int t = 0; t < 5; ++t)
    inst.types.push_back({"r" + std::to_string(t), {StartStock{0, 1 + static_cast<int>(rng() % 2)}}});
  const std::vector<std::vector<int>> ring = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  int n = 6 + static_cast<int>(rng() % 4);
  for (int d = 0; d < n; ++d) {
    i64 start = static_cast<i64>(rng() % 40);
    i64 duration = 1 + static_cast<i64>(rng() % 20);
    i64 reward = 1 + static_cast<i64>(rng() % 30);
    inst.demands.push_back(make_demand("d" + std::to_string(d), 0, start, duration, reward,
                                       ring[rng() % ring.size()]));
  }
  return inst;
}

// 5:2 coloring of the ring: node i gets {2i mod 5, (2i+1) mod 5}.
inline std::vector<std::vector<int>> ring_fold_colors() {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < 5; ++i) {
    std::vector<int> cs = {(2 * i) % 5, (2 * i + 1) % 5};
    std::sort(cs.begin(), cs.end());
    out.push_back(cs);
  }
  return out;
}

// One-or-all instances for the zero-travel special cases.
inline Instance one_or_all_instance(std::uint64_t seed, bool unit_durations) {
  std::mt19937_64 rng(seed);
  Instance inst = zero_travel_base();
  int types = 2 + static_cast<int>(rng() % 2);
  for (int t = 0; t < types; ++t)
    inst.types.push_back({"r" + std::to_string(t), {StartStock{0, 1 + static_cast<int>(rng() % 3)}}});
  std::vector<int> all;
  for (int t = 0; t < types; ++t) all.push_back(t);
  int n = 4 + static_cast<int>(rng() % 6);
  i64 shared_start = static_cast<i64>(rng() % 4);
  for (int d = 0; d < n; ++d) {
    std::vector<int> req = (rng() % 3 == 0) ? all : std::vector<int>{static_cast<int>(rng() % types)};
    i64 start = unit_durations ? static_cast<i64>(rng() % 4) : shared_start;
    i64 duration = unit_durations ? 1 : 1 + static_cast<i64>(rng() % 9);
    i64 reward = 1 + static_cast<i64>(rng() % 40);
    inst.demands.push_back(
        make_demand("d" + std::to_string(d), 0, start, duration, reward, std::move(req)));
  }
  return inst;
}

}  // namespace mrmd::testing
