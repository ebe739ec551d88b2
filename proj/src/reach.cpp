#include "mrmd/reach.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mrmd {

namespace {

bool requirements_intersect(const Demand& a, const Demand& b) {
  auto i = a.required_types.begin();
  auto j = b.required_types.begin();
  while (i != a.required_types.end() && j != b.required_types.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

bool requires_type(const Demand& d, int type) {
  return std::binary_search(d.required_types.begin(), d.required_types.end(), type);
}

// Kahn topological check over the demand-after-demand arcs.
void verify_acyclic(const Instance& inst, const Reachability& reach) {
  const int n = static_cast<int>(inst.demands.size());
  std::vector<int> indeg(n, 0);
  auto each_arc = [&](auto&& fn) {
    if (reach.per_type_arcs) {
      for (const auto& per_type : reach.type_succ)
        for (int i = 0; i < n; ++i)
          for (int j : per_type[i]) fn(i, j);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j : reach.succ[i]) fn(i, j);
    }
  };
  each_arc([&](int, int j) { ++indeg[j]; });
  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) order.push_back(i);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int i = order[head];
    if (reach.per_type_arcs) {
      for (const auto& per_type : reach.type_succ)
        for (int j : per_type[i])
          if (--indeg[j] == 0) order.push_back(j);
    } else {
      for (int j : reach.succ[i])
        if (--indeg[j] == 0) order.push_back(j);
    }
  }
  // Per-type duplicates can push indegrees above the unique-arc count, so
  // recompute with unique arcs for the per-type case instead of comparing
  // sizes; the shared case is exact.
  if (!reach.per_type_arcs) {
    if (order.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("reachability graph contains a cycle");
    return;
  }
  std::vector<char> seen(n, 0);
  for (int i : order) seen[i] = 1;
  for (int i = 0; i < n; ++i)
    if (!seen[i] && indeg[i] > 0)
      throw std::invalid_argument("reachability graph contains a cycle");
}

std::vector<std::vector<int>> build_start_succ_for_type(const Instance& inst, int type,
                                                        const OdMap* od) {
  const auto& spec = inst.types[type];
  std::vector<std::vector<int>> rows(spec.starts.size());
  for (std::size_t k = 0; k < spec.starts.size(); ++k) {
    int s = spec.starts[k].location;
    for (std::size_t d = 0; d < inst.demands.size(); ++d) {
      const Demand& dem = inst.demands[d];
      if (!requires_type(dem, type)) continue;
      int target = dem.location;
      if (od) target = (*od)[d].at(type).origin;
      if (inst.travel_time(s, target) <= dem.start) rows[k].push_back(static_cast<int>(d));
    }
  }
  return rows;
}

}  // namespace

Reachability build_reachability(const Instance& inst) {
  const int n = static_cast<int>(inst.demands.size());
  Reachability reach;
  reach.succ.resize(n);
  for (int i = 0; i < n; ++i) {
    const Demand& di = inst.demands[i];
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Demand& dj = inst.demands[j];
      if (di.start + di.duration + inst.travel_time(di.location, dj.location) > dj.start) continue;
      if (!requirements_intersect(di, dj)) continue;
      reach.succ[i].push_back(j);
    }
  }
  reach.start_succ.resize(inst.types.size());
  for (std::size_t r = 0; r < inst.types.size(); ++r)
    reach.start_succ[r] = build_start_succ_for_type(inst, static_cast<int>(r), nullptr);
  verify_acyclic(inst, reach);
  return reach;
}

Reachability build_od_reachability(const Instance& inst, const OdMap& od) {
  const int n = static_cast<int>(inst.demands.size());
  if (od.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("od map must cover every demand");
  for (int d = 0; d < n; ++d)
    for (int r : inst.demands[d].required_types)
      if (!od[d].count(r))
        throw std::invalid_argument("missing origin-destination pair for demand '" +
                                    inst.demands[d].id + "' and type '" + inst.types[r].id + "'");

  Reachability reach;
  reach.per_type_arcs = true;
  reach.type_succ.assign(inst.types.size(), std::vector<std::vector<int>>(n));
  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    int type = static_cast<int>(r);
    for (int i = 0; i < n; ++i) {
      const Demand& di = inst.demands[i];
      if (!requires_type(di, type)) continue;
      const OdPair& pi = od[i].at(type);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Demand& dj = inst.demands[j];
        if (!requires_type(dj, type)) continue;
        const OdPair& pj = od[j].at(type);
        i64 lag = di.start + di.duration + inst.travel_time(pi.origin, pi.destination) +
                  inst.travel_time(pi.destination, pj.origin);
        if (lag <= dj.start) reach.type_succ[r][i].push_back(j);
      }
    }
  }
  reach.start_succ.resize(inst.types.size());
  for (std::size_t r = 0; r < inst.types.size(); ++r)
    reach.start_succ[r] = build_start_succ_for_type(inst, static_cast<int>(r), &od);
  verify_acyclic(inst, reach);
  return reach;
}

TypeSubproblem restrict_to_type(const Reachability& reach, const Instance& inst, int type) {
  return restrict_to_type(reach, inst, type, std::vector<char>(inst.demands.size(), 1));
}

TypeSubproblem restrict_to_type(const Reachability& reach, const Instance& inst, int type,
                                const std::vector<char>& mask) {
  if (type < 0 || type >= static_cast<int>(inst.types.size()))
    throw std::invalid_argument("unknown type index " + std::to_string(type));
  std::vector<int> ids;
  for (std::size_t d = 0; d < inst.demands.size(); ++d)
    if (mask[d] && requires_type(inst.demands[d], type)) ids.push_back(static_cast<int>(d));
  return make_subproblem(reach, inst, type, ids);
}

TypeSubproblem make_subproblem(const Reachability& reach, const Instance& inst, int type,
                               const std::vector<int>& demand_ids) {
  TypeSubproblem sub;
  sub.type = type;
  sub.demands = demand_ids;
  sub.starts = inst.types[type].starts;

  std::vector<int> local(inst.demands.size(), -1);
  for (std::size_t i = 0; i < demand_ids.size(); ++i) local[demand_ids[i]] = static_cast<int>(i);

  sub.adj.resize(demand_ids.size());
  for (std::size_t i = 0; i < demand_ids.size(); ++i) {
    for (int j : reach.successors(type, demand_ids[i]))
      if (local[j] >= 0) sub.adj[i].push_back(local[j]);
    std::sort(sub.adj[i].begin(), sub.adj[i].end());
  }
  sub.start_adj.resize(sub.starts.size());
  for (std::size_t k = 0; k < sub.starts.size(); ++k) {
    for (int d : reach.start_succ[type][k])
      if (local[d] >= 0) sub.start_adj[k].push_back(local[d]);
    std::sort(sub.start_adj[k].begin(), sub.start_adj[k].end());
  }
  return sub;
}

void dump_reachability(std::ostream& os, const Reachability& reach) {
  if (reach.per_type_arcs) {
    for (std::size_t r = 0; r < reach.type_succ.size(); ++r)
      for (std::size_t i = 0; i < reach.type_succ[r].size(); ++i)
        for (int j : reach.type_succ[r][i]) os << "A " << r << ' ' << i << ' ' << j << '\n';
  } else {
    for (std::size_t i = 0; i < reach.succ.size(); ++i)
      for (int j : reach.succ[i]) os << "A " << i << ' ' << j << '\n';
  }
  for (std::size_t r = 0; r < reach.start_succ.size(); ++r)
    for (std::size_t k = 0; k < reach.start_succ[r].size(); ++k)
      for (int d : reach.start_succ[r][k]) os << "B " << r << ' ' << k << ' ' << d << '\n';
}

std::vector<Violation> validate_solution(const Instance& inst, const Reachability& reach,
                                         const Solution& sol, bool costed) {
  std::vector<Violation> out;
  std::vector<char> served(inst.demands.size(), 0);
  for (int d : sol.served) {
    if (d < 0 || d >= static_cast<int>(inst.demands.size())) {
      out.push_back({"solution", "served references unknown demand index"});
      return out;
    }
    served[d] = 1;
  }

  // occurrences[type][demand]
  std::vector<std::vector<int>> occurrences(inst.types.size(),
                                            std::vector<int>(inst.demands.size(), 0));
  std::map<std::pair<int, int>, i64> paths_per_start;  // (type, location) -> count
  i64 total_cost = 0;

  for (const auto& p : sol.paths) {
    if (p.type < 0 || p.type >= static_cast<int>(inst.types.size())) {
      out.push_back({"path", "unknown type index"});
      continue;
    }
    const auto& starts = inst.types[p.type].starts;
    bool start_ok = false;
    for (std::size_t k = 0; k < starts.size(); ++k)
      if (starts[k].location == p.start_location) {
        start_ok = true;
        // first hop must be a B arc of this start
        if (!p.demands.empty()) {
          const auto& row = reach.start_succ[p.type][k];
          if (!std::binary_search(row.begin(), row.end(), p.demands.front()))
            out.push_back({inst.demands[p.demands.front()].id,
                           "path begins with a demand unreachable from its start"});
        }
        break;
      }
    if (!start_ok) {
      out.push_back({inst.types[p.type].id, "path starts at a location without stock of its type"});
      continue;
    }
    paths_per_start[{p.type, p.start_location}] += 1;

    int prev = -1;
    int prev_loc = p.start_location;
    for (int d : p.demands) {
      if (d < 0 || d >= static_cast<int>(inst.demands.size())) {
        out.push_back({"path", "unknown demand index"});
        break;
      }
      if (!served[d])
        out.push_back({inst.demands[d].id, "path visits a demand that is not served"});
      if (prev >= 0) {
        const auto& row = reach.successors(p.type, prev);
        if (!std::binary_search(row.begin(), row.end(), d))
          out.push_back({inst.demands[d].id, "path uses a pair that is not a reachability arc"});
      }
      occurrences[p.type][d] += 1;
      total_cost += inst.travel_cost(prev_loc, inst.demands[d].location);
      prev = d;
      prev_loc = inst.demands[d].location;
    }
  }

  for (const auto& [key, count] : paths_per_start) {
    auto [type, loc] = key;
    for (const auto& s : inst.types[type].starts)
      if (s.location == loc && count > s.count)
        out.push_back({inst.types[type].id,
                       "more paths than stock at location " + inst.locations[loc].id});
  }

  i64 reward = 0;
  for (std::size_t d = 0; d < inst.demands.size(); ++d) {
    if (!served[d]) continue;
    reward += inst.demands[d].reward;
    for (int r : inst.demands[d].required_types)
      if (occurrences[r][d] != 1)
        out.push_back({inst.demands[d].id,
                       "served demand appears " + std::to_string(occurrences[r][d]) +
                           " times on paths of type " + inst.types[r].id});
  }

  i64 expected = costed ? reward - total_cost : reward;
  if (sol.objective != expected)
    out.push_back({"solution", "objective " + std::to_string(sol.objective) +
                                   " does not match recomputed value " + std::to_string(expected)});
  return out;
}

}  // namespace mrmd
