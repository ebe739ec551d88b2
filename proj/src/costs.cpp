#include "mrmd/costs.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "mrmd/approx.hpp"
#include "mrmd/exact.hpp"
#include "mrmd/schedule.hpp"

namespace mrmd {

CostedFixedY evaluate_fixed_y_costs(const Instance& inst, const Reachability& reach,
                                    const std::vector<char>& served) {
  CostedFixedY out;
  std::vector<ResourcePath> paths;
  i64 cost = 0;
  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    TypeSubproblem sub = restrict_to_type(reach, inst, static_cast<int>(r));
    TypeServicePlan plan = solve_fixed_service(inst, sub, served, /*use_costs=*/true);
    if (!plan.feasible) return out;
    cost += plan.travel_cost;
    auto rp = to_resource_paths(sub, plan.paths, static_cast<int>(r));
    paths.insert(paths.end(), rp.begin(), rp.end());
  }
  out.feasible = true;
  out.travel_cost = cost;
  out.paths = std::move(paths);
  return out;
}

namespace {

struct CostNode {
  std::vector<char> state;  // 0 out, 1 in, 2 undecided
  i64 bound = 0;
  int depth = 0;
  i64 seq = 0;
};

struct CostOrder {
  bool operator()(const CostNode& a, const CostNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

}  // namespace

ExactCostsResult solve_exact_costs(const Instance& inst, const Reachability& reach,
                                   std::optional<std::chrono::milliseconds> budget) {
  ExactCostsResult result;
  if (budget && budget->count() <= 0) return result;
  const auto deadline =
      budget ? std::optional(std::chrono::steady_clock::now() + *budget) : std::nullopt;
  const int n = static_cast<int>(inst.demands.size());

  i64 best_net = 0;
  CostedObjective best_obj;
  std::vector<char> best_mask(n, 0);
  std::vector<ResourcePath> best_paths;

  // Prices the set and updates the incumbent; reports feasibility so callers
  // can prune.
  auto try_incumbent = [&](const std::vector<char>& mask) {
    i64 gross = 0;
    for (int d = 0; d < n; ++d)
      if (mask[d]) gross += inst.demands[d].reward;
    CostedFixedY res = evaluate_fixed_y_costs(inst, reach, mask);
    if (!res.feasible) return false;
    i64 net = gross - res.travel_cost;
    if (net > best_net) {
      best_net = net;
      best_obj = {gross, res.travel_cost, net};
      best_mask = mask;
      best_paths = std::move(res.paths);
    }
    return true;
  };

  // Bound: candidate reward sum; travel costs are nonnegative, so they only
  // shrink the objective.
  auto reward_bound = [&](const std::vector<char>& state) {
    i64 sum = 0;
    for (int d = 0; d < n; ++d)
      if (state[d] >= 1) sum += inst.demands[d].reward;
    return sum;
  };

  CostNode root;
  root.state.assign(n, 2);
  root.bound = reward_bound(root.state);
  std::priority_queue<CostNode, std::vector<CostNode>, CostOrder> open;
  open.push(std::move(root));
  i64 seq = 0;
  bool exhausted = true;

  while (!open.empty()) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      exhausted = false;
      break;
    }
    CostNode node = open.top();
    open.pop();
    ++result.nodes;
    if (node.bound <= best_net) break;

    std::vector<char> fixed1(n, 0);
    for (int d = 0; d < n; ++d) fixed1[d] = node.state[d] == 1;
    if (!try_incumbent(fixed1)) continue;  // fixed-in set infeasible: prune

    std::vector<char> candidate(n, 0);
    for (int d = 0; d < n; ++d) candidate[d] = node.state[d] >= 1;
    if (candidate != fixed1) try_incumbent(candidate);

    int branch = -1;
    for (int d = 0; d < n; ++d)
      if (node.state[d] == 2 &&
          (branch < 0 || inst.demands[d].reward > inst.demands[branch].reward))
        branch = d;
    if (branch < 0) continue;

    CostNode one;
    one.state = node.state;
    one.state[branch] = 1;
    one.bound = node.bound;
    one.depth = node.depth + 1;
    one.seq = seq++;
    if (one.bound > best_net) open.push(std::move(one));

    CostNode zero;
    zero.state = node.state;
    zero.state[branch] = 0;
    zero.bound = reward_bound(zero.state);
    zero.depth = node.depth + 1;
    zero.seq = seq++;
    if (zero.bound > best_net) open.push(std::move(zero));
  }

  for (int d = 0; d < n; ++d)
    if (best_mask[d]) result.sol.served.push_back(d);
  result.sol.paths = std::move(best_paths);
  result.sol.objective = best_net;
  result.objective = best_obj;
  result.optimal = exhausted;
  return result;
}

AlgorithmACostsResult run_algorithm_a_costs(const Instance& inst, const Reachability& reach,
                                            bool force) {
  i64 w_min = std::numeric_limits<i64>::max();
  for (const auto& d : inst.demands) w_min = std::min(w_min, d.reward);
  const i64 ratio = 2 * static_cast<i64>(inst.types.size());

  bool bound_holds = true;
  if (inst.demands.empty()) {
    bound_holds = true;
  } else {
    for (std::size_t a = 0; a < inst.locations.size() && bound_holds; ++a)
      for (std::size_t b = 0; b < inst.locations.size(); ++b)
        if (inst.travel_cost(static_cast<int>(a), static_cast<int>(b)) * ratio > w_min) {
          bound_holds = false;
          break;
        }
  }
  if (!bound_holds && !force)
    throw std::invalid_argument(
        "travel costs exceed w_min / (2|R|); rerun with force to drop the certificate");

  AlgorithmACostsResult out;
  out.sol = run_algorithm_a(inst, reach);

  i64 cost = 0;
  for (const auto& p : out.sol.paths) {
    int prev = p.start_location;
    for (int d : p.demands) {
      cost += inst.travel_cost(prev, inst.demands[d].location);
      prev = inst.demands[d].location;
    }
  }
  out.objective = {out.sol.objective, cost, out.sol.objective - cost};
  out.sol.objective = out.objective.net;
  out.sol.certificate = bound_holds
                            ? std::optional<std::string>("≥ (OPT − C*)/" +
                                                         std::to_string(ratio))
                            : std::nullopt;
  return out;
}

}  // namespace mrmd
