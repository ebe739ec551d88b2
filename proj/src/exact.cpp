#include "mrmd/exact.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace mrmd {

namespace {

i64 reward_of_mask(const Instance& inst, const std::vector<char>& mask) {
  i64 sum = 0;
  for (std::size_t d = 0; d < mask.size(); ++d)
    if (mask[d]) sum += inst.demands[d].reward;
  return sum;
}

std::vector<int> mask_to_set(const std::vector<char>& mask) {
  std::vector<int> out;
  for (std::size_t d = 0; d < mask.size(); ++d)
    if (mask[d]) out.push_back(static_cast<int>(d));
  return out;
}

}  // namespace

FixedYResult evaluate_fixed_y(const Instance& inst, const Reachability& reach,
                              const std::vector<char>& served) {
  FixedYResult out;
  std::vector<ResourcePath> paths;
  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    TypeSubproblem sub = restrict_to_type(reach, inst, static_cast<int>(r));
    TypeServicePlan plan = solve_fixed_service(inst, sub, served, false);
    if (!plan.feasible) return out;
    auto rp = to_resource_paths(sub, plan.paths, static_cast<int>(r));
    paths.insert(paths.end(), rp.begin(), rp.end());
  }
  out.feasible = true;
  out.paths = std::move(paths);
  return out;
}

Solution solve_brute_force(const Instance& inst, const Reachability& reach, int cap) {
  const int n = static_cast<int>(inst.demands.size());
  if (n > cap) throw std::invalid_argument("brute force cap exceeded");

  std::vector<char> best_mask(n, 0);
  std::vector<int> best_set;
  i64 best = 0;
  std::vector<ResourcePath> best_paths;

  std::vector<char> mask(n, 0);
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    i64 reward = 0;
    for (int d = 0; d < n; ++d) {
      mask[d] = (bits >> d) & 1;
      if (mask[d]) reward += inst.demands[d].reward;
    }
    if (reward < best) continue;
    std::vector<int> set;
    if (reward == best) {
      set = mask_to_set(mask);
      if (!std::lexicographical_compare(set.begin(), set.end(), best_set.begin(), best_set.end()))
        continue;
    }
    FixedYResult res = evaluate_fixed_y(inst, reach, mask);
    if (!res.feasible) continue;
    best = reward;
    best_mask = mask;
    best_set = set.empty() ? mask_to_set(mask) : set;
    best_paths = std::move(res.paths);
  }

  Solution sol;
  sol.served = mask_to_set(best_mask);
  sol.paths = std::move(best_paths);
  sol.objective = best;
  return sol;
}

namespace {

struct BbNode {
  std::vector<char> state;  // 0 fixed-out, 1 fixed-in, 2 undecided
  i64 bound = 0;
  int depth = 0;
  i64 seq = 0;
  bool fixed1_ok = false;    // fixed-in set known feasible
  bool full_infeasible = false;  // serving all candidates known infeasible
};

struct BbOrder {
  // priority: larger bound, then deeper, then earlier sequence
  bool operator()(const BbNode& a, const BbNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

class BbSolver {
 public:
  BbSolver(const Instance& inst, const Reachability& reach)
      : inst_(inst), reach_(reach), n_(static_cast<int>(inst.demands.size())) {
    // common reward denominator to keep the split rewards integral
    reward_scale_ = 1;
    for (const auto& d : inst.demands) {
      i64 m = static_cast<i64>(d.required_types.size());
      reward_scale_ = std::lcm(reward_scale_, m);
      if (reward_scale_ > 100000) {  // degenerate requirement sizes: skip the relaxation bound
        reward_scale_ = 0;
        break;
      }
    }
  }

  ExactResult run(std::optional<std::chrono::milliseconds> budget) {
    ExactResult result;
    result.sol.objective = 0;
    if (budget && budget->count() <= 0) return result;
    const auto deadline = budget ? std::optional(std::chrono::steady_clock::now() + *budget)
                                 : std::nullopt;

    best_ = 0;
    best_mask_.assign(n_, 0);
    best_paths_.clear();

    BbNode root;
    root.state.assign(n_, 2);
    root.fixed1_ok = true;  // empty fixed-in set
    root.bound = compute_bound(root.state, /*try_heuristic=*/true);
    std::priority_queue<BbNode, std::vector<BbNode>, BbOrder> open;
    open.push(std::move(root));
    i64 seq = 0;
    bool exhausted = true;

    while (!open.empty()) {
      if (deadline && std::chrono::steady_clock::now() > *deadline) {
        exhausted = false;
        break;
      }
      BbNode node = open.top();
      open.pop();
      ++result.nodes;
      if (node.bound <= best_) break;  // best-first: nothing left can improve

      if (!node.fixed1_ok) {
        std::vector<char> fixed1(n_, 0);
        for (int d = 0; d < n_; ++d) fixed1[d] = node.state[d] == 1;
        FixedYResult res = evaluate_fixed_y(inst_, reach_, fixed1);
        if (!res.feasible) continue;
        node.fixed1_ok = true;
        consider_incumbent(fixed1, std::move(res.paths));
      }

      if (!node.full_infeasible) {
        std::vector<char> candidate(n_, 0);
        for (int d = 0; d < n_; ++d) candidate[d] = node.state[d] >= 1;
        FixedYResult res = evaluate_fixed_y(inst_, reach_, candidate);
        if (res.feasible) {
          consider_incumbent(candidate, std::move(res.paths));
          continue;  // subtree solved: its optimum is serving every candidate
        }
        node.full_infeasible = true;
      }

      int branch = -1;
      for (int d = 0; d < n_; ++d)
        if (node.state[d] == 2 &&
            (branch < 0 || inst_.demands[d].reward > inst_.demands[branch].reward))
          branch = d;
      if (branch < 0) continue;  // leaf: value already captured by the fixed-in evaluation

      BbNode one;
      one.state = node.state;
      one.state[branch] = 1;
      one.bound = node.bound;  // same candidate set
      one.depth = node.depth + 1;
      one.seq = seq++;
      one.fixed1_ok = false;
      one.full_infeasible = true;  // same candidate set as parent, already refuted
      if (one.bound > best_) open.push(std::move(one));

      BbNode zero;
      zero.state = node.state;
      zero.state[branch] = 0;
      zero.depth = node.depth + 1;
      zero.seq = seq++;
      zero.fixed1_ok = node.fixed1_ok;
      zero.full_infeasible = false;
      zero.bound = compute_bound(zero.state, /*try_heuristic=*/true);
      if (zero.bound > best_) open.push(std::move(zero));
    }

    result.sol.served = mask_to_set(best_mask_);
    result.sol.paths = std::move(best_paths_);
    result.sol.objective = best_;
    result.optimal = exhausted;
    return result;
  }

 private:
  // Upper bound for the subtree: candidate reward sum, tightened by
  // independent per-type schedules with each reward split across the
  // demand's required types. As a side effect, demands picked by every one
  // of their types' relaxed schedules form a cheap incumbent candidate.
  i64 compute_bound(const std::vector<char>& state, bool try_heuristic) {
    std::vector<char> candidate(n_, 0);
    i64 reward_sum = 0;
    for (int d = 0; d < n_; ++d)
      if (state[d] >= 1) {
        candidate[d] = 1;
        reward_sum += inst_.demands[d].reward;
      }
    if (reward_scale_ == 0) return reward_sum;

    std::vector<i64> scaled(n_);
    for (int d = 0; d < n_; ++d)
      scaled[d] = inst_.demands[d].reward * reward_scale_ /
                  static_cast<i64>(inst_.demands[d].required_types.size());

    i64 relax_total = 0;
    std::vector<char> heuristic(candidate);
    for (std::size_t r = 0; r < inst_.types.size(); ++r) {
      TypeSubproblem sub = restrict_to_type(reach_, inst_, static_cast<int>(r), candidate);
      OneTypeSolution one = solve_1r1d(inst_, sub, &scaled);
      relax_total += one.objective;
      for (int d = 0; d < n_; ++d)
        if (heuristic[d] && !one.served[d] &&
            std::binary_search(inst_.demands[d].required_types.begin(),
                               inst_.demands[d].required_types.end(), static_cast<int>(r)))
          heuristic[d] = 0;
    }
    i64 bound = std::min(reward_sum, relax_total / reward_scale_);

    if (try_heuristic && reward_of_mask(inst_, heuristic) > best_) {
      FixedYResult res = evaluate_fixed_y(inst_, reach_, heuristic);
      if (res.feasible) consider_incumbent(heuristic, std::move(res.paths));
    }
    return bound;
  }

  void consider_incumbent(const std::vector<char>& mask, std::vector<ResourcePath> paths) {
    i64 value = reward_of_mask(inst_, mask);
    if (value <= best_) return;
    best_ = value;
    best_mask_ = mask;
    best_paths_ = std::move(paths);
  }

  const Instance& inst_;
  const Reachability& reach_;
  int n_;
  i64 reward_scale_ = 1;
  i64 best_ = 0;
  std::vector<char> best_mask_;
  std::vector<ResourcePath> best_paths_;
};

}  // namespace

ExactResult solve_exact_bb(const Instance& inst, const Reachability& reach,
                           std::optional<std::chrono::milliseconds> budget) {
  return BbSolver(inst, reach).run(budget);
}

}  // namespace mrmd
