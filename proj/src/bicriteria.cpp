#include "mrmd/bicriteria.hpp"

#include <algorithm>
#include <cmath>

#include "mrmd/exact.hpp"
#include "mrmd/schedule.hpp"

namespace mrmd {

namespace {

constexpr double kEps = 1e-9;
constexpr double kDust = 1e-12;

// First arc above the bound, in node-pair order.
std::map<std::pair<int, int>, double>::iterator find_excess(TypeFlow& f) {
  for (auto it = f.flow.begin(); it != f.flow.end(); ++it)
    if (it->second > 1.0 + kEps) return it;
  return f.flow.end();
}

double& arc_ref(TypeFlow& f, int from, int to) { return f.flow[{from, to}]; }

void decrease(TypeFlow& f, int from, int to, double delta) {
  auto it = f.flow.find({from, to});
  it->second -= delta;
  if (it->second <= kDust) f.flow.erase(it);
}

// First positive arc out of (or into) a node, lowest counterpart first.
std::pair<int, int> pick_out(const TypeFlow& f, int node) {
  for (const auto& [key, v] : f.flow)
    if (key.first == node && v > kDust) return key;
  throw std::logic_error("conservation violated: no outgoing flow");
}
std::pair<int, int> pick_in(const TypeFlow& f, int node) {
  for (const auto& [key, v] : f.flow)
    if (key.second == node && v > kDust) return key;
  throw std::logic_error("conservation violated: no incoming flow");
}

}  // namespace

TypeFlow rebound_flows(const TypeFlow& in, const std::vector<char>& keep_inflow,
                       const std::function<bool(int, int)>& arc_allowed) {
  TypeFlow f = in;
  auto shortcut = [&](int from, int to, double delta) {
    if (!f.is_sink(to) && !arc_allowed(from, to))
      throw TriangleViolation("shortcut arc is not admissible; travel metric violates the triangle inequality");
    arc_ref(f, from, to) += delta;
  };
  (void)keep_inflow;  // preserved structurally: excess arcs are never reduced below 1

  for (long guard = 0; guard < 100'000'000L; ++guard) {
    auto it = find_excess(f);
    if (it == f.flow.end()) return f;
    auto [i, j] = it->first;
    double x = it->second;

    if (f.is_start(i) && f.is_sink(j)) {
      it->second = 1.0;
    } else if (f.is_start(i)) {
      auto [j2, k] = pick_out(f, j);
      double delta = std::min(x - 1.0, f.flow.at({j2, k}));
      decrease(f, i, j, delta);
      decrease(f, j2, k, delta);
      shortcut(i, k, delta);
    } else if (f.is_sink(j)) {
      auto [h, i2] = pick_in(f, i);
      double delta = std::min(x - 1.0, f.flow.at({h, i2}));
      decrease(f, h, i2, delta);
      decrease(f, i, j, delta);
      shortcut(h, j, delta);
    } else {
      auto [h, i2] = pick_in(f, i);
      auto [j2, k] = pick_out(f, j);
      double delta = std::min({x - 1.0, f.flow.at({h, i2}), f.flow.at({j2, k})});
      decrease(f, h, i2, delta);
      decrease(f, i, j, delta);
      decrease(f, j2, k, delta);
      shortcut(h, k, delta);
    }
  }
  throw std::logic_error("flow rebounding failed to terminate");
}

TypeFlow extract_type_flow(const LpRelaxation& lp, const FractionalSolution& frac,
                           const TypeSubproblem& sub, double scale) {
  TypeFlow f;
  f.num_starts = static_cast<int>(sub.starts.size());
  f.num_demands = static_cast<int>(sub.demands.size());

  std::vector<int> local(frac.y.size(), -1);
  for (std::size_t i = 0; i < sub.demands.size(); ++i) local[sub.demands[i]] = static_cast<int>(i);

  auto put = [&](int from, int to, int var) {
    double v = frac.x[var] * scale;
    if (v > kDust) f.flow[{from, to}] += v;
  };
  for (std::size_t k = 0; k < sub.starts.size(); ++k)
    for (int i : sub.start_adj[k])
      put(static_cast<int>(k), f.num_starts + i,
          lp.start_var.at({sub.type, static_cast<int>(k), sub.demands[i]}));
  for (std::size_t i = 0; i < sub.demands.size(); ++i)
    for (int j : sub.adj[i])
      put(f.num_starts + static_cast<int>(i), f.num_starts + j,
          lp.arc_var.at({sub.type, sub.demands[i], sub.demands[j]}));
  for (std::size_t i = 0; i < sub.demands.size(); ++i)
    put(f.num_starts + static_cast<int>(i), f.sink(), lp.sink_var.at({sub.type, sub.demands[i]}));
  return f;
}

std::function<bool(int, int)> reachability_oracle(const Instance& inst, const TypeSubproblem& sub) {
  return [&inst, sub](int from, int to) {
    const int ns = static_cast<int>(sub.starts.size());
    if (to == ns + static_cast<int>(sub.demands.size())) return true;  // to sink
    const Demand& target = inst.demands[sub.demands[to - ns]];
    if (from < ns) {
      int s = sub.starts[from].location;
      return inst.travel_time(s, target.location) <= target.start;
    }
    const Demand& origin = inst.demands[sub.demands[from - ns]];
    return origin.start + origin.duration +
               inst.travel_time(origin.location, target.location) <=
           target.start;
  };
}

BicriteriaResult run_bicriteria(const Instance& inst, const Reachability& reach, int k,
                                double eps) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(eps > 0.0) || k * eps >= 1.0) throw std::invalid_argument("k*eps must be below 1");

  BicriteriaResult out;
  LpRelaxation lp = build_lp_relaxation(inst, reach);
  FractionalSolution frac = solve_lp(lp);
  out.lp_objective = frac.objective;
  out.y_lp = frac.y;

  const double threshold = 1.0 - k * eps;
  std::vector<char> keep(inst.demands.size(), 0);
  for (std::size_t d = 0; d < inst.demands.size(); ++d)
    if (frac.y[d] >= threshold - kEps) keep[d] = 1;

  Instance inflated = inst;
  for (auto& type : inflated.types)
    for (auto& s : type.starts)
      s.count = static_cast<i64>(std::ceil(static_cast<double>(s.count) / threshold - kEps));

  // Scaled LP flows stay feasible for the inflated stocks once rebounded;
  // run the rebounding per type to surface metric problems early.
  const double scale = 1.0 / threshold;
  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    TypeSubproblem sub = restrict_to_type(reach, inst, static_cast<int>(r));
    TypeFlow flow = extract_type_flow(lp, frac, sub, scale);
    std::vector<char> keep_local(sub.demands.size(), 0);
    for (std::size_t i = 0; i < sub.demands.size(); ++i) keep_local[i] = keep[sub.demands[i]];
    rebound_flows(flow, keep_local, reachability_oracle(inst, sub));
  }

  std::vector<ResourcePath> paths;
  out.inflated_stocks.resize(inst.types.size());
  out.used_units.resize(inst.types.size());
  for (std::size_t r = 0; r < inst.types.size(); ++r) {
    TypeSubproblem sub = restrict_to_type(reach, inflated, static_cast<int>(r));
    TypeServicePlan plan = solve_fixed_service(inflated, sub, keep, false);
    if (!plan.feasible)
      throw NotSatisfiableError(
          "kept demands cannot be served with the inflated stocks; the instance is not as "
          "satisfiable as assumed");
    out.inflated_stocks[r].resize(sub.starts.size());
    out.used_units[r].assign(sub.starts.size(), 0);
    for (std::size_t s = 0; s < sub.starts.size(); ++s)
      out.inflated_stocks[r][s] = sub.starts[s].count;
    for (const auto& p : plan.paths)
      if (!p.demands.empty()) ++out.used_units[r][p.start_index];
    auto rp = to_resource_paths(sub, plan.paths, static_cast<int>(r));
    paths.insert(paths.end(), rp.begin(), rp.end());
  }

  for (std::size_t d = 0; d < inst.demands.size(); ++d)
    if (keep[d]) {
      out.sol.served.push_back(static_cast<int>(d));
      out.sol.objective += inst.demands[d].reward;
    }
  out.sol.paths = std::move(paths);
  out.sol.certificate = "≥ " + std::to_string(k - 1) + "/" + std::to_string(k) + "·OPT_LP";
  return out;
}

}  // namespace mrmd
