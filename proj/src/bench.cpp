#include "mrmd/bench.hpp"

#include <chrono>
#include <stdexcept>

#include "mrmd/approx.hpp"
#include "mrmd/bicriteria.hpp"
#include "mrmd/exact.hpp"
#include "mrmd/reach.hpp"

namespace mrmd {

namespace {

std::optional<std::chrono::milliseconds> to_budget(const std::optional<i64>& ms) {
  if (!ms) return std::nullopt;
  return std::chrono::milliseconds(*ms);
}

std::pair<i64, bool> run_solver(const std::string& name, const Instance& inst,
                                const Reachability& reach, const BenchConfig& config) {
  if (name == "exact") {
    ExactResult res = solve_exact_bb(inst, reach, to_budget(config.time_limit_ms));
    return {res.sol.objective, res.optimal};
  }
  if (name == "brute") {
    Solution sol = solve_brute_force(inst, reach, config.brute_cap);
    return {sol.objective, true};
  }
  if (name == "a") return {run_algorithm_a(inst, reach).objective, false};
  if (name == "b") {
    Coloring col = greedy_color(build_conflict_graph(inst));
    return {run_algorithm_b(inst, reach, col).objective, false};
  }
  if (name == "c") {
    Coloring col = greedy_color(build_conflict_graph(inst));
    return {run_algorithm_c(inst, reach, col).objective, false};
  }
  if (name == "e") return {run_algorithm_e(inst).objective, true};
  if (name == "bicriteria") {
    BicriteriaResult res =
        run_bicriteria(inst, reach, config.bicriteria_k, config.bicriteria_eps);
    return {res.sol.objective, false};
  }
  throw std::invalid_argument("unknown solver '" + name + "'");
}

}  // namespace

std::vector<BenchRow> run_benchmark_suite(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (const BenchCell& cell : config.cells) {
    GeneratorConfig gen = config.base;
    gen.num_types = cell.types;
    gen.num_demands = cell.demands;
    gen.total_resources = cell.resources;
    for (const std::string& solver : config.solvers) {
      i64 objective_sum = 0;
      double wall_sum = 0.0;
      bool all_optimal = true;
      for (std::uint64_t seed : config.seeds) {
        Instance inst = generate_random_instance(gen, seed);
        Reachability reach = build_reachability(inst);
        auto t0 = std::chrono::steady_clock::now();
        auto [objective, optimal] = run_solver(solver, inst, reach, config);
        double wall =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        rows.push_back({cell, std::to_string(seed), solver, objective, optimal, wall});
        objective_sum += objective;
        wall_sum += wall;
        all_optimal = all_optimal && optimal;
      }
      if (!config.seeds.empty())
        rows.push_back({cell, "avg", solver,
                        objective_sum / static_cast<i64>(config.seeds.size()), all_optimal,
                        wall_sum / static_cast<double>(config.seeds.size())});
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "types,demands,resources,seed,solver,objective,optimal,wall_ms\n";
  for (const auto& r : rows)
    os << r.cell.types << ',' << r.cell.demands << ',' << r.cell.resources << ',' << r.seed
       << ',' << r.solver << ',' << r.objective << ',' << (r.optimal ? 1 : 0) << ',' << r.wall_ms
       << '\n';
}

std::vector<SweepRow> run_bicriteria_sweep(const SweepConfig& config) {
  Instance base = generate_random_instance(config.base, config.seed);
  std::vector<SweepRow> rows;
  for (int added = 0; added <= config.max_added; ++added) {
    Instance inst = base;
    for (auto& type : inst.types) type.starts.front().count += added;
    Reachability reach = build_reachability(inst);
    ExactResult res = solve_exact_bb(inst, reach, to_budget(config.time_limit_ms));
    rows.push_back({added, res.sol.objective, res.optimal});
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "added_resources,objective,optimal\n";
  for (const auto& r : rows) os << r.added << ',' << r.objective << ',' << (r.optimal ? 1 : 0) << '\n';
}

}  // namespace mrmd
