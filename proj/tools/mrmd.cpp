#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mrmd/approx.hpp"
#include "mrmd/bench.hpp"
#include "mrmd/bicriteria.hpp"
#include "mrmd/costs.hpp"
#include "mrmd/exact.hpp"
#include "mrmd/generate.hpp"
#include "mrmd/io.hpp"
#include "mrmd/lp.hpp"
#include "mrmd/mcf.hpp"
#include "mrmd/reach.hpp"
#include "mrmd/schedule.hpp"

namespace {

using namespace mrmd;

constexpr int kOk = 0;
constexpr int kViolation = 1;

int report_violations(const std::vector<Violation>& violations) {
  for (const auto& v : violations) std::cerr << v.entity << ": " << v.message << "\n";
  return violations.empty() ? kOk : kViolation;
}

Instance load_checked(const std::string& path) {
  Instance inst = load_instance_file(path);
  auto violations = validate_instance(inst);
  if (!violations.empty()) {
    report_violations(violations);
    throw std::invalid_argument("instance '" + path + "' is invalid");
  }
  return inst;
}

void maybe_dump_reach(const std::string& path, const Reachability& reach) {
  if (path.empty()) return;
  std::ofstream os(path);
  dump_reachability(os, reach);
}

std::optional<std::chrono::milliseconds> budget_of(i64 ms) {
  if (ms < 0) return std::nullopt;
  return std::chrono::milliseconds(ms);
}

struct SolveOptions {
  std::string instance_path;
  std::string algo = "exact";
  std::string out;
  std::string dump_reach;
  bool grouped = false;
  bool costs = false;
  bool force = false;
  int k = 2;
  double eps = 0.1;
  i64 time_limit_ms = -1;
  int brute_cap = 16;
};

int run_solve(const SolveOptions& opt) {
  Instance inst = load_checked(opt.instance_path);
  if (opt.costs && !inst.costs && inst.travel.mode == TravelMode::Matrix)
    std::cerr << "note: no cost matrix in file; using travel times as costs\n";
  Reachability reach = build_reachability(inst);
  maybe_dump_reach(opt.dump_reach, reach);

  Solution sol;
  bool optimal_known = false;
  bool optimal = false;
  if (opt.algo == "exact") {
    optimal_known = true;
    if (opt.costs) {
      ExactCostsResult res = solve_exact_costs(inst, reach, budget_of(opt.time_limit_ms));
      sol = std::move(res.sol);
      optimal = res.optimal;
      std::cout << "gross=" << res.objective.gross << " cost=" << res.objective.travel_cost
                << "\n";
    } else {
      ExactResult res = solve_exact_bb(inst, reach, budget_of(opt.time_limit_ms));
      sol = std::move(res.sol);
      optimal = res.optimal;
    }
  } else if (opt.algo == "brute") {
    sol = solve_brute_force(inst, reach, opt.brute_cap);
    optimal_known = true;
    optimal = true;
  } else if (opt.algo == "a") {
    if (opt.costs) {
      AlgorithmACostsResult res = run_algorithm_a_costs(inst, reach, opt.force);
      sol = std::move(res.sol);
      std::cout << "gross=" << res.objective.gross << " cost=" << res.objective.travel_cost
                << "\n";
    } else {
      sol = run_algorithm_a(inst, reach);
    }
  } else if (opt.algo == "b") {
    sol = run_algorithm_b(inst, reach, greedy_color(build_conflict_graph(inst)));
  } else if (opt.algo == "c") {
    sol = run_algorithm_c(inst, reach, greedy_color(build_conflict_graph(inst)));
  } else if (opt.algo == "e") {
    sol = opt.grouped ? run_algorithm_e_grouped(inst) : run_algorithm_e(inst);
    optimal_known = true;
    optimal = true;
  } else if (opt.algo == "bicriteria") {
    BicriteriaResult res = run_bicriteria(inst, reach, opt.k, opt.eps);
    sol = std::move(res.sol);
    std::cout << "lp_objective=" << res.lp_objective << "\n";
    for (std::size_t r = 0; r < res.inflated_stocks.size(); ++r)
      for (std::size_t s = 0; s < res.inflated_stocks[r].size(); ++s)
        std::cout << "stock type=" << inst.types[r].id << " start=" << s
                  << " inflated=" << res.inflated_stocks[r][s]
                  << " used=" << res.used_units[r][s] << "\n";
  } else {
    throw CLI::ValidationError("--algo", "unknown algorithm '" + opt.algo + "'");
  }

  std::cout << "objective=" << sol.objective;
  if (optimal_known) std::cout << " optimal=" << (optimal ? "yes" : "no");
  if (sol.certificate) std::cout << " certificate=\"" << *sol.certificate << "\"";
  std::cout << " served=" << sol.served.size() << "/" << inst.demands.size() << "\n";
  if (!opt.out.empty()) save_text_file(opt.out, serialize_solution(inst, sol));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for multi-resource allocation with subset demand requests"};
  app.require_subcommand(1);

  // generate
  GeneratorConfig gen;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* cmd_gen = app.add_subcommand("generate", "Generate a random instance file");
  cmd_gen->add_option("--types", gen.num_types);
  cmd_gen->add_option("--demands", gen.num_demands);
  cmd_gen->add_option("--resources", gen.total_resources);
  cmd_gen->add_option("--grid-width", gen.grid_width);
  cmd_gen->add_option("--grid-height", gen.grid_height);
  cmd_gen->add_option("--horizon", gen.horizon);
  cmd_gen->add_option("--tri-min", gen.tri_min);
  cmd_gen->add_option("--tri-mode", gen.tri_mode);
  cmd_gen->add_option("--tri-max", gen.tri_max);
  cmd_gen->add_option("--prob", gen.membership_prob);
  cmd_gen->add_flag("--scaled", gen.scaled_rewards, "Multiply rewards by 100");
  cmd_gen->add_flag("--shared-start", gen.shared_start, "Place all resources at one location");
  cmd_gen->add_option("--seed", gen_seed);
  cmd_gen->add_option("--out", gen_out)->required();

  // validate
  std::string val_path, val_dump_reach;
  auto* cmd_val = app.add_subcommand("validate", "Validate an instance file");
  cmd_val->add_option("instance", val_path)->required();
  cmd_val->add_option("--dump-reach", val_dump_reach, "Write the reachability arcs to a file");

  // solve
  SolveOptions solve_opt;
  auto* cmd_solve = app.add_subcommand("solve", "Solve an instance");
  cmd_solve->add_option("instance", solve_opt.instance_path)->required();
  cmd_solve->add_option("--algo", solve_opt.algo,
                        "exact | brute | a | b | c | e | bicriteria");
  cmd_solve->add_flag("--grouped", solve_opt.grouped, "Group-by-start-time variant of e");
  cmd_solve->add_flag("--costs", solve_opt.costs, "Optimize reward minus travel cost");
  cmd_solve->add_flag("--force", solve_opt.force, "Run a with costs even without its guarantee");
  cmd_solve->add_option("--k", solve_opt.k, "Bicriteria k");
  cmd_solve->add_option("--eps", solve_opt.eps, "Bicriteria eps");
  cmd_solve->add_option("--time-limit", solve_opt.time_limit_ms, "Milliseconds; -1 = none");
  cmd_solve->add_option("--brute-cap", solve_opt.brute_cap);
  cmd_solve->add_option("--out", solve_opt.out, "Write the solution JSON here");
  cmd_solve->add_option("--dump-reach", solve_opt.dump_reach);

  // feasible
  std::string feas_path, feas_out, feas_dump_mcf, feas_dump_reach;
  auto* cmd_feas = app.add_subcommand("feasible", "Check whether every demand can be served");
  cmd_feas->add_option("instance", feas_path)->required();
  cmd_feas->add_option("--out", feas_out, "Write witness paths here when feasible");
  cmd_feas->add_option("--dump-mcf", feas_dump_mcf, "Write per-type networks (DIMACS) with this prefix");
  cmd_feas->add_option("--dump-reach", feas_dump_reach);

  // bench
  std::string bench_grid, bench_out;
  i64 bench_time_limit = -1;
  bool bench_sweep = false;
  SweepConfig sweep;
  auto* cmd_bench = app.add_subcommand("bench", "Run the benchmark harness");
  cmd_bench->add_option("--grid", bench_grid, "Grid config JSON file");
  cmd_bench->add_option("--out", bench_out)->required();
  cmd_bench->add_option("--time-limit", bench_time_limit, "Milliseconds per solve; -1 = none");
  cmd_bench->add_flag("--sweep", bench_sweep, "Resource-augmentation sweep instead of a grid");
  cmd_bench->add_option("--types", sweep.base.num_types);
  cmd_bench->add_option("--demands", sweep.base.num_demands);
  cmd_bench->add_option("--resources", sweep.base.total_resources);
  cmd_bench->add_option("--max-added", sweep.max_added);
  cmd_bench->add_option("--seed", sweep.seed);

  // n3dm
  N3dmInput n3dm;
  std::string n3dm_out;
  auto* cmd_n3dm = app.add_subcommand("n3dm", "Build a matching-reduction instance");
  cmd_n3dm->add_option("--t", n3dm.t)->required();
  cmd_n3dm->add_option("--d", n3dm.d)->required();
  cmd_n3dm->add_option("--a", n3dm.a)->required()->delimiter(',');
  cmd_n3dm->add_option("--b", n3dm.b)->required()->delimiter(',');
  cmd_n3dm->add_option("--c", n3dm.c)->required()->delimiter(',');
  cmd_n3dm->add_option("--out", n3dm_out)->required();

  try {
    app.parse(argc, argv);

    if (cmd_gen->parsed()) {
      Instance inst = generate_random_instance(gen, gen_seed);
      save_text_file(gen_out, serialize_instance(inst));
      std::cout << "wrote " << gen_out << " (" << inst.demands.size() << " demands, "
                << inst.types.size() << " types)\n";
      return kOk;
    }
    if (cmd_val->parsed()) {
      Instance inst = load_instance_file(val_path);
      auto violations = validate_instance(inst);
      if (violations.empty() && !val_dump_reach.empty())
        maybe_dump_reach(val_dump_reach, build_reachability(inst));
      if (violations.empty()) std::cout << "valid\n";
      return report_violations(violations);
    }
    if (cmd_solve->parsed()) return run_solve(solve_opt);
    if (cmd_feas->parsed()) {
      Instance inst = load_checked(feas_path);
      Reachability reach = build_reachability(inst);
      maybe_dump_reach(feas_dump_reach, reach);
      if (!feas_dump_mcf.empty()) {
        std::vector<char> all(inst.demands.size(), 1);
        for (std::size_t r = 0; r < inst.types.size(); ++r) {
          TypeSubproblem sub = restrict_to_type(reach, inst, static_cast<int>(r));
          ScheduleNet net = build_fixed_service_network(inst, sub, all, false);
          std::ofstream os(feas_dump_mcf + "." + inst.types[r].id + ".dimacs");
          dump_dimacs(os, net.net);
        }
      }
      FeasibilityWitness w = check_full_feasibility(inst, reach);
      std::cout << (w.feasible ? "feasible" : "infeasible") << "\n";
      if (w.feasible && !feas_out.empty()) {
        Solution sol;
        for (std::size_t d = 0; d < inst.demands.size(); ++d) sol.served.push_back(static_cast<int>(d));
        sol.paths = w.paths;
        sol.objective = inst.total_reward();
        save_text_file(feas_out, serialize_solution(inst, sol));
      }
      return w.feasible ? kOk : kViolation;
    }
    if (cmd_bench->parsed()) {
      std::ofstream os(bench_out);
      if (!os) throw std::runtime_error("cannot write '" + bench_out + "'");
      if (bench_sweep) {
        if (bench_time_limit >= 0) sweep.time_limit_ms = bench_time_limit;
        write_sweep_csv(os, run_bicriteria_sweep(sweep));
      } else {
        if (bench_grid.empty()) throw CLI::ValidationError("--grid", "required unless --sweep");
        std::ifstream in(bench_grid);
        if (!in) throw std::runtime_error("cannot open '" + bench_grid + "'");
        nlohmann::json spec = nlohmann::json::parse(in);
        BenchConfig config;
        for (const auto& c : spec.at("cells"))
          config.cells.push_back({c.at("types").get<int>(), c.at("demands").get<int>(),
                                  c.at("resources").get<int>()});
        for (const auto& s : spec.at("seeds")) config.seeds.push_back(s.get<std::uint64_t>());
        for (const auto& s : spec.at("solvers")) config.solvers.push_back(s.get<std::string>());
        if (spec.contains("time_limit_ms")) config.time_limit_ms = spec["time_limit_ms"].get<i64>();
        if (bench_time_limit >= 0) config.time_limit_ms = bench_time_limit;
        if (spec.contains("shared_start")) config.base.shared_start = spec["shared_start"].get<bool>();
        write_bench_csv(os, run_benchmark_suite(config));
      }
      std::cout << "wrote " << bench_out << "\n";
      return kOk;
    }
    if (cmd_n3dm->parsed()) {
      Instance inst = build_n3dm_instance(n3dm);
      save_text_file(n3dm_out, serialize_instance(inst));
      std::cout << "wrote " << n3dm_out << " (" << inst.demands.size()
                << " demands, busy reward " << n3dm_busy_reward(n3dm) << ")\n";
      return kOk;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kViolation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kViolation;
  } catch (const NotSatisfiableError& e) {
    std::cerr << e.what() << "\n";
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return 2;
}
