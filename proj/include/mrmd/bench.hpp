#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mrmd/generate.hpp"
#include "mrmd/types.hpp"

namespace mrmd {

struct BenchCell {
  int types = 2;
  int demands = 100;
  int resources = 10;
};

struct BenchConfig {
  std::vector<BenchCell> cells;
  std::vector<std::uint64_t> seeds;      // one instance per (cell, seed)
  std::vector<std::string> solvers;      // exact, brute, a, b, c, e, bicriteria
  std::optional<i64> time_limit_ms;
  GeneratorConfig base;                  // cell fields override R/D/L
  int brute_cap = 16;
  int bicriteria_k = 2;
  double bicriteria_eps = 0.1;
};

struct BenchRow {
  BenchCell cell;
  std::string seed;  // seed number, or "avg"
  std::string solver;
  i64 objective = 0;
  bool optimal = false;
  double wall_ms = 0.0;
};

// Runs every (cell, seed, solver) combination and appends one averaged row
// per (cell, solver). Rows are deterministic given the seeds except for the
// wall-time column.
std::vector<BenchRow> run_benchmark_suite(const BenchConfig& config);

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

// Resource-augmentation sweep: adds 0..max_added resources to every type
// (at each type's first starting location) and records the exact objective.
struct SweepConfig {
  GeneratorConfig base;
  std::uint64_t seed = 1;
  int max_added = 15;
  std::optional<i64> time_limit_ms;
};

struct SweepRow {
  int added = 0;
  i64 objective = 0;
  bool optimal = false;
};

std::vector<SweepRow> run_bicriteria_sweep(const SweepConfig& config);
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace mrmd
