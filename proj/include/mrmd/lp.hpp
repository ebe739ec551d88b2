#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "mrmd/reach.hpp"
#include "mrmd/types.hpp"

namespace mrmd {

struct LpRow {
  std::vector<std::pair<int, double>> coef;
  char op = '<';  // '<' (<=), '=', '>' (>=)
  double rhs = 0.0;
};

// Linear relaxation of the assignment program: one y variable per demand,
// per-type start/chaining/sink flow variables wherever the reachability
// matrices permit, stock rows, flow conservation rows, and service-coupling
// rows. All variables live in [0, 1].
struct LpRelaxation {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<int> y_var;                             // per demand
  std::map<std::tuple<int, int, int>, int> start_var;  // (type, start, demand)
  std::map<std::tuple<int, int, int>, int> arc_var;    // (type, from, to)
  std::map<std::pair<int, int>, int> sink_var;         // (type, demand)
};

LpRelaxation build_lp_relaxation(const Instance& inst, const Reachability& reach);

struct FractionalSolution {
  std::vector<double> y;  // per demand
  std::vector<double> x;  // per LP variable (y variables included)
  double objective = 0.0;
};

// Bounded-variable primal simplex (Dantzig pricing with a Bland fallback
// against cycling); basic values are refreshed from the original data at
// the end so the returned point satisfies the rows to ~1e-12.
FractionalSolution solve_lp(const LpRelaxation& lp);

}  // namespace mrmd
