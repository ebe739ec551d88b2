#pragma once

#include <vector>

#include "mrmd/reach.hpp"
#include "mrmd/types.hpp"

namespace mrmd {

// Conflict graph over the distinct requirement subsets occurring in the
// instance: nodes are subsets, edges join intersecting subsets, and each
// node carries the bucket of demands requesting exactly that subset.
struct ConflictGraph {
  std::vector<std::vector<int>> node_types;  // sorted type indices per node
  std::vector<std::vector<int>> adj;         // sorted neighbor lists
  std::vector<std::vector<int>> buckets;     // demands per node
  std::vector<int> node_of_demand;
};

ConflictGraph build_conflict_graph(const Instance& inst);

// Either a proper coloring (fold = 1) or an a:b-coloring (fold = b): each
// node carries `fold` distinct colors from 0..num_colors-1 and adjacent
// nodes' color sets are disjoint.
struct Coloring {
  int num_colors = 0;
  int fold = 1;
  std::vector<std::vector<int>> node_colors;  // sorted per node
};

// Largest-degree-first greedy proper coloring; uses at most max degree + 1
// colors.
Coloring greedy_color(const ConflictGraph& g);

// Iterates the types in increasing-stock order, solves the single-type
// problem over the not-yet-removed demands, and keeps the best type; every
// type with at least as many resources replicates the winning schedule.
// Requires one shared starting location. Certified within a factor |R|.
Solution run_algorithm_a(const Instance& inst, const Reachability& reach);

// Per color, solves each same-colored bucket with the bucket's
// smallest-stock type and keeps the best color; the other types in each
// bucket replicate its schedule. Certified within the coloring's color
// count (or a/b for a fold-b coloring).
Solution run_algorithm_b(const Instance& inst, const Reachability& reach, const Coloring& coloring);
Solution run_algorithm_c(const Instance& inst, const Reachability& reach, const Coloring& coloring);

// Exact polynomial special case: zero travel times, one shared start time,
// each demand requests one type or all of them, durations immaterial (a
// resource serves at most one demand).
Solution run_algorithm_e(const Instance& inst);

// Variant for unit service times: groups demands by start time and runs the
// special case independently per group with full stocks.
Solution run_algorithm_e_grouped(const Instance& inst);

}  // namespace mrmd
