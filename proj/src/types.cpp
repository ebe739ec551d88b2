#include "mrmd/types.hpp"

#include <cstdlib>
#include <set>
#include <string>

namespace mrmd {

namespace {

i64 l1_distance(const Location& a, const Location& b) {
  const auto& [ax, ay] = *a.coords;
  const auto& [bx, by] = *b.coords;
  return std::abs(static_cast<i64>(ax) - bx) + std::abs(static_cast<i64>(ay) - by);
}

// Checks f_xy >= 0, f_xx = 0, and the triangle inequality.
void check_metric_matrix(const std::vector<std::vector<i64>>& m, std::size_t n,
                         const std::string& what, const std::vector<Location>& locs,
                         std::vector<Violation>& out) {
  if (m.size() != n) {
    out.push_back({what, "matrix has " + std::to_string(m.size()) + " rows, expected " +
                             std::to_string(n)});
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) {
      out.push_back({what, "row " + std::to_string(i) + " has " + std::to_string(m[i].size()) +
                               " entries, expected " + std::to_string(n)});
      return;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][i] != 0) out.push_back({what, "nonzero diagonal at " + locs[i].id});
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] < 0) out.push_back({what, "negative entry (" + locs[i].id + ", " + locs[j].id + ")"});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][k] > m[i][j] + m[j][k]) {
          out.push_back({what, "triangle inequality violated on (" + locs[i].id + ", " +
                                   locs[j].id + ", " + locs[k].id + ")"});
          return;  // one witness is enough
        }
}

}  // namespace

i64 ResourceTypeSpec::total_count() const {
  i64 total = 0;
  for (const auto& s : starts) total += s.count;
  return total;
}

i64 Instance::travel_time(int from, int to) const {
  if (from == to) return 0;
  if (travel.mode == TravelMode::Matrix) return travel.matrix[from][to];
  return l1_distance(locations[from], locations[to]);
}

i64 Instance::travel_cost(int from, int to) const {
  if (costs) return (*costs)[from][to];
  return travel_time(from, to);
}

i64 Instance::total_reward() const {
  i64 total = 0;
  for (const auto& d : demands) total += d.reward;
  return total;
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  const std::size_t n_loc = inst.locations.size();

  std::set<std::string> seen;
  for (const auto& l : inst.locations)
    if (!seen.insert(l.id).second) out.push_back({l.id, "duplicate location id"});
  seen.clear();
  for (const auto& t : inst.types)
    if (!seen.insert(t.id).second) out.push_back({t.id, "duplicate type id"});
  seen.clear();
  for (const auto& d : inst.demands)
    if (!seen.insert(d.id).second) out.push_back({d.id, "duplicate demand id"});

  for (const auto& l : inst.locations) {
    if (l.coords && inst.grid) {
      auto [x, y] = *l.coords;
      if (x < 0 || x >= inst.grid->width || y < 0 || y >= inst.grid->height)
        out.push_back({l.id, "coordinates outside grid bounds"});
    }
    if (inst.travel.mode == TravelMode::GridL1 && !l.coords)
      out.push_back({l.id, "grid_l1 travel requires coordinates on every location"});
  }

  for (const auto& t : inst.types) {
    if (t.starts.empty()) out.push_back({t.id, "type has no starting locations"});
    for (const auto& s : t.starts) {
      if (s.location < 0 || s.location >= static_cast<int>(n_loc))
        out.push_back({t.id, "start references unknown location index"});
      if (s.count < 1) out.push_back({t.id, "start stock must be at least 1"});
    }
    if (t.total_count() < 1) out.push_back({t.id, "type has no resources"});
  }

  for (const auto& d : inst.demands) {
    if (d.location < 0 || d.location >= static_cast<int>(n_loc))
      out.push_back({d.id, "demand references unknown location index"});
    if (d.duration < 1) out.push_back({d.id, "duration must be at least 1"});
    if (d.reward < 1) out.push_back({d.id, "reward must be positive"});
    if (d.required_types.empty()) out.push_back({d.id, "demand requires no resource types"});
    for (std::size_t k = 0; k < d.required_types.size(); ++k) {
      int r = d.required_types[k];
      if (r < 0 || r >= static_cast<int>(inst.types.size()))
        out.push_back({d.id, "demand requires unknown type index"});
      if (k > 0 && d.required_types[k - 1] >= r)
        out.push_back({d.id, "required types must be sorted and distinct"});
    }
  }

  if (inst.travel.mode == TravelMode::Matrix)
    check_metric_matrix(inst.travel.matrix, n_loc, "travel", inst.locations, out);
  else if (!inst.travel.matrix.empty())
    out.push_back({"travel", "grid_l1 mode must not carry a matrix"});
  if (inst.costs) check_metric_matrix(*inst.costs, n_loc, "costs", inst.locations, out);

  return out;
}

}  // namespace mrmd
