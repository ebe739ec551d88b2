#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mrmd {

using i64 = std::int64_t;

struct GridSpec {
  int width = 0;
  int height = 0;
  bool operator==(const GridSpec&) const = default;
};

struct Location {
  std::string id;
  std::optional<std::pair<int, int>> coords;
  bool operator==(const Location&) const = default;
};

// A demand needs one unit of every type in required_types, simultaneously,
// at its location during [start, start + duration).
struct Demand {
  std::string id;
  int location = 0;  // index into Instance::locations
  i64 start = 0;
  i64 duration = 1;
  i64 reward = 1;
  std::vector<int> required_types;  // sorted, nonempty
  bool operator==(const Demand&) const = default;
};

struct StartStock {
  int location = 0;
  i64 count = 0;
  bool operator==(const StartStock&) const = default;
};

struct ResourceTypeSpec {
  std::string id;
  std::vector<StartStock> starts;
  i64 total_count() const;
  bool operator==(const ResourceTypeSpec&) const = default;
};

enum class TravelMode { GridL1, Matrix };

struct TravelMetric {
  TravelMode mode = TravelMode::GridL1;
  // Square matrix over all locations; used in Matrix mode only.
  std::vector<std::vector<i64>> matrix;
  bool operator==(const TravelMetric&) const = default;
};

struct Instance {
  std::optional<GridSpec> grid;
  std::vector<Location> locations;
  std::vector<ResourceTypeSpec> types;
  std::vector<Demand> demands;
  TravelMetric travel;
  // Optional travel-cost matrix; when absent, costs default to travel times.
  std::optional<std::vector<std::vector<i64>>> costs;

  i64 travel_time(int from, int to) const;
  i64 travel_cost(int from, int to) const;
  i64 total_reward() const;
  bool operator==(const Instance&) const = default;
};

struct Violation {
  std::string entity;
  std::string message;
};

// Returns every invariant violation; an empty list means the instance is
// valid. Violations are data, not failures.
std::vector<Violation> validate_instance(const Instance& inst);

struct ResourcePath {
  int type = 0;
  int unit = 0;
  int start_location = 0;  // location index
  std::vector<int> demands;
  bool operator==(const ResourcePath&) const = default;
};

struct Solution {
  std::vector<int> served;  // sorted demand indices
  std::vector<ResourcePath> paths;
  i64 objective = 0;
  std::optional<std::string> certificate;
};

}  // namespace mrmd
