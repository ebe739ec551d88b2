#include "mrmd/generate.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace mrmd {

namespace {

// Thin wrapper over mt19937_64 that only consumes raw 64-bit draws, so
// generated instances are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  i64 uniform_int(i64 lo, i64 hi) {  // inclusive bounds
    return lo + static_cast<i64>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Inverse-CDF sample of the triangular(min, mode, max) distribution.
  i64 triangular_int(int min, int mode, int max) {
    if (max == min) return min;
    double u = uniform01();
    double split = static_cast<double>(mode - min) / (max - min);
    double x;
    if (u < split)
      x = min + std::sqrt(u * static_cast<double>(max - min) * (mode - min));
    else
      x = max - std::sqrt((1.0 - u) * static_cast<double>(max - min) * (max - mode));
    return static_cast<i64>(std::llround(x));
  }

 private:
  std::mt19937_64 engine_;
};

void check_config(const GeneratorConfig& c) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("generator config: " + msg); };
  if (c.num_types < 1) fail("num_types must be positive");
  if (c.num_demands < 0) fail("num_demands must be nonnegative");
  if (c.total_resources < 1) fail("total_resources must be positive");
  if (c.total_resources % c.num_types != 0)
    fail("total_resources must divide evenly across types");
  if (c.grid_width < 1 || c.grid_height < 1) fail("grid must be at least 1x1");
  if (c.horizon < 0) fail("horizon must be nonnegative");
  if (c.tri_min < 1) fail("tri_min must be at least 1");
  if (!(c.tri_min <= c.tri_mode && c.tri_mode <= c.tri_max))
    fail("triangular parameters must satisfy min <= mode <= max");
  if (!(c.membership_prob > 0.0 && c.membership_prob <= 1.0))
    fail("membership_prob must be in (0, 1]");
}

}  // namespace

Instance generate_random_instance(const GeneratorConfig& config, std::uint64_t seed) {
  check_config(config);
  Rng rng(seed);

  Instance inst;
  inst.grid = GridSpec{config.grid_width, config.grid_height};
  inst.travel.mode = TravelMode::GridL1;

  std::map<std::pair<int, int>, int> cell_index;
  auto location_at = [&](int x, int y) {
    auto it = cell_index.find({x, y});
    if (it != cell_index.end()) return it->second;
    int idx = static_cast<int>(inst.locations.size());
    inst.locations.push_back(
        {"L" + std::to_string(x) + "_" + std::to_string(y), std::make_pair(x, y)});
    cell_index.emplace(std::make_pair(x, y), idx);
    return idx;
  };
  auto random_cell = [&] {
    int x = static_cast<int>(rng.uniform_int(0, config.grid_width - 1));
    int y = static_cast<int>(rng.uniform_int(0, config.grid_height - 1));
    return location_at(x, y);
  };

  for (int d = 0; d < config.num_demands; ++d) {
    Demand dem;
    dem.id = "d" + std::to_string(d);
    dem.location = random_cell();
    dem.start = rng.uniform_int(0, config.horizon);
    dem.duration = rng.triangular_int(config.tri_min, config.tri_mode, config.tri_max);
    do {
      dem.required_types.clear();
      for (int r = 0; r < config.num_types; ++r)
        if (rng.bernoulli(config.membership_prob)) dem.required_types.push_back(r);
    } while (dem.required_types.empty());
    dem.reward = dem.duration * static_cast<i64>(dem.required_types.size()) *
                 (config.scaled_rewards ? 100 : 1);
    inst.demands.push_back(std::move(dem));
  }

  const int per_type = config.total_resources / config.num_types;
  int shared = config.shared_start ? random_cell() : -1;
  for (int r = 0; r < config.num_types; ++r) {
    ResourceTypeSpec type;
    type.id = "r" + std::to_string(r);
    if (config.shared_start) {
      type.starts.push_back({shared, per_type});
    } else {
      std::vector<int> cells(per_type);
      for (int u = 0; u < per_type; ++u) cells[u] = random_cell();
      for (int cell : cells) {  // aggregate in first-occurrence order
        bool found = false;
        for (auto& s : type.starts)
          if (s.location == cell) {
            ++s.count;
            found = true;
            break;
          }
        if (!found) type.starts.push_back({cell, 1});
      }
    }
    inst.types.push_back(std::move(type));
  }
  return inst;
}

namespace {

void check_n3dm(const N3dmInput& in) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("n3dm input: " + msg); };
  if (in.t < 1) fail("t must be positive");
  const std::size_t t = static_cast<std::size_t>(in.t);
  if (in.a.size() != t || in.b.size() != t || in.c.size() != t)
    fail("a, b, c must each have t entries");
  i64 sum = 0;
  for (std::size_t i = 0; i < t; ++i) {
    for (i64 v : {in.a[i], in.b[i], in.c[i]})
      if (v <= 0 || v >= in.d) fail("entries must lie strictly between 0 and d");
    sum += in.a[i] + in.b[i] + in.c[i];
  }
  if (sum != in.t * in.d) fail("entries must sum to t*d");
}

}  // namespace

Instance build_n3dm_instance(const N3dmInput& in) {
  check_n3dm(in);
  const i64 t = in.t;
  const i64 S = t * t + 2 * t;
  const i64 T = S + 2 * in.d + 1;
  auto A = [&](i64 i) { return i; };            // i in 1..t
  auto B = [&](i64 j) { return t + j; };        // j in 1..t
  auto C = [&](i64 i, i64 j) { return 2 * t + (i - 1) * t + j; };

  Instance inst;
  inst.locations.push_back({"origin", std::nullopt});
  inst.travel.mode = TravelMode::Matrix;
  inst.travel.matrix = {{0}};
  // type1 gets t resources, type0 the remaining t^2; labels follow the
  // construction so schedules can be traced against it.
  inst.types.push_back({"type1", {StartStock{0, t}}});
  inst.types.push_back({"type0", {StartStock{0, t * t}}});
  const int kType1 = 0, kType0 = 1;

  auto add = [&](std::string id, i64 u, i64 v, std::vector<int> req) {
    Demand d;
    d.id = std::move(id);
    d.location = 0;
    d.start = u;
    d.duration = v - u;
    d.required_types = std::move(req);
    d.reward = d.duration * static_cast<i64>(d.required_types.size());
    inst.demands.push_back(std::move(d));
  };
  auto tag = [](i64 i) { return std::to_string(i); };

  // Demands requiring both types.
  for (i64 i = 1; i <= t; ++i) add("A" + tag(i), 0, A(i), {kType1, kType0});
  for (i64 i = 1; i <= t; ++i)
    for (i64 j = 1; j <= t; ++j)
      add("AC" + tag(i) + "_" + tag(j), A(i), C(i, j), {kType1, kType0});
  for (i64 k = 1; k <= t; ++k)
    add("F" + tag(k), S + in.d - in.c[static_cast<std::size_t>(k - 1)], T, {kType1, kType0});

  // Demands requiring type0 only.
  for (i64 j = 1; j <= t; ++j)
    for (i64 copy = 1; copy <= t - 1; ++copy)
      add("B" + tag(j) + "_" + tag(copy), 0, B(j), {kType0});
  for (i64 i = 1; i <= t; ++i)
    for (i64 j = 1; j <= t; ++j)
      add("BC" + tag(i) + "_" + tag(j), B(j), C(i, j), {kType0});
  for (i64 i = 1; i <= t; ++i)
    for (i64 j = 1; j <= t; ++j)
      add("CS0_" + tag(i) + "_" + tag(j), C(i, j),
          S + in.a[static_cast<std::size_t>(i - 1)] + in.b[static_cast<std::size_t>(j - 1)],
          {kType0});
  for (i64 i = 1; i <= t; ++i)
    for (i64 j = 1; j <= t; ++j)
      add("SE" + tag(i) + "_" + tag(j),
          S + in.a[static_cast<std::size_t>(i - 1)] + in.b[static_cast<std::size_t>(j - 1)],
          T - 1, {kType0});
  for (i64 copy = 1; copy <= t * t - t; ++copy) add("E" + tag(copy), T - 1, T, {kType0});

  // Demands requiring type1 only.
  for (i64 i = 1; i <= t; ++i)
    for (i64 j = 1; j <= t; ++j)
      add("CS1_" + tag(i) + "_" + tag(j), C(i, j),
          S + in.a[static_cast<std::size_t>(i - 1)] + in.b[static_cast<std::size_t>(j - 1)],
          {kType1});

  return inst;
}

i64 n3dm_busy_reward(const N3dmInput& in) {
  check_n3dm(in);
  const i64 T = in.t * in.t + 2 * in.t + 2 * in.d + 1;
  return (in.t * in.t + in.t) * T;
}

}  // namespace mrmd
