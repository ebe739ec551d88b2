#include "mrmd/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mrmd {

using nlohmann::json;

namespace {

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* key : allowed)
      if (it.key() == key) {
        ok = true;
        break;
      }
    if (!ok) throw ParseError("unknown field '" + it.key() + "' in " + where);
  }
}

const json& require_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

i64 as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError("expected integer for " + where);
  return v.get<i64>();
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError("expected string for " + where);
  return v.get<std::string>();
}

std::vector<std::vector<i64>> as_matrix(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError("expected matrix (array of arrays) for " + where);
  std::vector<std::vector<i64>> m;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& row = v[i];
    if (!row.is_array()) throw ParseError("expected array row in " + where);
    std::vector<i64> r;
    for (std::size_t j = 0; j < row.size(); ++j)
      r.push_back(as_int(row[j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("instance file must be a JSON object");
  reject_unknown_fields(root, {"version", "grid", "locations", "travel", "resource_types", "demands"},
                        "instance");

  if (as_int(require_field(root, "version", "instance"), "version") != 1)
    throw ParseError("unsupported instance version");

  Instance inst;
  if (auto it = root.find("grid"); it != root.end()) {
    reject_unknown_fields(*it, {"width", "height"}, "grid");
    inst.grid = GridSpec{static_cast<int>(as_int(require_field(*it, "width", "grid"), "grid.width")),
                         static_cast<int>(as_int(require_field(*it, "height", "grid"), "grid.height"))};
  }

  std::map<std::string, int> loc_index;
  const json& locs = require_field(root, "locations", "instance");
  if (!locs.is_array()) throw ParseError("locations must be an array");
  for (const json& l : locs) {
    reject_unknown_fields(l, {"id", "x", "y"}, "location");
    Location loc;
    loc.id = as_string(require_field(l, "id", "location"), "location.id");
    bool has_x = l.contains("x"), has_y = l.contains("y");
    if (has_x != has_y) throw ParseError("location '" + loc.id + "' must carry both x and y or neither");
    if (has_x)
      loc.coords = std::make_pair(static_cast<int>(as_int(l["x"], loc.id + ".x")),
                                  static_cast<int>(as_int(l["y"], loc.id + ".y")));
    if (loc_index.count(loc.id)) throw ValidationError("duplicate location id '" + loc.id + "'");
    loc_index[loc.id] = static_cast<int>(inst.locations.size());
    inst.locations.push_back(std::move(loc));
  }
  auto resolve_location = [&](const std::string& id, const std::string& where) {
    auto it = loc_index.find(id);
    if (it == loc_index.end())
      throw ValidationError("unknown location id '" + id + "' in " + where);
    return it->second;
  };

  const json& travel = require_field(root, "travel", "instance");
  reject_unknown_fields(travel, {"mode", "f", "c"}, "travel");
  std::string mode = as_string(require_field(travel, "mode", "travel"), "travel.mode");
  if (mode == "grid_l1") {
    inst.travel.mode = TravelMode::GridL1;
    if (travel.contains("f") || travel.contains("c"))
      throw ParseError("grid_l1 travel must not carry matrices");
  } else if (mode == "matrix") {
    inst.travel.mode = TravelMode::Matrix;
    inst.travel.matrix = as_matrix(require_field(travel, "f", "travel"), "travel.f");
    if (travel.contains("c")) inst.costs = as_matrix(travel["c"], "travel.c");
  } else {
    throw ParseError("travel.mode must be 'grid_l1' or 'matrix'");
  }

  std::map<std::string, int> type_index;
  const json& types = require_field(root, "resource_types", "instance");
  if (!types.is_array()) throw ParseError("resource_types must be an array");
  for (const json& t : types) {
    reject_unknown_fields(t, {"id", "starts"}, "resource type");
    ResourceTypeSpec type;
    type.id = as_string(require_field(t, "id", "resource type"), "type.id");
    const json& starts = require_field(t, "starts", "type '" + type.id + "'");
    if (!starts.is_array()) throw ParseError("starts must be an array in type '" + type.id + "'");
    for (const json& s : starts) {
      reject_unknown_fields(s, {"location", "count"}, "start of type '" + type.id + "'");
      StartStock st;
      st.location = resolve_location(as_string(require_field(s, "location", "start"), "start.location"),
                                     "type '" + type.id + "'");
      st.count = as_int(require_field(s, "count", "start"), "start.count");
      type.starts.push_back(st);
    }
    if (type_index.count(type.id)) throw ValidationError("duplicate type id '" + type.id + "'");
    type_index[type.id] = static_cast<int>(inst.types.size());
    inst.types.push_back(std::move(type));
  }

  const json& demands = require_field(root, "demands", "instance");
  if (!demands.is_array()) throw ParseError("demands must be an array");
  for (const json& d : demands) {
    reject_unknown_fields(d, {"id", "location", "start", "duration", "reward", "requires"}, "demand");
    Demand dem;
    dem.id = as_string(require_field(d, "id", "demand"), "demand.id");
    dem.location = resolve_location(as_string(require_field(d, "location", "demand"), "demand.location"),
                                    "demand '" + dem.id + "'");
    dem.start = as_int(require_field(d, "start", "demand"), dem.id + ".start");
    dem.duration = as_int(require_field(d, "duration", "demand"), dem.id + ".duration");
    dem.reward = as_int(require_field(d, "reward", "demand"), dem.id + ".reward");
    const json& req = require_field(d, "requires", "demand '" + dem.id + "'");
    if (!req.is_array()) throw ParseError("requires must be an array in demand '" + dem.id + "'");
    for (const json& r : req) {
      std::string rid = as_string(r, dem.id + ".requires");
      auto it = type_index.find(rid);
      if (it == type_index.end())
        throw ValidationError("unknown type id '" + rid + "' in demand '" + dem.id + "'");
      dem.required_types.push_back(it->second);
    }
    std::sort(dem.required_types.begin(), dem.required_types.end());
    dem.required_types.erase(std::unique(dem.required_types.begin(), dem.required_types.end()),
                             dem.required_types.end());
    inst.demands.push_back(std::move(dem));
  }

  return inst;
}

std::string serialize_instance(const Instance& inst) {
  if (inst.costs && inst.travel.mode == TravelMode::GridL1)
    throw std::invalid_argument("cost matrices are only representable with matrix travel");

  json root;
  root["version"] = 1;
  if (inst.grid) root["grid"] = {{"width", inst.grid->width}, {"height", inst.grid->height}};

  json locs = json::array();
  for (const auto& l : inst.locations) {
    json jl{{"id", l.id}};
    if (l.coords) {
      jl["x"] = l.coords->first;
      jl["y"] = l.coords->second;
    }
    locs.push_back(std::move(jl));
  }
  root["locations"] = std::move(locs);

  if (inst.travel.mode == TravelMode::GridL1) {
    root["travel"] = {{"mode", "grid_l1"}};
  } else {
    json t{{"mode", "matrix"}, {"f", inst.travel.matrix}};
    if (inst.costs) t["c"] = *inst.costs;
    root["travel"] = std::move(t);
  }

  json types = json::array();
  for (const auto& t : inst.types) {
    json starts = json::array();
    for (const auto& s : t.starts)
      starts.push_back({{"location", inst.locations[s.location].id}, {"count", s.count}});
    types.push_back({{"id", t.id}, {"starts", std::move(starts)}});
  }
  root["resource_types"] = std::move(types);

  json demands = json::array();
  for (const auto& d : inst.demands) {
    json req = json::array();
    for (int r : d.required_types) req.push_back(inst.types[r].id);
    demands.push_back({{"id", d.id},
                       {"location", inst.locations[d.location].id},
                       {"start", d.start},
                       {"duration", d.duration},
                       {"reward", d.reward},
                       {"requires", std::move(req)}});
  }
  root["demands"] = std::move(demands);

  return root.dump(2) + "\n";
}

std::string serialize_solution(const Instance& inst, const Solution& sol) {
  json root;
  root["objective"] = sol.objective;
  json served = json::array();
  for (int d : sol.served) served.push_back(inst.demands[d].id);
  root["served"] = std::move(served);
  json paths = json::array();
  for (const auto& p : sol.paths) {
    json demands = json::array();
    for (int d : p.demands) demands.push_back(inst.demands[d].id);
    paths.push_back({{"type", inst.types[p.type].id},
                     {"unit", p.unit},
                     {"start_location", inst.locations[p.start_location].id},
                     {"demands", std::move(demands)}});
  }
  root["paths"] = std::move(paths);
  if (sol.certificate) root["certificate"] = *sol.certificate;
  return root.dump(2) + "\n";
}

Solution parse_solution(const Instance& inst, const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  reject_unknown_fields(root, {"objective", "served", "paths", "certificate"}, "solution");

  std::map<std::string, int> demand_index, type_index, loc_index;
  for (std::size_t i = 0; i < inst.demands.size(); ++i) demand_index[inst.demands[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < inst.types.size(); ++i) type_index[inst.types[i].id] = static_cast<int>(i);
  for (std::size_t i = 0; i < inst.locations.size(); ++i) loc_index[inst.locations[i].id] = static_cast<int>(i);
  auto lookup = [](const std::map<std::string, int>& m, const std::string& id, const char* what) {
    auto it = m.find(id);
    if (it == m.end()) throw ValidationError(std::string("unknown ") + what + " id '" + id + "'");
    return it->second;
  };

  Solution sol;
  sol.objective = as_int(require_field(root, "objective", "solution"), "objective");
  for (const json& s : require_field(root, "served", "solution"))
    sol.served.push_back(lookup(demand_index, as_string(s, "served"), "demand"));
  std::sort(sol.served.begin(), sol.served.end());
  for (const json& p : require_field(root, "paths", "solution")) {
    reject_unknown_fields(p, {"type", "unit", "start_location", "demands"}, "path");
    ResourcePath rp;
    rp.type = lookup(type_index, as_string(require_field(p, "type", "path"), "path.type"), "type");
    rp.unit = static_cast<int>(as_int(require_field(p, "unit", "path"), "path.unit"));
    rp.start_location =
        lookup(loc_index, as_string(require_field(p, "start_location", "path"), "path.start_location"),
               "location");
    for (const json& d : require_field(p, "demands", "path"))
      rp.demands.push_back(lookup(demand_index, as_string(d, "path.demands"), "demand"));
    sol.paths.push_back(std::move(rp));
  }
  if (auto it = root.find("certificate"); it != root.end())
    sol.certificate = as_string(*it, "certificate");
  return sol;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace mrmd
