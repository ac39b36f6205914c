#include "dirsub/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace dirsub {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string vec_to_json(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s + "]";
}

void grid_write(const SphereGrid& grid, std::string& out) {
  if (grid.n == 1) {
    out += R"({"n":1,"type":"s0"})";
  } else if (grid.n == 2) {
    out += R"({"n":2,"type":"circle","K":)" + std::to_string(grid.resolution) + "}";
  } else {
    out += R"({"n":3,"type":"sphere","polar":)" + std::to_string(grid.polar) +
           R"(,"azimuth":)" + std::to_string(grid.azimuth) + R"(,"sub_K":)" +
           std::to_string(grid.sub->resolution) + "}";
  }
}

void ds_write(const DirectedSet& a, std::string& out) {
  if (a.dimension() == 1) {
    out += R"({"n":1,"neg":)" + format_double(a.interval().neg) + R"(,"pos":)" +
           format_double(a.interval().pos) + "}";
    return;
  }
  out += R"({"n":)" + std::to_string(a.dimension()) + R"(,"grid":)";
  grid_write(*a.grid(), out);
  out += R"(,"entries":[)";
  const auto& dirs = a.grid()->directions;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (i) out += ",";
    out += R"({"l":)" + vec_to_json(dirs[i]) + R"(,"support":)" +
           format_double(a.entries()[i].support) + R"(,"lower":)";
    ds_write(a.entries()[i].lower, out);
    out += "}";
  }
  out += "]}";
}

GridPtr grid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n"))
    throw FormatError("grid: malformed document");
  int n = j.at("n").get<int>();
  if (n == 1) return make_sphere_grid(1, 0);
  if (n == 2) return make_sphere_grid(2, j.at("K").get<int>());
  if (n == 3)
    return make_sphere_grid3(j.at("polar").get<int>(), j.at("azimuth").get<int>(),
                             j.at("sub_K").get<int>());
  throw FormatError("grid: unsupported dimension");
}

DirectedSet ds_from_json(const json& j, const GridPtr& expected_grid) {
  if (!j.is_object() || !j.contains("n"))
    throw FormatError("directed set: malformed document");
  int n = j.at("n").get<int>();
  if (n == 1)
    return DirectedSet(di_raw(j.at("neg").get<double>(), j.at("pos").get<double>()));
  GridPtr grid = expected_grid ? expected_grid : grid_from_json(j.at("grid"));
  if (grid->n != n) throw FormatError("directed set: grid dimension mismatch");
  const auto& entries_json = j.at("entries");
  if (!entries_json.is_array() || entries_json.size() != grid->directions.size())
    throw FormatError("directed set: entry count does not match declared grid");
  std::vector<DirectedSet::Entry> entries;
  entries.reserve(entries_json.size());
  for (std::size_t i = 0; i < entries_json.size(); ++i) {
    const auto& e = entries_json[i];
    const auto& l = e.at("l");
    if (l.size() != grid->directions[i].size())
      throw FormatError("directed set: direction dimension mismatch");
    for (std::size_t c = 0; c < l.size(); ++c)
      if (std::abs(l[c].get<double>() - grid->directions[i][c]) > 1e-12)
        throw FormatError("directed set: direction does not match declared grid");
    entries.push_back(DirectedSet::Entry{ds_from_json(e.at("lower"), grid->sub),
                       e.at("support").get<double>()});
  }
  return DirectedSet(grid, std::move(entries));
}

}  // namespace

std::string ds_serialize(const DirectedSet& a) {
  std::string out;
  ds_write(a, out);
  return out;
}

DirectedSet ds_deserialize(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("directed set: ") + e.what());
  }
  try {
    return ds_from_json(j, nullptr);
  } catch (const json::exception& e) {
    throw FormatError(std::string("directed set: ") + e.what());
  }
}

std::string grid_serialize(const SphereGrid& grid) {
  std::string out;
  grid_write(grid, out);
  return out;
}

GridPtr grid_deserialize_obj(const std::string& json_text) {
  try {
    return grid_from_json(json::parse(json_text));
  } catch (const json::exception& e) {
    throw FormatError(std::string("grid: ") + e.what());
  }
}

std::string polytope_serialize(const Polytope& c) {
  std::string out = R"({"n":)" + std::to_string(c.n) + R"(,"vertices":[)";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    if (i) out += ",";
    out += vec_to_json(c.vertices[i]);
  }
  return out + "]}";
}

Polytope polytope_deserialize(const std::string& json_text) {
  try {
    json j = json::parse(json_text);
    int n = j.at("n").get<int>();
    std::vector<Vec> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<Vec>());
    return make_polytope(n, std::move(vertices));
  } catch (const json::exception& e) {
    throw FormatError(std::string("polytope: ") + e.what());
  } catch (const DimensionError& e) {
    throw FormatError(std::string("polytope: ") + e.what());
  }
}

std::string certificate_serialize(const MCertificate& cert) {
  std::string out = R"({"M":)" + format_double(cert.m) + R"(,"levels":[)";
  for (std::size_t i = 0; i < cert.level_max.size(); ++i) {
    if (i) out += ",";
    out += format_double(cert.level_max[i]);
  }
  out += R"(],"continuity_max_jump":)" + format_double(cert.continuity_max_jump) +
         R"(,"continuity_flag":)" + (cert.continuity_flag ? "true" : "false") + "}";
  return out;
}

}  // namespace dirsub
