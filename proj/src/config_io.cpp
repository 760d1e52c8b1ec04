#include "numrat/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "numrat/errors.hpp"

namespace numrat {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) fail(where, "missing field '" + key + "'");
  return obj.at(key);
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) fail(where, "integer out of range");
  return static_cast<int>(x);
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

int optional_int(const json& obj, const std::string& key, int fallback, const std::string& where) {
  return obj.contains(key) ? as_int(obj.at(key), where + "." + key) : fallback;
}

const json& array_field(const json& obj, const std::string& key, const std::string& where) {
  static const json empty = json::array();
  if (!obj.contains(key)) return empty;
  const json& v = obj.at(key);
  if (!v.is_array()) fail(where + key, "expected an array");
  return v;
}

std::map<std::string, int> int_map(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected an object");
  std::map<std::string, int> out;
  for (const auto& [k, x] : v.items()) out[k] = as_int(x, where + "." + k);
  return out;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) fail(where, "unknown field '" + k + "'");
  }
}

}  // namespace

OrderConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("config", "expected a JSON object");
  check_keys(root, {"rank", "vertices", "edges", "curves"}, "config");

  OrderConfig c;
  const int rank = as_int(field(root, "rank", "config"), "rank");
  const int root_r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(std::max(rank, 0)))));
  if (rank < 1 || root_r * root_r != rank) fail("rank", "rank must be a perfect square (got " + std::to_string(rank) + ")");
  c.rank_root = root_r;

  const json& vertices = array_field(root, "vertices", "");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    if (!v.is_object()) fail(where, "expected an object");
    check_keys(v, {"id", "self_intersection", "genus", "ram_index"}, where);
    Vertex vx{as_string(field(v, "id", where), where + ".id"),
              as_int(field(v, "self_intersection", where), where + ".self_intersection"),
              optional_int(v, "genus", 0, where)};
    if (vx.self_intersection >= 0) fail(where + ".self_intersection", "must be negative");
    if (vx.genus < 0) fail(where + ".genus", "must be non-negative");
    if (c.graph.contains(vx.id)) fail(where + ".id", "duplicate vertex '" + vx.id + "'");
    const int e = optional_int(v, "ram_index", 1, where);
    if (e < 1) fail(where + ".ram_index", "must be >= 1");
    if (e > 1) c.exc_ram[vx.id] = e;
    c.graph.add_vertex(vx);
  }

  const json& edges = array_field(root, "edges", "");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& ed = edges[i];
    if (!ed.is_object()) fail(where, "expected an object");
    check_keys(ed, {"a", "b", "mult"}, where);
    const std::string a = as_string(field(ed, "a", where), where + ".a");
    const std::string b = as_string(field(ed, "b", where), where + ".b");
    const int mult = optional_int(ed, "mult", 1, where);
    if (!c.graph.contains(a)) fail(where + ".a", "unknown vertex '" + a + "'");
    if (!c.graph.contains(b)) fail(where + ".b", "unknown vertex '" + b + "'");
    if (a == b) fail(where, "self-edge on '" + a + "'");
    if (mult < 1) fail(where + ".mult", "must be positive");
    if (c.graph.meet(a, b) != 0) fail(where, "duplicate edge " + a + "-" + b);
    c.graph.add_edge(a, b, mult);
  }

  const json& curves = array_field(root, "curves", "");
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const std::string where = "curves[" + std::to_string(i) + "]";
    const json& cv = curves[i];
    if (!cv.is_object()) fail(where, "expected an object");
    check_keys(cv, {"id", "ram_index", "meets", "distinct_points", "crosses"}, where);
    RamCurve curve;
    curve.id = as_string(field(cv, "id", where), where + ".id");
    curve.index = as_int(field(cv, "ram_index", where), where + ".ram_index");
    if (cv.contains("meets")) curve.meets = int_map(cv.at("meets"), where + ".meets");
    if (cv.contains("distinct_points")) curve.distinct_points = int_map(cv.at("distinct_points"), where + ".distinct_points");
    if (cv.contains("crosses")) curve.crosses = int_map(cv.at("crosses"), where + ".crosses");
    for (const auto& [v, m] : curve.meets) {
      if (!c.graph.contains(v)) fail(where + ".meets." + v, "unknown vertex '" + v + "'");
      if (m < 0) fail(where + ".meets." + v, "must be non-negative");
    }
    for (const auto& [v, m] : curve.distinct_points) {
      if (!curve.meets.count(v)) fail(where + ".distinct_points." + v, "no matching entry in meets");
    }
    c.curves.push_back(std::move(curve));
  }
  c.normalize();
  return c;
}

OrderConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

nlohmann::ordered_json to_json(const OrderConfig& config) {
  nlohmann::ordered_json out;
  out["rank"] = config.rank_root * config.rank_root;
  out["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : config.graph.vertices()) {
    nlohmann::ordered_json jv;
    jv["id"] = v.id;
    jv["self_intersection"] = v.self_intersection;
    if (v.genus != 0) jv["genus"] = v.genus;
    if (config.ram_index(v.id) != 1) jv["ram_index"] = config.ram_index(v.id);
    out["vertices"].push_back(jv);
  }
  out["edges"] = nlohmann::ordered_json::array();
  for (const auto& [k, m] : config.graph.edges()) {
    nlohmann::ordered_json je;
    je["a"] = k.first;
    je["b"] = k.second;
    if (m != 1) je["mult"] = m;
    out["edges"].push_back(je);
  }
  out["curves"] = nlohmann::ordered_json::array();
  for (const auto& c : config.curves) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["ram_index"] = c.index;
    jc["meets"] = c.meets;
    if (!c.distinct_points.empty()) jc["distinct_points"] = c.distinct_points;
    if (!c.crosses.empty()) jc["crosses"] = c.crosses;
    out["curves"].push_back(jc);
  }
  return out;
}

Divisor parse_divisor(const std::string& text) {
  Divisor d;
  std::set<VertexId> seen;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0) throw InputError("divisor literal: expected id:coeff, got '" + item + "'");
    const VertexId id = item.substr(0, colon);
    if (!seen.insert(id).second) throw InputError("divisor literal: '" + id + "' listed twice");
    d.set(id, Rational::parse(item.substr(colon + 1)));
  }
  return d;
}

nlohmann::ordered_json to_json(const Divisor& d) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [id, c] : d.coeffs()) {
    if (c.is_integer()) {
      out[id] = c.to_int();
    } else {
      out[id] = c.str();
    }
  }
  return out;
}

}  // namespace numrat
