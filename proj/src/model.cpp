#include "numrat/model.hpp"

#include <algorithm>
#include <sstream>

#include "numrat/errors.hpp"

namespace numrat {

void ResolutionGraph::add_vertex(Vertex v) {
  if (contains(v.id)) throw InputError("duplicate vertex id '" + v.id + "'");
  vertices_.push_back(std::move(v));
}

void ResolutionGraph::add_edge(const VertexId& a, const VertexId& b, int mult) {
  if (!contains(a) || !contains(b)) {
    throw InputError("edge " + a + "-" + b + " references an unknown vertex");
  }
  if (a == b) throw InputError("self-edge on vertex '" + a + "'");
  if (mult <= 0) throw InputError("edge " + a + "-" + b + " must have positive multiplicity");
  edges_[key(a, b)] += mult;
}

void ResolutionGraph::set_edge(const VertexId& a, const VertexId& b, int mult) {
  if (mult < 0) throw InputError("negative edge multiplicity");
  if (mult == 0) {
    edges_.erase(key(a, b));
    return;
  }
  if (!contains(a) || !contains(b) || a == b) throw InputError("invalid edge " + a + "-" + b);
  edges_[key(a, b)] = mult;
}

void ResolutionGraph::remove_vertex(const VertexId& id) {
  auto it = std::find_if(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.id == id; });
  if (it == vertices_.end()) throw InputError("unknown vertex id '" + id + "'");
  vertices_.erase(it);
  std::erase_if(edges_, [&](const auto& kv) { return kv.first.first == id || kv.first.second == id; });
}

bool ResolutionGraph::contains(const VertexId& id) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.id == id; });
}

const Vertex& ResolutionGraph::vertex(const VertexId& id) const {
  for (const auto& v : vertices_) {
    if (v.id == id) return v;
  }
  throw InputError("unknown vertex id '" + id + "'");
}

Vertex& ResolutionGraph::vertex(const VertexId& id) {
  return const_cast<Vertex&>(std::as_const(*this).vertex(id));
}

std::vector<VertexId> ResolutionGraph::ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.id);
  return out;
}

int ResolutionGraph::meet(const VertexId& a, const VertexId& b) const {
  if (a == b) return 0;
  auto it = edges_.find(key(a, b));
  return it == edges_.end() ? 0 : it->second;
}

std::vector<std::pair<VertexId, int>> ResolutionGraph::neighbours(const VertexId& id) const {
  std::vector<std::pair<VertexId, int>> out;
  for (const auto& v : vertices_) {
    const int m = meet(id, v.id);
    if (m > 0) out.emplace_back(v.id, m);
  }
  return out;
}

IntersectionForm ResolutionGraph::form() const {
  const std::size_t n = vertices_.size();
  std::vector<std::int64_t> entries(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = vertices_[i].self_intersection;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) entries[i * n + j] = meet(vertices_[i].id, vertices_[j].id);
    }
  }
  return IntersectionForm(ids(), std::move(entries));
}

ResolutionGraph ResolutionGraph::subgraph(const std::set<VertexId>& keep) const {
  ResolutionGraph g;
  for (const auto& v : vertices_) {
    if (keep.count(v.id)) g.add_vertex(v);
  }
  for (const auto& [k, m] : edges_) {
    if (keep.count(k.first) && keep.count(k.second)) g.edges_[k] = m;
  }
  return g;
}

int RamCurve::meet(const VertexId& v) const {
  auto it = meets.find(v);
  return it == meets.end() ? 0 : it->second;
}

int RamCurve::points(const VertexId& v) const {
  auto it = distinct_points.find(v);
  return it == distinct_points.end() ? meet(v) : it->second;
}

int RamCurve::cross(const CurveId& c) const {
  auto it = crosses.find(c);
  return it == crosses.end() ? 0 : it->second;
}

int OrderConfig::ram_index(const VertexId& v) const {
  auto it = exc_ram.find(v);
  return it == exc_ram.end() ? 1 : it->second;
}

const RamCurve& OrderConfig::curve(const CurveId& id) const {
  for (const auto& c : curves) {
    if (c.id == id) return c;
  }
  throw InputError("unknown curve id '" + id + "'");
}

RamCurve& OrderConfig::curve(const CurveId& id) { return const_cast<RamCurve&>(std::as_const(*this).curve(id)); }

bool OrderConfig::has_curve(const CurveId& id) const {
  return std::any_of(curves.begin(), curves.end(), [&](const RamCurve& c) { return c.id == id; });
}

void OrderConfig::normalize() {
  std::erase_if(exc_ram, [](const auto& kv) { return kv.second == 1; });
  for (auto& c : curves) {
    std::erase_if(c.meets, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(c.crosses, [](const auto& kv) { return kv.second == 0; });
    // distinct_points equal to the multiplicity carry no information.
    std::erase_if(c.distinct_points, [&](const auto& kv) { return kv.second == c.meet(kv.first); });
  }
}

bool operator==(const ResolutionGraph& a, const ResolutionGraph& b) {
  if (a.edges_ != b.edges_ || a.size() != b.size()) return false;
  auto by_id = [](const Vertex& x, const Vertex& y) { return x.id < y.id; };
  auto va = a.vertices_;
  auto vb = b.vertices_;
  std::sort(va.begin(), va.end(), by_id);
  std::sort(vb.begin(), vb.end(), by_id);
  return va == vb;
}

bool operator==(const OrderConfig& a, const OrderConfig& b) {
  OrderConfig x = a;
  OrderConfig y = b;
  x.normalize();
  y.normalize();
  return x.graph == y.graph && x.exc_ram == y.exc_ram && x.curves == y.curves && x.rank_root == y.rank_root;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].code << " at " << violations[i].location << ": " << violations[i].message;
  }
  return os.str();
}

namespace {

bool comparable(int e, int f) { return e % f == 0 || f % e == 0; }

void check_graph(const ResolutionGraph& graph, std::vector<Violation>& out) {
  bool signs_ok = true;
  for (const auto& v : graph.vertices()) {
    if (v.self_intersection >= 0) {
      out.push_back({"self_intersection", v.id, "self-intersection must be negative"});
      signs_ok = false;
    }
    if (v.genus < 0) out.push_back({"genus", v.id, "genus must be non-negative"});
  }
  if (!signs_ok || graph.empty()) return;
  const IntersectionForm form = graph.form();
  if (!is_negative_definite(form)) {
    out.push_back({"not_negative_definite", "graph", "intersection form is not negative definite"});
  }
  const auto ids = graph.ids();
  if (connected_components(form, {ids.begin(), ids.end()}).size() > 1) {
    out.push_back({"disconnected", "graph", "exceptional locus is not connected"});
  }
}

}  // namespace

ValidationReport validate(const OrderConfig& config) {
  std::vector<Violation> out;
  const int r = config.rank_root;
  if (r < 1) out.push_back({"rank", "rank", "rank root must be positive"});
  check_graph(config.graph, out);

  for (const auto& [v, e] : config.exc_ram) {
    if (!config.graph.contains(v)) {
      out.push_back({"unknown_vertex", v, "ramification index given for unknown vertex"});
      continue;
    }
    if (e < 1) {
      out.push_back({"ram_index", v, "ramification index must be >= 1"});
    } else if (r >= 1 && r % e != 0) {
      out.push_back({"divisibility", v, "ramification index " + std::to_string(e) + " does not divide r = " +
                                            std::to_string(r)});
    }
  }

  std::set<CurveId> seen;
  for (const auto& c : config.curves) {
    if (!seen.insert(c.id).second) out.push_back({"duplicate_curve", c.id, "duplicate curve id"});
    if (config.graph.contains(c.id)) out.push_back({"duplicate_curve", c.id, "curve id collides with a vertex id"});
    if (c.index < 2) {
      out.push_back({"ram_index", c.id, "ramification curve index must be >= 2"});
    } else if (r >= 1 && r % c.index != 0) {
      out.push_back({"divisibility", c.id, "ramification index " + std::to_string(c.index) +
                                               " does not divide r = " + std::to_string(r)});
    }
    for (const auto& [v, m] : c.meets) {
      if (!config.graph.contains(v)) {
        out.push_back({"unknown_vertex", c.id + "." + v, "curve meets an unknown vertex"});
        continue;
      }
      if (m < 0) out.push_back({"meets", c.id + "." + v, "intersection number must be non-negative"});
      const int pts = c.points(v);
      if (pts < 0 || pts > m || (m > 0 && pts == 0)) {
        out.push_back({"distinct_points", c.id + "." + v, "distinct point count inconsistent with multiplicity"});
      }
    }
    for (const auto& [v, pts] : c.distinct_points) {
      if (!c.meets.count(v)) out.push_back({"distinct_points", c.id + "." + v, "points given without multiplicity"});
    }
    for (const auto& [other, m] : c.crosses) {
      if (!config.has_curve(other) || other == c.id) {
        out.push_back({"unknown_curve", c.id + "." + other, "crossing with unknown curve"});
      } else if (config.curve(other).cross(c.id) != m) {
        out.push_back({"crosses", c.id + "." + other, "curve crossings are not symmetric"});
      }
      if (m < 0) out.push_back({"crosses", c.id + "." + other, "crossing number must be non-negative"});
    }
  }

  // Terminal node conditions: ramified components meet transversally and
  // their indices are comparable under divisibility.
  for (const auto& [k, m] : config.graph.edges()) {
    const int ea = config.ram_index(k.first);
    const int eb = config.ram_index(k.second);
    if (ea > 1 && eb > 1) {
      const std::string loc = k.first + "-" + k.second;
      if (!comparable(ea, eb)) {
        out.push_back({"node_divisibility", loc,
                       "indices " + std::to_string(ea) + " and " + std::to_string(eb) + " are not comparable"});
      }
      if (m != 1) out.push_back({"non_transverse", loc, "ramified curves meet with multiplicity " + std::to_string(m)});
    }
  }
  for (const auto& c : config.curves) {
    for (const auto& [v, m] : c.meets) {
      if (m <= 0 || !config.graph.contains(v)) continue;
      const int ev = config.ram_index(v);
      if (ev <= 1) continue;
      const std::string loc = c.id + "-" + v;
      if (c.index >= 2 && !comparable(ev, c.index)) {
        out.push_back({"node_divisibility", loc,
                       "indices " + std::to_string(c.index) + " and " + std::to_string(ev) + " are not comparable"});
      }
      if (c.points(v) != m) {
        out.push_back({"non_transverse", loc, "ramified curves meet with multiplicity " + std::to_string(m) +
                                                  " at " + std::to_string(c.points(v)) + " point(s)"});
      }
    }
    for (const auto& [other, m] : c.crosses) {
      if (m <= 0 || !config.has_curve(other) || other < c.id) continue;
      const int eo = config.curve(other).index;
      if (c.index >= 2 && eo >= 2 && !comparable(c.index, eo)) {
        out.push_back({"node_divisibility", c.id + "-" + other,
                       "indices " + std::to_string(c.index) + " and " + std::to_string(eo) + " are not comparable"});
      }
    }
  }
  return {std::move(out)};
}

void require_valid(const OrderConfig& config) {
  const auto report = validate(config);
  if (!report.ok()) throw InputError("invalid configuration: " + report.summary());
}

Rational delta_dot(const OrderConfig& config, const Divisor& e) {
  const IntersectionForm form = config.graph.form();
  Rational total;
  for (const auto& [v, idx] : config.exc_ram) {
    if (idx <= 1) continue;
    total += (Rational(1) - Rational(1, idx)) * pair(form, Divisor::curve(v), e);
  }
  for (const auto& c : config.curves) {
    Rational ce;
    for (const auto& [v, coeff] : e.coeffs()) ce += coeff * Rational(c.meet(v));
    total += (Rational(1) - Rational(1, c.index)) * ce;
  }
  return total;
}

Rational surface_canonical_dot(const ResolutionGraph& graph, const Divisor& e) {
  Rational total;
  for (const auto& [v, coeff] : e.coeffs()) {
    const Vertex& vx = graph.vertex(v);
    total += coeff * Rational(vx.weight() + 2 * vx.genus - 2);
  }
  return total;
}

Rational canonical_dot(const OrderConfig& config, const Divisor& e) {
  return surface_canonical_dot(config.graph, e) + delta_dot(config, e);
}

OrderConfig unramified(const OrderConfig& config) {
  OrderConfig out;
  out.graph = config.graph;
  out.rank_root = config.rank_root;
  return out;
}

}  // namespace numrat
