#include "numrat/birational.hpp"

#include <algorithm>

#include "numrat/errors.hpp"

namespace numrat {

namespace {

ComponentRef resolve(const OrderConfig& config, const std::string& id) {
  if (config.graph.contains(id)) return {ComponentRef::Kind::vertex, id};
  if (config.has_curve(id)) return {ComponentRef::Kind::curve, id};
  throw InputError("unknown component '" + id + "'");
}

int ram_index_of(const OrderConfig& config, const ComponentRef& c) {
  return c.kind == ComponentRef::Kind::vertex ? config.ram_index(c.id) : config.curve(c.id).index;
}

int intersection(const OrderConfig& config, const ComponentRef& a, const ComponentRef& b) {
  using K = ComponentRef::Kind;
  if (a.kind == K::vertex && b.kind == K::vertex) return config.graph.meet(a.id, b.id);
  if (a.kind == K::curve && b.kind == K::curve) return config.curve(a.id).cross(b.id);
  const auto& curve = config.curve(a.kind == K::curve ? a.id : b.id);
  return curve.meet(a.kind == K::vertex ? a.id : b.id);
}

void set_points(RamCurve& curve, const VertexId& v, int meets, int points) {
  if (meets == 0) {
    curve.meets.erase(v);
    curve.distinct_points.erase(v);
    return;
  }
  curve.meets[v] = meets;
  if (points == meets) {
    curve.distinct_points.erase(v);
  } else {
    curve.distinct_points[v] = points;
  }
}

// Changes the intersection number of a and b by delta. The number of distinct
// meeting points moves by one in the same direction.
void shift_intersection(OrderConfig& config, const ComponentRef& a, const ComponentRef& b, int delta) {
  using K = ComponentRef::Kind;
  const int now = intersection(config, a, b);
  const int next = now + delta;
  if (next < 0) {
    throw PreconditionError("components '" + a.id + "' and '" + b.id + "' do not meet at the centre");
  }
  if (a.kind == K::vertex && b.kind == K::vertex) {
    config.graph.set_edge(a.id, b.id, next);
  } else if (a.kind == K::curve && b.kind == K::curve) {
    auto& ca = config.curve(a.id);
    auto& cb = config.curve(b.id);
    if (next == 0) {
      ca.crosses.erase(b.id);
      cb.crosses.erase(a.id);
    } else {
      ca.crosses[b.id] = next;
      cb.crosses[a.id] = next;
    }
  } else {
    auto& curve = config.curve(a.kind == K::curve ? a.id : b.id);
    const VertexId& v = a.kind == K::vertex ? a.id : b.id;
    const int points = curve.points(v) + (delta > 0 ? 1 : -1);
    set_points(curve, v, next, std::clamp(points, next > 0 ? 1 : 0, next));
  }
}

VertexId fresh_id(const OrderConfig& config) {
  for (int k = 1;; ++k) {
    VertexId id = "B" + std::to_string(k);
    if (!config.graph.contains(id) && !config.has_curve(id)) return id;
  }
}

std::vector<BirationalMap::Incidence> incidence_of(const OrderConfig& config, const VertexId& vertex) {
  std::vector<BirationalMap::Incidence> out;
  for (const auto& [other, m] : config.graph.neighbours(vertex)) {
    out.push_back({{ComponentRef::Kind::vertex, other}, m});
  }
  for (const auto& c : config.curves) {
    if (c.meet(vertex) > 0) out.push_back({{ComponentRef::Kind::curve, c.id}, c.meet(vertex)});
  }
  return out;
}

int centre_index(const OrderConfig& config, const std::vector<BirationalMap::Incidence>& inc) {
  int e1 = 1;
  for (const auto& i : inc) e1 = std::max(e1, ram_index_of(config, i.component));
  return e1;
}

// Removes a smooth rational (-1)-curve; neighbours regain m_a m_b mutual
// intersection and m^2 self-intersection.
std::pair<OrderConfig, BirationalMap> contract_unchecked(const OrderConfig& config, const VertexId& vertex,
                                                         BirationalMap::Kind kind) {
  const Vertex& v = config.graph.vertex(vertex);
  if (v.genus != 0 || v.self_intersection != -1) {
    throw PreconditionError("'" + vertex + "' is not a smooth rational (-1)-curve");
  }
  BirationalMap map;
  map.kind = kind;
  map.exceptional = vertex;
  map.incidence = incidence_of(config, vertex);
  map.exceptional_index = config.ram_index(vertex);

  OrderConfig out = config;
  for (std::size_t i = 0; i < map.incidence.size(); ++i) {
    for (std::size_t j = i + 1; j < map.incidence.size(); ++j) {
      shift_intersection(out, map.incidence[i].component, map.incidence[j].component,
                         map.incidence[i].mult * map.incidence[j].mult);
    }
  }
  for (const auto& inc : map.incidence) {
    if (inc.component.kind != ComponentRef::Kind::vertex) continue;
    Vertex& w = out.graph.vertex(inc.component.id);
    w.self_intersection += inc.mult * inc.mult;
    if (w.self_intersection >= 0) {
      throw PreconditionError("contraction blocked: contracting '" + vertex + "' makes '" + w.id +
                              "' non-exceptional");
    }
  }
  out.graph.remove_vertex(vertex);
  out.exc_ram.erase(vertex);
  for (auto& c : out.curves) set_points(c, vertex, 0, 0);
  map.centre_index = centre_index(out, map.incidence);
  return {std::move(out), std::move(map)};
}

}  // namespace

Divisor pullback(const BirationalMap& map, const Divisor& d) {
  if (!d[map.exceptional].is_zero()) {
    throw InputError("pullback: divisor already has a component on '" + map.exceptional + "'");
  }
  Rational through;
  for (const auto& inc : map.incidence) {
    if (inc.component.kind == ComponentRef::Kind::vertex) through += d[inc.component.id] * Rational(inc.mult);
  }
  Divisor out = d;
  out.set(map.exceptional, through);
  return out;
}

Divisor pushforward(const BirationalMap& map, const Divisor& d) {
  Divisor out = d;
  out.set(map.exceptional, Rational(0));
  return out;
}

OrderConfig replay(const OrderConfig& lower, const BirationalMap& map) {
  if (lower.graph.contains(map.exceptional) || lower.has_curve(map.exceptional)) {
    throw InputError("replay: id '" + map.exceptional + "' already in use");
  }
  OrderConfig out = lower;
  for (std::size_t i = 0; i < map.incidence.size(); ++i) {
    for (std::size_t j = i + 1; j < map.incidence.size(); ++j) {
      shift_intersection(out, map.incidence[i].component, map.incidence[j].component,
                         -map.incidence[i].mult * map.incidence[j].mult);
    }
  }
  out.graph.add_vertex({map.exceptional, -1, 0});
  if (map.exceptional_index > 1) out.exc_ram[map.exceptional] = map.exceptional_index;
  for (const auto& inc : map.incidence) {
    if (inc.component.kind == ComponentRef::Kind::vertex) {
      out.graph.vertex(inc.component.id).self_intersection -= inc.mult * inc.mult;
      out.graph.add_edge(map.exceptional, inc.component.id, inc.mult);
    } else {
      set_points(out.curve(inc.component.id), map.exceptional, inc.mult, 1);
    }
  }
  return out;
}

std::pair<OrderConfig, BirationalMap> blowup(const OrderConfig& config, const BlowupCenter& center,
                                             std::optional<VertexId> new_id) {
  if (center.through.size() > 2) throw InputError("blowup: a centre lies on at most two components");
  BirationalMap map;
  map.kind = BirationalMap::Kind::blowup;
  map.exceptional = new_id ? *new_id : fresh_id(config);
  for (const auto& id : center.through) map.incidence.push_back({resolve(config, id), 1});

  if (map.incidence.size() == 2) {
    const auto& a = map.incidence[0].component;
    const auto& b = map.incidence[1].component;
    if (a == b) throw InputError("blowup: centre components must be distinct");
    if (intersection(config, a, b) < 1) {
      throw PreconditionError("blowup: '" + a.id + "' and '" + b.id + "' do not meet");
    }
  }
  for (const auto& inc : map.incidence) {
    if (inc.component.kind != ComponentRef::Kind::curve) continue;
    for (const auto& other : map.incidence) {
      if (other.component.kind != ComponentRef::Kind::vertex) continue;
      const auto& c = config.curve(inc.component.id);
      if (c.points(other.component.id) != c.meet(other.component.id)) {
        throw PreconditionError("blowup: '" + c.id + "' is not transverse to '" + other.component.id + "'");
      }
    }
  }

  std::vector<int> ramified;
  for (const auto& inc : map.incidence) {
    const int e = ram_index_of(config, inc.component);
    if (e > 1) ramified.push_back(e);
  }
  if (ramified.size() == 2) {
    const int e1 = std::max(ramified[0], ramified[1]);
    const int e2 = std::min(ramified[0], ramified[1]);
    if (e1 % e2 != 0) {
      throw PreconditionError("blowup: indices " + std::to_string(e1) + " and " + std::to_string(e2) +
                              " at the node are not comparable under divisibility");
    }
    map.exceptional_index = e2;
  }
  map.centre_index = centre_index(config, map.incidence);
  OrderConfig upper = replay(config, map);
  return {std::move(upper), std::move(map)};
}

std::pair<OrderConfig, BirationalMap> blowdown(const OrderConfig& config, const VertexId& vertex) {
  const Vertex& v = config.graph.vertex(vertex);
  const std::string prefix = "not a recognized blowup pattern: '" + vertex + "' ";
  if (v.genus != 0 || v.self_intersection != -1) throw PreconditionError(prefix + "is not a smooth rational (-1)-curve");
  const auto inc = incidence_of(config, vertex);
  if (inc.size() > 2) throw PreconditionError(prefix + "has " + std::to_string(inc.size()) + " neighbours");
  std::vector<int> ramified;
  for (const auto& i : inc) {
    if (i.mult != 1) throw PreconditionError(prefix + "is tangent to '" + i.component.id + "'");
    if (i.component.kind == ComponentRef::Kind::curve && config.curve(i.component.id).points(vertex) != 1) {
      throw PreconditionError(prefix + "meets '" + i.component.id + "' at several points");
    }
    const int e = ram_index_of(config, i.component);
    if (e > 1) ramified.push_back(e);
  }
  int expected = 1;
  if (ramified.size() == 2) {
    const int hi = std::max(ramified[0], ramified[1]);
    const int lo = std::min(ramified[0], ramified[1]);
    if (hi % lo != 0) throw PreconditionError(prefix + "sits at a node with incomparable indices");
    expected = lo;
  }
  if (config.ram_index(vertex) != expected) {
    throw PreconditionError(prefix + "has ramification index " + std::to_string(config.ram_index(vertex)) +
                            ", expected " + std::to_string(expected));
  }
  return contract_unchecked(config, vertex, BirationalMap::Kind::blowdown);
}

std::pair<OrderConfig, BirationalMap> contract(const OrderConfig& config, const VertexId& vertex) {
  return contract_unchecked(config, vertex, BirationalMap::Kind::blowdown);
}

Divisor Tower::pullback(const Divisor& d) const {
  Divisor out = d;
  for (const auto& m : maps) out = numrat::pullback(m, out);
  return out;
}

Divisor Tower::pushforward(const Divisor& d) const {
  Divisor out = d;
  for (auto it = maps.rbegin(); it != maps.rend(); ++it) out = numrat::pushforward(*it, out);
  return out;
}

std::vector<VertexId> Tower::created() const {
  std::vector<VertexId> out;
  for (const auto& m : maps) out.push_back(m.exceptional);
  return out;
}

bool Tower::consistent() const {
  OrderConfig cur = base;
  for (const auto& m : maps) cur = replay(cur, m);
  return cur == top;
}

Tower build_tower(const OrderConfig& base, const std::vector<BlowupCenter>& centers) {
  Tower t{base, {}, base};
  for (const auto& c : centers) {
    auto [next, map] = blowup(t.top, c);
    t.top = std::move(next);
    t.maps.push_back(std::move(map));
  }
  return t;
}

Divisor n_cycle(const Tower& tower, const VertexId& vertex) { return n_cycle(tower, vertex, tower.top.graph.ids()); }

Divisor n_cycle(const Tower& tower, const VertexId& vertex, const std::vector<VertexId>& priority) {
  if (!tower.top.graph.contains(vertex)) throw InputError("n_cycle: unknown vertex '" + vertex + "'");
  OrderConfig cur = tower.top;
  std::vector<BirationalMap> steps;
  for (;;) {
    const VertexId* pick = nullptr;
    for (const auto& id : priority) {
      if (id == vertex || !cur.graph.contains(id)) continue;
      const Vertex& v = cur.graph.vertex(id);
      if (v.genus == 0 && v.self_intersection == -1) {
        pick = &id;
        break;
      }
    }
    if (!pick) break;
    auto [next, map] = contract(cur, *pick);
    cur = std::move(next);
    steps.push_back(std::move(map));
  }
  Divisor n = Divisor::curve(vertex);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) n = pullback(*it, n);
  return n;
}

std::pair<OrderConfig, Tower> minimalize(const OrderConfig& config) {
  require_valid(config);
  OrderConfig cur = config;
  std::vector<BirationalMap> downward;
  for (;;) {
    std::optional<VertexId> pick;
    for (const auto& v : cur.graph.vertices()) {
      if (v.genus == 0 && v.self_intersection == -1 && canonical_dot(cur, Divisor::curve(v.id)).sign() < 0) {
        pick = v.id;
        break;
      }
    }
    if (!pick) break;
    auto [next, map] = blowdown(cur, *pick);
    cur = std::move(next);
    downward.push_back(std::move(map));
  }
  Tower tower{cur, {downward.rbegin(), downward.rend()}, config};
  return {std::move(cur), std::move(tower)};
}

}  // namespace numrat
