#include "numrat/catalogue.hpp"

#include <numeric>
#include <random>

#include "numrat/discrepancy.hpp"
#include "numrat/errors.hpp"

namespace numrat {

namespace {

VertexId e(int i) { return "E" + std::to_string(i); }

Divisor dense_divisor(const std::vector<int>& coeffs) {
  Divisor d;
  for (std::size_t i = 0; i < coeffs.size(); ++i) d.set(e(static_cast<int>(i + 1)), Rational(coeffs[i]));
  return d;
}

ResolutionGraph fork_with_tail(const std::vector<int>& weights) {
  // Chain E1..E5, E6 on E3.
  ResolutionGraph g = chain({weights.begin(), weights.begin() + 5});
  g.add_vertex({e(6), -weights[5], 0});
  g.add_edge(e(3), e(6));
  return g;
}

}  // namespace

std::vector<int> hj_fraction(int n, int q) {
  if (n < 2 || q <= 0 || q >= n || std::gcd(n, q) != 1) {
    throw InputError("cyclic: need n >= 2, 0 < q < n and gcd(n, q) = 1 (got n=" + std::to_string(n) +
                     ", q=" + std::to_string(q) + ")");
  }
  std::vector<int> b;
  while (q != 0) {
    const int bi = (n + q - 1) / q;
    b.push_back(bi);
    const int next = bi * q - n;
    n = q;
    q = next;
  }
  return b;
}

ResolutionGraph chain(const std::vector<int>& weights) {
  ResolutionGraph g;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) throw InputError("chain: weights must be positive");
    g.add_vertex({e(static_cast<int>(i + 1)), -weights[i], 0});
    if (i > 0) g.add_edge(e(static_cast<int>(i)), e(static_cast<int>(i + 1)));
  }
  return g;
}

ResolutionGraph cyclic(int n, int q) { return chain(hj_fraction(n, q)); }

ResolutionGraph ade(char type, int n) {
  switch (type) {
    case 'A':
      if (n < 1) break;
      return chain(std::vector<int>(static_cast<std::size_t>(n), 2));
    case 'D': {
      if (n < 4) break;
      ResolutionGraph g = chain(std::vector<int>(static_cast<std::size_t>(n - 2), 2));
      g.add_vertex({e(n - 1), -2, 0});
      g.add_vertex({e(n), -2, 0});
      g.add_edge(e(n - 2), e(n - 1));
      g.add_edge(e(n - 2), e(n));
      return g;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      ResolutionGraph g = chain(std::vector<int>(static_cast<std::size_t>(n - 1), 2));
      g.add_vertex({e(n), -2, 0});
      g.add_edge(e(3), e(n));
      return g;
    }
    default:
      break;
  }
  throw InputError(std::string("ade: no Dynkin graph of type ") + type + std::to_string(n));
}

OrderConfig unramified_order(const ResolutionGraph& graph) {
  OrderConfig c;
  c.graph = graph;
  return c;
}

Fixture case1(const std::vector<int>& weights) {
  const int r = static_cast<int>(weights.size());
  if (r < 3) throw InputError("case1: need at least three weights");
  for (int b : weights) {
    if (b < 2) throw InputError("case1: weights must be >= 2");
  }
  if (weights[r - 2] != 2 || weights[r - 1] != 2) throw InputError("case1: the two leaves must be (-2)-curves");

  ResolutionGraph g = chain({weights.begin(), weights.end() - 2});
  g.add_vertex({e(r - 1), -2, 0});
  g.add_vertex({e(r), -2, 0});
  g.add_edge(e(1), e(r - 1));
  g.add_edge(e(1), e(r));

  int j = r - 2;
  for (int i = 1; i <= r - 2; ++i) {
    if (weights[i - 1] > 2) {
      j = i;
      break;
    }
  }
  std::vector<int> z(static_cast<std::size_t>(r), 1);
  for (int i = 1; i < j; ++i) z[i - 1] = 2;

  Fixture f{"case1", unramified_order(g), {}, {}};
  f.cycles["Z_num"] = dense_divisor(z);
  int m = 2;
  for (int b : weights) m += b - 2;
  f.values["multiplicity"] = Rational(m);
  return f;
}

Fixture case2_23() {
  Fixture f{"case2_23", unramified_order(fork_with_tail({2, 3, 2, 2, 2, 2})), {}, {}};
  f.cycles["Z_num"] = dense_divisor({1, 1, 2, 2, 1, 1});
  f.values["multiplicity"] = Rational(3);
  return f;
}

Fixture case2_32() {
  Fixture f{"case2_32", unramified_order(fork_with_tail({3, 2, 2, 2, 2, 2})), {}, {}};
  f.cycles["Z_num"] = dense_divisor({1, 2, 3, 2, 1, 2});
  f.values["multiplicity"] = Rational(3);
  return f;
}

Fixture e6_tilde_order() {
  OrderConfig c;
  c.graph.add_vertex({"E", -3, 1});
  c.exc_ram["E"] = 2;
  for (const char* id : {"D1", "D2"}) {
    RamCurve d;
    d.id = id;
    d.index = 2;
    d.meets["E"] = 3;
    d.distinct_points["E"] = 3;
    c.curves.push_back(d);
  }
  c.rank_root = 2;

  Fixture f{"e6_tilde", c, {}, {}};
  f.cycles["witness"] = Divisor::curve("E");
  f.values["K.E"] = Rational(9, 2);
  f.values["Delta.E"] = Rational(3, 2);
  f.values["a(E)"] = Rational(-3, 2);
  for (int m = 1; m <= 5; ++m) f.values["chi(" + std::to_string(m) + "E)"] = Rational(3 * m * (2 * m - 3));
  f.values["chi(A/J)"] = Rational(-3);
  f.values["cover_euler_char(E)"] = Rational(-3);
  return f;
}

Fixture crepant_order() {
  OrderConfig c;
  c.graph.add_vertex({"E", -4, 0});
  c.exc_ram["E"] = 2;
  c.rank_root = 2;
  Fixture f{"crepant", c, {}, {}};
  f.values["K.E"] = Rational(0);
  f.values["Delta.E"] = Rational(-2);
  f.values["chi(E)"] = Rational(8);
  f.values["chi(A/J)"] = Rational(2);
  return f;
}

std::vector<std::string> fixture_names() { return {"e6_tilde", "crepant", "case1", "case2_23", "case2_32", "cyclic_12_5"}; }

Fixture fixture(const std::string& name) {
  if (name == "e6_tilde") return e6_tilde_order();
  if (name == "crepant") return crepant_order();
  if (name == "case1") return case1({2, 3, 2, 2, 2});
  if (name == "case2_23") return case2_23();
  if (name == "case2_32") return case2_32();
  if (name == "cyclic_12_5") {
    Fixture f{"cyclic_12_5", unramified_order(cyclic(12, 5)), {}, {}};
    f.cycles["Z_num"] = dense_divisor({1, 1, 1});
    for (int i = 1; i <= 3; ++i) f.values["alpha(E" + std::to_string(i) + ")"] = Rational(-1, 2);
    return f;
  }
  throw InputError("unknown fixture '" + name + "'");
}

namespace {

constexpr int kRetryCap = 10'000;

int draw(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> draw_weights(std::mt19937_64& rng, int count, int max_weight) {
  std::vector<int> w(static_cast<std::size_t>(count));
  for (auto& b : w) b = draw(rng, 2, std::max(2, max_weight));
  return w;
}

ResolutionGraph draw_star(std::mt19937_64& rng, int max_vertices, int max_weight) {
  const int arms_total = draw(rng, 3, max_vertices - 1);
  // Split arms_total into three positive arm lengths.
  int a = draw(rng, 1, arms_total - 2);
  int b = draw(rng, 1, arms_total - a - 1);
  const int lengths[3] = {a, b, arms_total - a - b};

  ResolutionGraph g;
  g.add_vertex({e(1), -draw(rng, 2, std::max(2, max_weight)), 0});
  int next = 2;
  for (int len : lengths) {
    VertexId prev = e(1);
    for (int k = 0; k < len; ++k) {
      g.add_vertex({e(next), -draw(rng, 2, std::max(2, max_weight)), 0});
      g.add_edge(prev, e(next));
      prev = e(next);
      ++next;
    }
  }
  return g;
}

}  // namespace

ResolutionGraph random_log_terminal(std::uint64_t seed, int max_vertices, int max_weight) {
  if (max_vertices < 1 || max_weight < 1) throw InputError("random_log_terminal: bounds must be >= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    int family = draw(rng, 0, 2);
    if (max_vertices < 3) family = 0;
    if (family == 2 && max_vertices < 4) family = 1;

    ResolutionGraph g;
    if (family == 0) {
      g = chain(draw_weights(rng, draw(rng, 1, max_vertices), max_weight));
    } else if (family == 1) {
      auto w = draw_weights(rng, draw(rng, 3, max_vertices), max_weight);
      w[w.size() - 1] = 2;
      w[w.size() - 2] = 2;
      g = case1(w).config.graph;
    } else {
      g = draw_star(rng, max_vertices, max_weight);
    }
    if (is_log_terminal_graph(g)) return g;
  }
  throw InvariantError("random_log_terminal: no log terminal graph after retry cap");
}

OrderConfig random_order(std::uint64_t seed, const ResolutionGraph& graph) {
  std::mt19937_64 rng(seed);
  static constexpr int kRanks[] = {2, 3, 4, 6};
  OrderConfig c;
  c.graph = graph;
  c.rank_root = kRanks[draw(rng, 0, 3)];
  std::vector<int> divisors;
  for (int d = 1; d <= c.rank_root; ++d) {
    if (c.rank_root % d == 0) divisors.push_back(d);
  }
  auto comparable = [](int x, int y) { return x % y == 0 || y % x == 0; };

  for (const auto& v : graph.vertices()) {
    int idx = divisors[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(divisors.size()) - 1))];
    for (const auto& [other, m] : graph.neighbours(v.id)) {
      const int eo = c.ram_index(other);
      if (idx > 1 && eo > 1 && (!comparable(idx, eo) || m != 1)) idx = 1;
    }
    if (idx > 1) c.exc_ram[v.id] = idx;
  }

  const int curves = graph.empty() ? 0 : draw(rng, 0, 2);
  const auto ids = graph.ids();
  for (int k = 0; k < curves; ++k) {
    RamCurve curve;
    curve.id = "C" + std::to_string(k + 1);
    curve.index = divisors[static_cast<std::size_t>(draw(rng, 1, static_cast<int>(divisors.size()) - 1))];
    const VertexId& v = ids[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(ids.size()) - 1))];
    if (c.ram_index(v) > 1 && !comparable(c.ram_index(v), curve.index)) curve.index = c.ram_index(v);
    curve.meets[v] = 1;
    c.curves.push_back(curve);
  }
  return c;
}

}  // namespace numrat
