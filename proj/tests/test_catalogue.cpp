#include <gtest/gtest.h>

#include <numeric>
#include <regex>

#include "numrat/adjunction.hpp"
#include "numrat/catalogue.hpp"
#include "numrat/cycles.hpp"
#include "numrat/discrepancy.hpp"
#include "numrat/errors.hpp"
#include "numrat/rationality.hpp"
#include "oracles.hpp"

using namespace numrat;

namespace {

std::vector<int> weights(const ResolutionGraph& g) {
  std::vector<int> out;
  for (const auto& id : g.ids()) out.push_back(static_cast<int>(g.vertex(id).weight()));
  return out;
}

// Recomputes a named fixture value with the library.
Rational recompute(const Fixture& f, const std::string& key) {
  const OrderConfig& c = f.config;
  const auto ids = c.graph.ids();
  std::smatch m;
  if (key == "multiplicity") return Rational(multiplicity(c.graph, numerical_cycle(c.graph)));
  if (key == "K.E") return canonical_dot(c, Divisor::curve("E"));
  if (key == "Delta.E") return delta_dot(c, Divisor::curve("E"));
  if (key == "a(E)") return order_discrepancies(c)[0];
  if (key == "chi(A/J)") return chi_A_mod_J(c, "E");
  if (key == "cover_euler_char(E)") return cover_euler_char(c, "E");
  if (key == "chi(E)") return chi_restriction(c, Divisor::curve("E"));
  static const std::regex chi_m(R"(chi\((\d+)E\))"), alpha(R"(alpha\((\w+)\))");
  if (std::regex_match(key, m, chi_m)) return chi_restriction(c, Divisor({{"E", std::stoi(m[1])}}));
  if (std::regex_match(key, m, alpha)) {
    const auto pos = std::find(ids.begin(), ids.end(), m[1].str()) - ids.begin();
    return surface_discrepancies(c.graph)[static_cast<std::size_t>(pos)];
  }
  throw std::runtime_error("no recomputation for fixture value '" + key + "'");
}

}  // namespace

TEST(Cyclic, Examples) {
  EXPECT_EQ(weights(cyclic(2, 1)), std::vector<int>{2});
  EXPECT_EQ(weights(cyclic(12, 5)), (std::vector<int>{3, 2, 3}));
  EXPECT_EQ(weights(cyclic(7, 1)), std::vector<int>{7});
  EXPECT_EQ(hj_fraction(7, 3), (std::vector<int>{3, 2, 2}));
  EXPECT_EQ(cyclic(5, 4), ade('A', 4));
}

TEST(Cyclic, RejectsInvalidPairs) {
  EXPECT_THROW(cyclic(4, 2), InputError);
  EXPECT_THROW(cyclic(5, 0), InputError);
  EXPECT_THROW(cyclic(5, 5), InputError);
  EXPECT_THROW(cyclic(1, 1), InputError);
  EXPECT_THROW(hj_fraction(6, 7), InputError);
}

TEST(Cyclic, ContinuedFractionRoundTrip) {
  for (int n = 2; n <= 60; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) != 1) continue;
      const auto b = hj_fraction(n, q);
      for (int w : b) EXPECT_GE(w, 2);
      EXPECT_EQ(oracle::hj_value(b), mpq_class(n, q)) << n << "/" << q;
      EXPECT_EQ(weights(cyclic(n, q)), b);
      // The determinant of the chain is n (Laplace expansion stays cheap on short chains).
      if (b.size() <= 12) {
        EXPECT_EQ(abs(oracle::det(oracle::dense(cyclic(n, q)))), n);
      }
    }
  }
}

TEST(Ade, ShapesAndDeterminants) {
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(abs(oracle::det(oracle::dense(ade('A', n)))), n + 1);
  for (int n = 4; n <= 9; ++n) EXPECT_EQ(abs(oracle::det(oracle::dense(ade('D', n)))), 4);
  EXPECT_EQ(abs(oracle::det(oracle::dense(ade('E', 6)))), 3);
  EXPECT_EQ(abs(oracle::det(oracle::dense(ade('E', 7)))), 2);
  EXPECT_EQ(abs(oracle::det(oracle::dense(ade('E', 8)))), 1);
  for (const auto& g : {ade('A', 5), ade('D', 6), ade('E', 7)}) {
    const Divisor z = numerical_cycle(g);
    EXPECT_EQ(pair(g.form(), z, z), Rational(-2));
    EXPECT_EQ(g.vertex("E1").genus, 0);
  }
  EXPECT_EQ(ade('D', 4).neighbours("E2").size(), 3u);
  EXPECT_EQ(ade('E', 6).neighbours("E3").size(), 3u);
  EXPECT_THROW(ade('D', 3), InputError);
  EXPECT_THROW(ade('E', 9), InputError);
  EXPECT_THROW(ade('A', 0), InputError);
  EXPECT_THROW(ade('X', 3), InputError);
}

TEST(Case1, ShapeAndCycle) {
  const Fixture f = case1({3, 2, 2, 2, 2});
  EXPECT_EQ(f.config.graph.neighbours("E1").size(), 3u);
  EXPECT_EQ(f.cycles.at("Z_num"), Divisor({{"E1", 1}, {"E2", 1}, {"E3", 1}, {"E4", 1}, {"E5", 1}}));
  const Fixture d = case1({2, 2, 3, 2, 2});
  EXPECT_EQ(d.cycles.at("Z_num"), Divisor({{"E1", 2}, {"E2", 2}, {"E3", 1}, {"E4", 1}, {"E5", 1}}));
  EXPECT_EQ(numerical_cycle(d.config.graph), d.cycles.at("Z_num"));
  EXPECT_THROW(case1({2, 2}), InputError);
  EXPECT_THROW(case1({2, 1, 2, 2}), InputError);
  EXPECT_THROW(case1({2, 2, 3, 2}), InputError);
}

TEST(Case1, ClosedFormMatchesLibrary) {
  for (int r = 3; r <= 7; ++r) {
    for (int mask = 0; mask < (1 << (r - 2)); ++mask) {
      std::vector<int> w(static_cast<std::size_t>(r), 2);
      for (int i = 0; i < r - 2; ++i) {
        if (mask & (1 << i)) w[static_cast<std::size_t>(i)] = 3 + i % 2;
      }
      const Fixture f = case1(w);
      EXPECT_EQ(numerical_cycle(f.config.graph), f.cycles.at("Z_num"));
      const Divisor z = f.cycles.at("Z_num");
      EXPECT_EQ(Rational(multiplicity(f.config.graph, z)), f.values.at("multiplicity"));
    }
  }
}

TEST(Fixtures, ValuesAreRederived) {
  for (const auto& name : fixture_names()) {
    const Fixture f = fixture(name);
    EXPECT_EQ(f.name, name);
    EXPECT_TRUE(validate(f.config).ok()) << name;
    for (const auto& [key, d] : f.cycles) {
      if (key == "Z_num") {
        EXPECT_EQ(numerical_cycle(f.config.graph), d) << name;
      } else if (key == "witness") {
        EXPECT_EQ(is_numerically_rational(f.config).witness, d) << name;
      } else {
        ADD_FAILURE() << "unchecked cycle " << key;
      }
    }
    for (const auto& [key, v] : f.values) EXPECT_EQ(recompute(f, key), v) << name << " " << key;
  }
  EXPECT_THROW(fixture("nope"), InputError);
}

TEST(Fixtures, Case2Cycles) {
  EXPECT_EQ(case2_23().cycles.at("Z_num"),
            Divisor({{"E1", 1}, {"E2", 1}, {"E3", 2}, {"E4", 2}, {"E5", 1}, {"E6", 1}}));
  EXPECT_EQ(weights(case2_23().config.graph), (std::vector<int>{2, 3, 2, 2, 2, 2}));
  EXPECT_EQ(weights(case2_32().config.graph), (std::vector<int>{3, 2, 2, 2, 2, 2}));
  EXPECT_EQ(case2_32().config.graph.neighbours("E6").size(), 1u);
  EXPECT_EQ(case2_32().config.graph.meet("E3", "E6"), 1);
}

TEST(RandomLogTerminal, DeterministicPerSeed) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(random_log_terminal(seed, 8, 6), random_log_terminal(seed, 8, 6));
    const auto g = random_log_terminal(seed, 8, 6);
    EXPECT_EQ(random_order(seed, g), random_order(seed, g));
  }
  EXPECT_THROW(random_log_terminal(1, 0, 3), InputError);
}

TEST(RandomLogTerminal, ThousandSamples) {
  std::set<std::size_t> sizes;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto g = random_log_terminal(seed, 8, 6);
    ASSERT_GE(g.size(), 1u);
    ASSERT_LE(g.size(), 8u);
    sizes.insert(g.size());
    EXPECT_TRUE(is_log_terminal_graph(g));
    EXPECT_TRUE(oracle::negative_definite(oracle::dense(g)));
    const auto ids = g.ids();
    EXPECT_EQ(connected_components(g.form(), {ids.begin(), ids.end()}).size(), 1u);
    const Divisor z = numerical_cycle(g);
    for (const auto& v : g.vertices()) {
      if (v.weight() > 2) {
        EXPECT_EQ(z[v.id], Rational(1)) << seed;
      }
    }
  }
  EXPECT_EQ(sizes.size(), 8u);
}

TEST(RandomOrder, ValidAndVaried) {
  std::set<int> ranks;
  int with_curves = 0, ramified = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const OrderConfig c = random_order(seed, random_log_terminal(seed + 7, 7, 5));
    EXPECT_TRUE(validate(c).ok()) << validate(c).summary();
    ranks.insert(c.rank_root);
    with_curves += !c.curves.empty();
    ramified += !c.exc_ram.empty();
  }
  EXPECT_EQ(ranks, (std::set<int>{2, 3, 4, 6}));
  EXPECT_GT(with_curves, 100);
  EXPECT_GT(ramified, 100);
}
