#include <gtest/gtest.h>

#include <random>

#include "numrat/catalogue.hpp"
#include "numrat/errors.hpp"
#include "numrat/lattice.hpp"
#include "oracles.hpp"

using namespace numrat;

TEST(Rational, ReducesAndRenders) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_TRUE(Rational(3, 1).is_integer());
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_LT(Rational(-1, 3), Rational(0));
}

TEST(Rational, RejectsBadInput) {
  EXPECT_THROW(Rational(1, 0), InputError);
  EXPECT_THROW(Rational(1) / Rational(0), InputError);
  EXPECT_THROW(Rational::parse("1/0"), InputError);
  EXPECT_THROW(Rational::parse("x"), InputError);
  EXPECT_THROW(Rational::parse("1/-2"), InputError);
  EXPECT_THROW(Rational(1, 2).to_int(), InputError);
}

TEST(Divisor, PrunesZerosAndCompares) {
  Divisor d{{"E1", 2}, {"E2", 0}};
  EXPECT_EQ(d.support(), (std::set<VertexId>{"E1"}));
  d.add("E1", Rational(-2));
  EXPECT_TRUE(d.is_zero());
  EXPECT_EQ(Divisor({{"A", 1}}) + Divisor({{"A", -1}}), Divisor());

  const Divisor a{{"E1", 2}, {"E2", 1}};
  const Divisor b{{"E1", 1}, {"E3", 4}};
  EXPECT_EQ(min(a, b), Divisor({{"E1", 1}}));
  EXPECT_TRUE(Divisor({{"E1", 1}}).leq(a));
  EXPECT_FALSE(b.leq(a));
  EXPECT_EQ(a.str(), "E1:2,E2:1");
  EXPECT_EQ(a.restricted({"E2"}), Divisor({{"E2", 1}}));
}

TEST(Divisor, EffectiveAndIntegral) {
  EXPECT_TRUE(Divisor({{"E", 1}}).is_effective());
  EXPECT_FALSE(Divisor({{"E", -1}}).is_effective());
  EXPECT_FALSE(Divisor({{"E", Rational(1, 2)}}).is_integral());
  EXPECT_TRUE(Divisor().is_integral());
}

TEST(IntersectionForm, ValidatesEntries) {
  EXPECT_THROW(IntersectionForm({"a", "b"}, {-2, 1, 0, -2}), InputError);   // asymmetric
  EXPECT_THROW(IntersectionForm({"a"}, {0}), InputError);                   // diagonal not negative
  EXPECT_THROW(IntersectionForm({"a", "b"}, {-2, -1, -1, -2}), InputError);  // negative off-diagonal
  EXPECT_THROW(IntersectionForm({"a", "a"}, {-2, 0, 0, -2}), InputError);
  EXPECT_THROW(IntersectionForm({"a"}, {-2, 0}), InputError);
}

TEST(Pair, Examples) {
  const auto a2 = ade('A', 2).form();
  EXPECT_EQ(pair(a2, Divisor::curve("E1"), Divisor::curve("E2")), Rational(1));

  const Fixture f = case2_32();
  const Divisor z = f.cycles.at("Z_num");
  EXPECT_EQ(pair(f.config.graph.form(), z, z), Rational(-3));

  const auto single = chain({3}).form();
  EXPECT_EQ(pair(single, Divisor({{"E1", 2}}), Divisor({{"E1", 2}})), Rational(-12));

  EXPECT_THROW(pair(a2, Divisor::curve("X"), Divisor::curve("E1")), InputError);
}

TEST(Pair, BilinearSymmetricAndDefinite) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_log_terminal(rng(), 7, 5);
    const auto form = g.form();
    auto draw = [&] {
      Divisor d;
      for (const auto& id : g.ids()) d.set(id, Rational(coeff(rng), 1 + std::abs(coeff(rng))));
      return d;
    };
    const Divisor d = draw(), e = draw(), f = draw();
    const Rational s(coeff(rng), 3), t(coeff(rng), 5);
    EXPECT_EQ(pair(form, d, s * e + t * f), s * pair(form, d, e) + t * pair(form, d, f));
    EXPECT_EQ(pair(form, d, e), pair(form, e, d));
    if (!d.is_zero()) {
      EXPECT_LT(pair(form, d, d), Rational(0));
    }
  }
}

TEST(NegativeDefinite, Examples) {
  EXPECT_TRUE(is_negative_definite(chain({1}).form()));
  EXPECT_TRUE(is_negative_definite(ade('A', 5).form()));
  EXPECT_FALSE(is_negative_definite(chain({1, 1}).form()));
  EXPECT_TRUE(is_negative_definite(IntersectionForm()));
}

TEST(NegativeDefinite, MatchesSylvesterOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(1, 6), weight(1, 4), edge(0, 2);
  int positives = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = size(rng);
    std::vector<VertexId> ids;
    std::vector<std::int64_t> entries(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) {
      ids.push_back("v" + std::to_string(i));
      entries[static_cast<std::size_t>(i * n + i)] = -weight(rng);
      for (int j = i + 1; j < n; ++j) {
        const int m = edge(rng) == 2 ? 1 : 0;
        entries[static_cast<std::size_t>(i * n + j)] = entries[static_cast<std::size_t>(j * n + i)] = m;
      }
    }
    const IntersectionForm form(ids, entries);
    oracle::Matrix m(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = static_cast<long>(form.at(i, j));
    const bool expected = oracle::negative_definite(m);
    positives += expected;
    EXPECT_EQ(is_negative_definite(form), expected) << "trial " << trial;
  }
  EXPECT_GT(positives, 30);
}

TEST(SolveExact, Examples) {
  const auto single = chain({3}).form();
  EXPECT_EQ(solve_exact(single, std::vector<Rational>{Rational(1)})[0], Rational(-1, 3));
  EXPECT_EQ(solve_exact(single, std::vector<Rational>{Rational(9, 2)})[0], Rational(-3, 2));
  for (const auto& g : {ade('A', 4), ade('D', 5), ade('E', 8)}) {
    const auto x = solve_exact(g.form(), std::vector<Rational>(g.size(), Rational(0)));
    for (const auto& v : x) EXPECT_TRUE(v.is_zero());
  }
  EXPECT_THROW(solve_exact(chain({1, 1}).form(), std::vector<Rational>(2, Rational(1))), PreconditionError);
}

TEST(SolveExact, RoundTripAndCramer) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_log_terminal(rng(), 6, 6);
    const auto form = g.form();
    std::vector<Rational> x;
    for (std::size_t i = 0; i < g.size(); ++i) x.emplace_back(coeff(rng));
    std::vector<Rational> target(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) target[i] += Rational(static_cast<long>(form.at(i, j))) * x[j];
    EXPECT_EQ(solve_exact(form, target), x);

    std::vector<mpq_class> b;
    for (std::size_t i = 0; i < g.size(); ++i) b.emplace_back(coeff(rng), 7);
    for (auto& v : b) v.canonicalize();
    const auto expected = oracle::solve(oracle::dense(g), b);
    std::vector<Rational> rb;
    for (const auto& v : b) rb.emplace_back(v);
    const auto got = solve_exact(form, rb);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(got[i], Rational(expected[i]));
  }
}

TEST(ConnectedComponents, Examples) {
  const auto a3 = ade('A', 3).form();
  EXPECT_EQ(connected_components(a3, {"E1", "E3"}), (std::vector<std::set<VertexId>>{{"E1"}, {"E3"}}));
  EXPECT_EQ(connected_components(a3, {"E1", "E2", "E3"}), (std::vector<std::set<VertexId>>{{"E1", "E2", "E3"}}));
  const auto g = case2_32().config.graph;
  const auto ids = g.ids();
  EXPECT_EQ(connected_components(g.form(), {ids.begin(), ids.end()}).size(), 1u);
}
