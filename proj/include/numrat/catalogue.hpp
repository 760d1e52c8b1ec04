#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "numrat/model.hpp"

namespace numrat {

/// A named configuration with exact values the library is expected to
/// reproduce.
struct Fixture {
  std::string name;
  OrderConfig config;
  std::map<std::string, Divisor> cycles;
  std::map<std::string, Rational> values;
};

/// Hirzebruch-Jung chain of n/q, vertices E1..Ek.
ResolutionGraph cyclic(int n, int q);

/// Continued fraction n/q = b1 - 1/(b2 - ...).
std::vector<int> hj_fraction(int n, int q);

/// Chain of the given weights, vertices E1..Ek.
ResolutionGraph chain(const std::vector<int>& weights);

/// Dynkin graph of type A (n >= 1), D (n >= 4) or E (n = 6, 7, 8), all (-2).
ResolutionGraph ade(char type, int n);

/// Chain E1..E_{r-2} with two (-2)-leaves E_{r-1}, E_r on E1. Weights are
/// b_1..b_r, r >= 3; expects b_{r-1} = b_r = 2.
Fixture case1(const std::vector<int>& weights);

/// Chain E1..E5 with E6 hanging off E3, weights (2,3,2,2,2;2).
Fixture case2_23();
/// Chain E1..E5 with E6 hanging off E3, weights (3,2,2,2,2;2).
Fixture case2_32();

/// Elliptic vertex E (b=3, e=2) met by two index-2 curves at three points
/// each, rank 4.
Fixture e6_tilde_order();

/// Single (-4)-curve with e=2, rank 4; K_A is trivial on it.
Fixture crepant_order();

/// Named fixture lookup: e6_tilde, crepant, case1, case2_23, case2_32, cyclic_12_5.
Fixture fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Wraps a graph as an unramified order with r = 1.
OrderConfig unramified_order(const ResolutionGraph& graph);

/// Seed-deterministic log terminal graph: a chain, a case1 fork, or a star
/// with three arms, resampled until it passes is_log_terminal_graph.
ResolutionGraph random_log_terminal(std::uint64_t seed, int max_vertices, int max_weight);

/// Seed-deterministic ramification on a graph: r from {2,3,4,6}, vertex
/// indices dividing r and comparable across edges, and up to two transverse
/// ramification curves. The result always passes validate.
OrderConfig random_order(std::uint64_t seed, const ResolutionGraph& graph);

}  // namespace numrat
