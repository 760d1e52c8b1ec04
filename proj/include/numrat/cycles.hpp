#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "numrat/model.hpp"

namespace numrat {

/// D = d1 + sum(d2_components), with d1 . (D - d1) <= 0.
struct Decomposition {
  Divisor d1;
  std::vector<Divisor> d2_components;
};

/// Smallest integral effective Z with supp Z = support and Z . E_i <= 0 for
/// every E_i in the support. Throws InputError for an empty or disconnected
/// support.
Divisor numerical_cycle(const ResolutionGraph& graph, const std::set<VertexId>& support);

/// Numerical cycle of the whole graph.
Divisor numerical_cycle(const ResolutionGraph& graph);

/// Minimal D' >= D with -D' nef over every exceptional curve. Curves are
/// added lowest vertex first.
Divisor saturate(const ResolutionGraph& graph, const Divisor& d);

/// As saturate, choosing among the curves with positive pairing the one that
/// comes first in priority (which must list every vertex).
Divisor saturate(const ResolutionGraph& graph, const Divisor& d, const std::vector<VertexId>& priority);

/// Numerical cycles of all connected vertex subsets, ordered by support size
/// and then by vertex position. Throws InputError once more than
/// max_supports connected subsets exist.
std::vector<Divisor> special_divisors(const ResolutionGraph& graph, std::size_t max_supports = 1'000'000);

/// m(D) = -D_num^2. When the support spans a log terminal graph the closed
/// form 2 + sum(b_j - 2) is checked against it.
std::int64_t multiplicity(const ResolutionGraph& graph, const Divisor& d);

/// Least s with D <= s Z_num (Z_num of the whole graph).
std::int64_t min_s(const ResolutionGraph& graph, const Divisor& d);

/// The D = D1 + D2 splitting used to reduce positivity checks to special
/// divisors. Requires the support of D to span a log terminal graph.
Decomposition decompose(const ResolutionGraph& graph, const Divisor& d);

}  // namespace numrat
