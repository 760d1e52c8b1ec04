// Shared fixtures for the unit and acceptance suites.
#pragma once

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "numrat/birational.hpp"
#include "numrat/catalogue.hpp"
#include "numrat/discrepancy.hpp"
#include "numrat/errors.hpp"

namespace support {

struct NamedGraph {
  std::string name;
  numrat::ResolutionGraph graph;
};

/// Catalogue graphs up to the given size: cyclic chains with n <= 30, ADE
/// graphs, the two case2 graphs and a spread of case1 forks.
inline std::vector<NamedGraph> catalogue_graphs(std::size_t max_vertices) {
  std::vector<NamedGraph> out;
  auto keep = [&](std::string name, numrat::ResolutionGraph g) {
    if (g.size() <= max_vertices) out.push_back({std::move(name), std::move(g)});
  };
  for (int n = 2; n <= 30; ++n) {
    for (int q = 1; q < n; ++q) {
      if (std::gcd(n, q) == 1) keep("cyclic(" + std::to_string(n) + "," + std::to_string(q) + ")", numrat::cyclic(n, q));
    }
  }
  for (int n = 1; n <= 8; ++n) keep("A" + std::to_string(n), numrat::ade('A', n));
  for (int n = 4; n <= 8; ++n) keep("D" + std::to_string(n), numrat::ade('D', n));
  for (int n = 6; n <= 8; ++n) keep("E" + std::to_string(n), numrat::ade('E', n));
  keep("case2_23", numrat::case2_23().config.graph);
  keep("case2_32", numrat::case2_32().config.graph);
  const std::vector<std::vector<int>> forks = {
      {2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}, {2, 3, 2, 2}, {4, 2, 2, 2}, {2, 2, 3, 2, 2}, {2, 2, 2, 2, 2, 2}, {2, 5, 3, 2, 2}};
  for (const auto& w : forks) {
    std::string name = "case1(";
    for (std::size_t i = 0; i < w.size(); ++i) name += (i ? "," : "") + std::to_string(w[i]);
    keep(name + ")", numrat::case1(w).config.graph);
  }
  return out;
}

/// Unramified orders and the order fixtures, for checks quantified over
/// "catalogue configs".
inline std::vector<numrat::OrderConfig> catalogue_configs(std::size_t max_vertices) {
  std::vector<numrat::OrderConfig> out;
  for (const auto& g : catalogue_graphs(max_vertices)) out.push_back(numrat::unramified_order(g.graph));
  out.push_back(numrat::e6_tilde_order().config);
  out.push_back(numrat::crepant_order().config);
  return out;
}

/// Every centre blowup accepts on this config whose result is still a valid
/// configuration: general points of components and transverse meetings of two
/// components, plus a general point of the surface when nothing is exceptional.
inline std::vector<numrat::BlowupCenter> admissible_centres(const numrat::OrderConfig& c) {
  std::vector<numrat::BlowupCenter> candidates = {{}};
  for (const auto& id : c.graph.ids()) candidates.push_back({{id}});
  for (const auto& curve : c.curves) {
    candidates.push_back({{curve.id}});
    for (const auto& [v, m] : curve.meets) candidates.push_back({{curve.id, v}});
    for (const auto& [other, m] : curve.crosses) {
      if (curve.id < other) candidates.push_back({{curve.id, other}});
    }
  }
  for (const auto& id : c.graph.ids()) {
    for (const auto& [other, m] : c.graph.neighbours(id)) {
      if (id < other) candidates.push_back({{id, other}});
    }
  }
  std::vector<numrat::BlowupCenter> out;
  for (auto& centre : candidates) {
    try {
      if (numrat::validate(numrat::blowup(c, centre).first).ok()) out.push_back(std::move(centre));
    } catch (const numrat::PreconditionError&) {
    }
  }
  return out;
}

/// A tower of `steps` blowups at uniformly drawn admissible centres.
inline numrat::Tower random_tower(std::mt19937_64& rng, const numrat::OrderConfig& base, int steps) {
  numrat::Tower t{base, {}, base};
  for (int k = 0; k < steps; ++k) {
    const auto centres = admissible_centres(t.top);
    std::uniform_int_distribution<std::size_t> pick(0, centres.size() - 1);
    auto [next, map] = numrat::blowup(t.top, centres[pick(rng)]);
    t.top = std::move(next);
    t.maps.push_back(std::move(map));
  }
  return t;
}

}  // namespace support
