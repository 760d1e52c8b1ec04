#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "numrat/lattice.hpp"

namespace numrat {

using CurveId = std::string;

struct Vertex {
  VertexId id;
  int self_intersection = -2;  ///< E_i^2, negative
  int genus = 0;

  /// b_i = -E_i^2.
  int weight() const { return -self_intersection; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Weighted dual graph of the exceptional curves of a resolution.
///
/// Edges are kept keyed by the ordered pair (a, b) with a < b, so two graphs
/// with the same edges compare equal regardless of insertion order.
class ResolutionGraph {
 public:
  using EdgeKey = std::pair<VertexId, VertexId>;

  ResolutionGraph() = default;

  /// Throws InputError on duplicate ids.
  void add_vertex(Vertex v);
  /// Adds mult to the intersection number of a and b; throws InputError for
  /// unknown vertices, self-edges or non-positive mult.
  void add_edge(const VertexId& a, const VertexId& b, int mult = 1);
  /// Sets E_a.E_b (removing the edge when zero).
  void set_edge(const VertexId& a, const VertexId& b, int mult);
  void remove_vertex(const VertexId& id);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::map<EdgeKey, int>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool contains(const VertexId& id) const;
  const Vertex& vertex(const VertexId& id) const;
  Vertex& vertex(const VertexId& id);
  std::vector<VertexId> ids() const;
  /// E_a . E_b for a != b (0 when not adjacent).
  int meet(const VertexId& a, const VertexId& b) const;
  /// Neighbours with their intersection multiplicity, in vertex order.
  std::vector<std::pair<VertexId, int>> neighbours(const VertexId& id) const;

  /// The intersection matrix. Throws InputError if it violates the sign
  /// conventions (non-negative diagonal).
  IntersectionForm form() const;

  /// Induced subgraph on the given vertices (vertex order preserved).
  ResolutionGraph subgraph(const std::set<VertexId>& keep) const;

  /// Same vertices and edges; vertex order is ignored.
  friend bool operator==(const ResolutionGraph& a, const ResolutionGraph& b);

 private:
  static EdgeKey key(const VertexId& a, const VertexId& b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

  std::vector<Vertex> vertices_;
  std::map<EdgeKey, int> edges_;
};

/// A non-exceptional component of the ramification divisor.
struct RamCurve {
  CurveId id;
  int index = 2;                          ///< e_C >= 2
  std::map<VertexId, int> meets;          ///< C . E_i
  std::map<VertexId, int> distinct_points;  ///< number of points of C meeting E_i; defaults to meets
  std::map<CurveId, int> crosses;         ///< C . C' for other ramification curves

  int meet(const VertexId& v) const;
  int points(const VertexId& v) const;
  int cross(const CurveId& c) const;
  friend bool operator==(const RamCurve&, const RamCurve&) = default;
};

/// Graph + ramification data + rank of an order on a resolution.
struct OrderConfig {
  ResolutionGraph graph;
  std::map<VertexId, int> exc_ram;  ///< e_i; absent means 1
  std::vector<RamCurve> curves;
  int rank_root = 1;                ///< r, the order has rank r^2

  int ram_index(const VertexId& v) const;
  const RamCurve& curve(const CurveId& id) const;
  RamCurve& curve(const CurveId& id);
  bool has_curve(const CurveId& id) const;

  /// Replaces e_i = 1 entries by absence so equality is structural.
  void normalize();

  friend bool operator==(const OrderConfig& a, const OrderConfig& b);
};

struct Violation {
  std::string code;
  std::string location;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Graph invariants, divisibility by r and the terminal node conditions.
ValidationReport validate(const OrderConfig& config);

/// Throws InputError listing all violations unless validate(config).ok().
void require_valid(const OrderConfig& config);

/// Delta_A . E.
Rational delta_dot(const OrderConfig& config, const Divisor& e);

/// K_Z . E_i = b_i + 2 g_i - 2, extended linearly.
Rational surface_canonical_dot(const ResolutionGraph& graph, const Divisor& e);

/// K_A . E = K_Z . E + Delta_A . E.
Rational canonical_dot(const OrderConfig& config, const Divisor& e);

/// The same configuration with every ramification index set to 1 and the
/// ramification curves dropped.
OrderConfig unramified(const OrderConfig& config);

}  // namespace numrat
