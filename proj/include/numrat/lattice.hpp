#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "numrat/rational.hpp"

namespace numrat {

using VertexId = std::string;

/// Exact Q-divisor supported on exceptional curves. Stored sparsely; zero
/// coefficients are never kept, so two divisors compare equal iff they have
/// the same coefficients.
class Divisor {
 public:
  using Map = std::map<VertexId, Rational>;

  Divisor() = default;
  Divisor(std::initializer_list<std::pair<const VertexId, Rational>> init);
  explicit Divisor(Map coeffs);

  /// The reduced divisor of a single curve.
  static Divisor curve(const VertexId& id) { return Divisor({{id, Rational(1)}}); }
  /// Sum of the given curves, each with coefficient 1.
  static Divisor reduced(const std::set<VertexId>& support);

  Rational operator[](const VertexId& id) const;
  void set(const VertexId& id, const Rational& value);
  void add(const VertexId& id, const Rational& value) { set(id, (*this)[id] + value); }

  const Map& coeffs() const { return coeffs_; }
  std::set<VertexId> support() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_effective() const;
  bool is_integral() const;

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor& operator*=(const Rational& s);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(const Rational& s, Divisor d) { return d *= s; }

  /// Componentwise comparison: every coefficient of *this is <= that of o.
  bool leq(const Divisor& o) const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

  /// Componentwise minimum ("gcd" of effective divisors).
  friend Divisor min(const Divisor& a, const Divisor& b);

  /// Restriction to a subset of curves.
  Divisor restricted(const std::set<VertexId>& keep) const;

  /// "E1:2,E2:1" style rendering (empty string for zero).
  std::string str() const;

 private:
  Map coeffs_;
};

/// Symmetric integer matrix (E_i . E_j) of a configuration of exceptional
/// curves, together with the vertex ids labelling its rows.
class IntersectionForm {
 public:
  IntersectionForm() = default;
  /// Throws InputError unless entries is dim x dim (row-major), symmetric,
  /// with negative diagonal and non-negative off-diagonal entries.
  IntersectionForm(std::vector<VertexId> ids, std::vector<std::int64_t> entries);

  std::size_t dim() const { return ids_.size(); }
  const std::vector<VertexId>& ids() const { return ids_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }
  bool contains(const VertexId& id) const { return index_.count(id) != 0; }
  /// Row index of a vertex; throws InputError for unknown ids.
  std::size_t index_of(const VertexId& id) const;

  /// Dense coefficient vector in row order; throws for coefficients on unknown ids.
  std::vector<Rational> dense(const Divisor& d) const;
  Divisor sparse(std::span<const Rational> values) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::int64_t> entries_;
  std::unordered_map<VertexId, std::size_t> index_;
};

/// a^T I b.
Rational pair(const IntersectionForm& form, const Divisor& a, const Divisor& b);

/// Exact leading principal minor sign test.
bool is_negative_definite(const IntersectionForm& form);

/// Solves I x = target exactly. Throws PreconditionError if I is singular.
std::vector<Rational> solve_exact(const IntersectionForm& form, std::span<const Rational> target);

/// Partition of support into maximal subsets connected through nonzero
/// off-diagonal entries, each sorted, listed in order of their first vertex.
std::vector<std::set<VertexId>> connected_components(const IntersectionForm& form,
                                                     const std::set<VertexId>& support);

}  // namespace numrat
