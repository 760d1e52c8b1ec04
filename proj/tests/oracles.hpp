// Independent reference computations for the tests. Nothing here calls the
// algorithms under test; inputs are read off the graph as dense matrices.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "numrat/catalogue.hpp"
#include "numrat/model.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<mpq_class>>;
using IntVec = std::vector<std::int64_t>;

inline Matrix dense(const numrat::ResolutionGraph& g) {
  const auto ids = g.ids();
  Matrix m(ids.size(), std::vector<mpq_class>(ids.size(), 0));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      m[i][j] = i == j ? g.vertex(ids[i]).self_intersection : g.meet(ids[i], ids[j]);
    }
  }
  return m;
}

/// Laplace expansion along the first row.
inline mpq_class det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpq_class total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const mpq_class term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return total;
}

/// Sylvester: (-1)^k det of the leading k x k block > 0 for every k.
inline bool negative_definite(const Matrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    Matrix lead(k, std::vector<mpq_class>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
    const mpq_class d = det(lead);
    if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) return false;
  }
  return true;
}

/// Cramer's rule.
inline std::vector<mpq_class> solve(const Matrix& m, const std::vector<mpq_class>& b) {
  const mpq_class d = det(m);
  std::vector<mpq_class> x(m.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    Matrix mc = m;
    for (std::size_t r = 0; r < m.size(); ++r) mc[r][c] = b[r];
    x[c] = det(mc) / d;
  }
  return x;
}

inline mpq_class quad(const Matrix& m, const IntVec& x, const IntVec& y) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += m[i][j] * x[i] * y[j];
  return s;
}

/// Calls f on every vector with 0 <= x_i <= upper_i (lexicographic, last
/// coordinate fastest) until f returns true.
inline bool for_each_box(const IntVec& upper, const std::function<bool(const IntVec&)>& f) {
  IntVec x(upper.size(), 0);
  for (;;) {
    if (f(x)) return true;
    std::size_t k = upper.size();
    while (k > 0) {
      --k;
      if (x[k] < upper[k]) {
        ++x[k];
        std::fill(x.begin() + static_cast<long>(k) + 1, x.end(), 0);
        break;
      }
      if (k == 0) return false;
    }
    if (upper.empty()) return false;
  }
}

/// The numerical cycle of the rows in `support`, found by listing every
/// candidate with coefficients in [1, cmax] on the support and taking the
/// componentwise minimum of the admissible ones.
inline std::optional<IntVec> numerical_cycle(const Matrix& m, const std::vector<bool>& support, std::int64_t cmax) {
  const std::size_t n = m.size();
  IntVec upper(n, 0);
  for (std::size_t i = 0; i < n; ++i) upper[i] = support[i] ? cmax - 1 : 0;
  std::optional<IntVec> best;
  for_each_box(upper, [&](const IntVec& off) {
    IntVec z(n, 0);
    for (std::size_t i = 0; i < n; ++i) z[i] = support[i] ? off[i] + 1 : 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!support[i]) continue;
      mpq_class s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[i][j] * z[j];
      if (s > 0) return false;
    }
    if (!best) {
      best = z;
    } else {
      for (std::size_t i = 0; i < n; ++i) (*best)[i] = std::min((*best)[i], z[i]);
    }
    return false;
  });
  return best;
}

/// Value of the continued fraction b1 - 1/(b2 - 1/(...)).
inline mpq_class hj_value(const std::vector<int>& b) {
  mpq_class v = b.back();
  for (std::size_t i = b.size() - 1; i-- > 0;) v = mpq_class(b[i]) - 1 / v;
  return v;
}

/// g(x) = -x^T I x + l.x evaluated by hand.
inline mpq_class g(const Matrix& m, const std::vector<mpq_class>& ell, const IntVec& x) {
  mpq_class s = -quad(m, x, x);
  for (std::size_t i = 0; i < x.size(); ++i) s += ell[i] * x[i];
  return s;
}

/// First nonzero x in the box (lexicographic) with g(x) <= 0, by plain enumeration.
inline std::optional<IntVec> first_nonpositive(const Matrix& m, const std::vector<mpq_class>& ell, const IntVec& upper) {
  std::optional<IntVec> hit;
  for_each_box(upper, [&](const IntVec& x) {
    if (std::all_of(x.begin(), x.end(), [](auto c) { return c == 0; })) return false;
    if (g(m, ell, x) <= 0) {
      hit = x;
      return true;
    }
    return false;
  });
  return hit;
}

/// K_A . E_i computed from the definitions: b + 2g - 2 plus the
/// ramification terms read straight from the config.
inline mpq_class canonical_dot(const numrat::OrderConfig& c, const numrat::VertexId& id) {
  const auto& v = c.graph.vertex(id);
  mpq_class k = -v.self_intersection + 2 * v.genus - 2;
  for (const auto& w : c.graph.vertices()) {
    const mpq_class coeff = 1 - mpq_class(1, c.ram_index(w.id));
    const int meet = w.id == id ? v.self_intersection : c.graph.meet(w.id, id);
    k += coeff * meet;
  }
  for (const auto& curve : c.curves) k += (1 - mpq_class(1, curve.index)) * curve.meet(id);
  return k;
}

inline IntVec to_vec(const numrat::ResolutionGraph& g, const numrat::Divisor& d) {
  IntVec x;
  for (const auto& id : g.ids()) x.push_back(d[id].to_int());
  return x;
}

inline numrat::Divisor to_divisor(const numrat::ResolutionGraph& g, const IntVec& x) {
  numrat::Divisor d;
  const auto ids = g.ids();
  for (std::size_t i = 0; i < x.size(); ++i) d.set(ids[i], numrat::Rational(static_cast<long>(x[i])));
  return d;
}

inline numrat::Rational to_rational(const mpq_class& q) { return numrat::Rational(q); }

}  // namespace oracle
