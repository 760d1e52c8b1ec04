#pragma once

#include <map>

#include "numrat/model.hpp"

namespace numrat {

/// A linear function on exceptional divisors, given by its values on curves.
/// Curves not listed evaluate to zero.
struct LinearFunctional {
  std::map<VertexId, Rational> values;

  Rational operator()(const Divisor& e) const;
  /// l(E_i) = -K_A . E_i for every exceptional curve.
  static LinearFunctional minus_canonical(const OrderConfig& config);
};

/// g(E) = -E^2 + l(E).
Rational g_value(const IntersectionForm& form, const LinearFunctional& ell, const Divisor& e);

/// f(E) = -(K_A + E) . E.
Rational f_value(const OrderConfig& config, const Divisor& e);

/// chi(A (x) O_E) = (r^2 / 2) f(E) for a nonzero effective integral E.
Rational chi_restriction(const OrderConfig& config, const Divisor& e);

/// chi(A (x) O_E) built curve by curve from the exact sequences
/// 0 -> A (x) O_{E_j}(-E) -> A (x) O_{E+E_j} -> A (x) O_E -> 0, starting from
/// the per-curve values (r^2/2)(2 chi(O_C) - C . Delta_A).
Rational chi_via_recursion(const OrderConfig& config, const Divisor& e);

/// Euler characteristic of the cyclic cover of an exceptional curve given by
/// the ramification data (Riemann-Hurwitz), counting each meeting point.
Rational cover_euler_char(const OrderConfig& config, const VertexId& vertex);

/// chi(A/J) where J is the radical along the given exceptional curve.
Rational chi_A_mod_J(const OrderConfig& config, const VertexId& vertex);

}  // namespace numrat
