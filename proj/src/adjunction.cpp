#include "numrat/adjunction.hpp"

#include <algorithm>

#include "numrat/errors.hpp"

namespace numrat {

Rational LinearFunctional::operator()(const Divisor& e) const {
  Rational total;
  for (const auto& [id, c] : e.coeffs()) {
    auto it = values.find(id);
    if (it != values.end()) total += c * it->second;
  }
  return total;
}

LinearFunctional LinearFunctional::minus_canonical(const OrderConfig& config) {
  LinearFunctional ell;
  for (const auto& id : config.graph.ids()) ell.values[id] = -canonical_dot(config, Divisor::curve(id));
  return ell;
}

Rational g_value(const IntersectionForm& form, const LinearFunctional& ell, const Divisor& e) {
  return -pair(form, e, e) + ell(e);
}

Rational f_value(const OrderConfig& config, const Divisor& e) {
  return -(canonical_dot(config, e) + pair(config.graph.form(), e, e));
}

namespace {

void require_positive_cycle(const Divisor& e) {
  if (e.is_zero()) throw InputError("chi: divisor must be nonzero");
  if (!e.is_effective() || !e.is_integral()) throw InputError("chi: divisor must be effective and integral");
}

Rational half_r2(const OrderConfig& config) {
  return Rational(static_cast<long>(config.rank_root) * config.rank_root, 2);
}

}  // namespace

Rational chi_restriction(const OrderConfig& config, const Divisor& e) {
  require_positive_cycle(e);
  return half_r2(config) * f_value(config, e);
}

Rational chi_via_recursion(const OrderConfig& config, const Divisor& e) {
  require_positive_cycle(e);
  const IntersectionForm form = config.graph.form();
  const Rational r2(static_cast<long>(config.rank_root) * config.rank_root);

  std::map<VertexId, Rational> per_curve;
  for (const auto& [id, c] : e.coeffs()) {
    const Vertex& v = config.graph.vertex(id);
    per_curve[id] = half_r2(config) * (Rational(2 * (1 - v.genus)) - delta_dot(config, Divisor::curve(id)));
  }

  // Grow the divisor one curve at a time; chi(E + E_j) = chi(E) + chi(E_j) - r^2 E_j . E.
  Divisor built;
  Rational chi;
  for (const auto& [id, c] : e.coeffs()) {
    const Divisor curve = Divisor::curve(id);
    for (std::int64_t k = 0; k < c.to_int(); ++k) {
      if (built.is_zero()) {
        chi = per_curve[id];
      } else {
        chi += per_curve[id] - r2 * pair(form, curve, built);
      }
      built += curve;
    }
  }
  return chi;
}

Rational cover_euler_char(const OrderConfig& config, const VertexId& vertex) {
  const Vertex& v = config.graph.vertex(vertex);
  const int e = config.ram_index(vertex);
  Rational correction;
  auto add = [&](int e_d, int meets) {
    if (e_d <= 1 || meets == 0) return;
    correction += (Rational(1) - Rational(1, std::min(e, e_d))) * Rational(meets);
  };
  for (const auto& [other, m] : config.graph.neighbours(vertex)) add(config.ram_index(other), m);
  for (const auto& c : config.curves) add(c.index, c.meet(vertex));
  return Rational(e * (1 - v.genus)) - Rational(e, 2) * correction;
}

Rational chi_A_mod_J(const OrderConfig& config, const VertexId& vertex) {
  const Vertex& v = config.graph.vertex(vertex);
  const int e = config.ram_index(vertex);
  const long r = config.rank_root;
  const Rational scale(r * r, 2L * e);
  return scale * (Rational(2 * (1 - v.genus)) - delta_dot(config, Divisor::curve(vertex)) +
                  (Rational(1) - Rational(1, e)) * Rational(v.self_intersection));
}

}  // namespace numrat
