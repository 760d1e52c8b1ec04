#include "numrat/discrepancy.hpp"

#include <algorithm>

#include "numrat/errors.hpp"

namespace numrat {

std::vector<Rational> surface_discrepancies(const ResolutionGraph& graph) {
  for (const auto& v : graph.vertices()) {
    if (v.genus != 0) {
      throw PreconditionError("surface_discrepancies: vertex '" + v.id +
                              "' has positive genus; use order_discrepancies on the unramified config");
    }
  }
  const IntersectionForm form = graph.form();
  std::vector<Rational> v_i;
  v_i.reserve(graph.size());
  for (const auto& v : graph.vertices()) v_i.emplace_back(v.self_intersection + 2);
  auto alpha = solve_exact(form, v_i);
  for (auto& x : alpha) x = -x;
  return alpha;
}

std::vector<Rational> order_discrepancies(const OrderConfig& config) {
  require_valid(config);
  const IntersectionForm form = config.graph.form();
  std::vector<Rational> rhs;
  rhs.reserve(form.dim());
  for (const auto& id : form.ids()) rhs.push_back(canonical_dot(config, Divisor::curve(id)));
  return solve_exact(form, rhs);
}

Classification classify(const OrderConfig& config) {
  Classification out;
  out.a = order_discrepancies(config);
  out.ids = config.graph.ids();
  bool genus_zero = std::all_of(config.graph.vertices().begin(), config.graph.vertices().end(),
                                [](const Vertex& v) { return v.genus == 0; });
  if (genus_zero) out.alpha = surface_discrepancies(config.graph);

  out.crepant = true;
  for (std::size_t i = 0; i < out.ids.size(); ++i) {
    const Rational ae = out.a[i] * Rational(config.ram_index(out.ids[i]));
    out.ae.push_back(ae);
    if (!out.min_ae || ae < *out.min_ae) out.min_ae = ae;
    if (!out.a[i].is_zero()) out.crepant = false;
  }
  out.log_terminal = !out.min_ae || *out.min_ae > Rational(-1);

  for (const auto& v : config.graph.vertices()) {
    if (v.genus == 0 && v.self_intersection == -1 && canonical_dot(config, Divisor::curve(v.id)).sign() < 0) {
      out.non_minimal.push_back(v.id);
    }
  }
  return out;
}

bool is_log_terminal_graph(const ResolutionGraph& graph) {
  for (const auto& v : graph.vertices()) {
    if (v.genus != 0 || v.self_intersection >= 0) return false;
  }
  if (graph.empty()) return true;
  if (!is_negative_definite(graph.form())) return false;
  const auto alpha = surface_discrepancies(graph);
  return std::all_of(alpha.begin(), alpha.end(), [](const Rational& a) { return a > Rational(-1); });
}

}  // namespace numrat
