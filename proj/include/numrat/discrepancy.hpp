#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numrat/model.hpp"

namespace numrat {

struct Classification {
  std::vector<VertexId> ids;    ///< row order of a, alpha, ae
  std::vector<Rational> a;      ///< order discrepancies
  std::vector<Rational> alpha;  ///< surface discrepancies; empty when some genus is positive
  std::vector<Rational> ae;     ///< a_i * e_i
  std::optional<Rational> min_ae;  ///< empty for a smooth centre (no exceptional curves)
  bool crepant = false;
  bool log_terminal = false;
  /// Genus-0 (-1)-curves with K_A . E < 0: the resolution is not minimal.
  std::vector<VertexId> non_minimal;
};

/// alpha = -I^{-1} v with v_i = E_i^2 + 2. Throws PreconditionError for
/// positive genus or a singular form.
std::vector<Rational> surface_discrepancies(const ResolutionGraph& graph);

/// Solves I a = (K_A . E_j)_j. Throws InputError if the config is invalid.
std::vector<Rational> order_discrepancies(const OrderConfig& config);

Classification classify(const OrderConfig& config);

/// All genera zero, negative definite, and every surface discrepancy > -1.
bool is_log_terminal_graph(const ResolutionGraph& graph);

}  // namespace numrat
