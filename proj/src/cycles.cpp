#include "numrat/cycles.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "numrat/discrepancy.hpp"
#include "numrat/errors.hpp"

namespace numrat {

namespace {

constexpr std::int64_t kMaxSaturationSteps = 1'000'000;

// Dense saturation loop. `allowed` marks the curves that may be added and
// against which nefness is tested; `order` lists row indices by priority.
std::vector<std::int64_t> saturate_dense(const IntersectionForm& form, std::vector<std::int64_t> x,
                                         const std::vector<bool>& allowed, const std::vector<std::size_t>& order) {
  const std::size_t n = form.dim();
  std::vector<std::int64_t> w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] += form.at(i, j) * x[j];

  for (std::int64_t step = 0;; ++step) {
    if (step > kMaxSaturationSteps) throw InvariantError("saturation loop did not terminate");
    std::size_t pick = n;
    for (auto k : order) {
      if (allowed[k] && w[k] > 0) {
        pick = k;
        break;
      }
    }
    if (pick == n) return x;
    x[pick] += 1;
    for (std::size_t i = 0; i < n; ++i) w[i] += form.at(i, pick);
  }
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

std::vector<std::int64_t> integral_dense(const IntersectionForm& form, const Divisor& d) {
  std::vector<std::int64_t> x(form.dim(), 0);
  for (const auto& [id, c] : d.coeffs()) x[form.index_of(id)] = c.to_int();
  return x;
}

Divisor to_divisor(const IntersectionForm& form, const std::vector<std::int64_t>& x) {
  Divisor d;
  for (std::size_t i = 0; i < x.size(); ++i) d.set(form.ids()[i], Rational(static_cast<long>(x[i])));
  return d;
}

void require_effective_integral(const Divisor& d, const char* what) {
  if (d.is_zero()) throw InputError(std::string(what) + ": divisor must be nonzero");
  if (!d.is_effective()) throw InputError(std::string(what) + ": divisor must be effective");
  if (!d.is_integral()) throw InputError(std::string(what) + ": divisor must be integral");
}

void require_connected(const IntersectionForm& form, const std::set<VertexId>& support, const char* what) {
  if (support.empty()) throw InputError(std::string(what) + ": empty support");
  if (connected_components(form, support).size() != 1) {
    throw InputError(std::string(what) + ": support is not connected");
  }
}

}  // namespace

Divisor numerical_cycle(const ResolutionGraph& graph, const std::set<VertexId>& support) {
  const IntersectionForm form = graph.form();
  require_connected(form, support, "numerical_cycle");
  if (!is_negative_definite(graph.subgraph(support).form())) {
    throw PreconditionError("numerical_cycle: support is not negative definite");
  }
  std::vector<bool> allowed(form.dim(), false);
  std::vector<std::int64_t> x(form.dim(), 0);
  for (const auto& id : support) {
    const auto i = form.index_of(id);
    allowed[i] = true;
    x[i] = 1;
  }
  return to_divisor(form, saturate_dense(form, std::move(x), allowed, identity_order(form.dim())));
}

Divisor numerical_cycle(const ResolutionGraph& graph) {
  const auto ids = graph.ids();
  return numerical_cycle(graph, {ids.begin(), ids.end()});
}

Divisor saturate(const ResolutionGraph& graph, const Divisor& d) {
  return saturate(graph, d, graph.ids());
}

Divisor saturate(const ResolutionGraph& graph, const Divisor& d, const std::vector<VertexId>& priority) {
  require_effective_integral(d, "saturate");
  const IntersectionForm form = graph.form();
  if (!is_negative_definite(form)) throw PreconditionError("saturate: intersection form is not negative definite");
  std::vector<std::size_t> order;
  for (const auto& id : priority) order.push_back(form.index_of(id));
  std::vector<std::size_t> check = order;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end() || check.size() != form.dim()) {
    throw InputError("saturate: priority must list every vertex exactly once");
  }
  return to_divisor(form, saturate_dense(form, integral_dense(form, d), std::vector<bool>(form.dim(), true), order));
}

std::vector<Divisor> special_divisors(const ResolutionGraph& graph, std::size_t max_supports) {
  const std::size_t n = graph.size();
  if (n > 64) throw InputError("special_divisors: graph has " + std::to_string(n) + " vertices, limit is 64");
  const IntersectionForm form = graph.form();
  if (!is_negative_definite(form)) {
    throw PreconditionError("special_divisors: intersection form is not negative definite");
  }
  std::vector<std::uint64_t> adjacency(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && form.at(i, j) != 0) adjacency[i] |= std::uint64_t{1} << j;
  auto bit = [](std::size_t i) { return std::uint64_t{1} << i; };
  auto neighbourhood = [&](std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & bit(i)) out |= adjacency[i];
    return out & ~mask;
  };

  // Each connected set is grown from its lowest vertex. A branch adds the
  // first candidate w and bans the candidates tried before it, so every set
  // is reached once.
  std::vector<std::uint64_t> masks;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t set, std::uint64_t ext,
                                                                            std::uint64_t banned) {
    if (masks.size() >= max_supports) {
      throw InputError("special_divisors: more than " + std::to_string(max_supports) + " connected supports");
    }
    masks.push_back(set);
    while (ext) {
      const std::uint64_t w = ext & (~ext + 1);
      ext &= ~w;
      grow(set | w, (ext | neighbourhood(set | w)) & ~banned, banned);
      banned |= w;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t below = bit(v) - 1;
    grow(bit(v), adjacency[v] & ~below, below | bit(v));
  }

  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(masks.size());
  for (auto mask : masks) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & bit(i)) rows.push_back(i);
    supports.push_back(std::move(rows));
  }
  std::sort(supports.begin(), supports.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  // Distinct supports give distinct cycles, since Z_num has full support.
  const auto order = identity_order(n);
  std::vector<Divisor> out;
  out.reserve(supports.size());
  for (const auto& rows : supports) {
    std::vector<bool> allowed(n, false);
    std::vector<std::int64_t> x(n, 0);
    for (auto i : rows) allowed[i] = true, x[i] = 1;
    out.push_back(to_divisor(form, saturate_dense(form, std::move(x), allowed, order)));
  }
  return out;
}

std::int64_t multiplicity(const ResolutionGraph& graph, const Divisor& d) {
  if (d.is_zero() || !d.is_effective()) throw InputError("multiplicity: divisor must be effective and nonzero");
  const auto support = d.support();
  const Divisor z = numerical_cycle(graph, support);
  const std::int64_t m = (-pair(graph.form(), z, z)).to_int();
  const ResolutionGraph sub = graph.subgraph(support);
  if (is_log_terminal_graph(sub)) {
    std::int64_t closed = 2;
    for (const auto& v : sub.vertices()) closed += v.weight() - 2;
    if (closed != m) {
      throw InvariantError("multiplicity: -D_num^2 = " + std::to_string(m) + " but 2 + sum(b-2) = " +
                           std::to_string(closed) + " on support " + d.str());
    }
  }
  return m;
}

std::int64_t min_s(const ResolutionGraph& graph, const Divisor& d) {
  if (!d.is_zero() && !d.is_effective()) throw InputError("min_s: divisor must be effective");
  if (d.is_zero()) return 0;
  const Divisor z = numerical_cycle(graph);
  std::int64_t s = 0;
  for (const auto& [id, c] : d.coeffs()) {
    const Rational zi = z[id];
    if (zi.is_zero()) throw InputError("min_s: unknown vertex '" + id + "'");
    s = std::max(s, (c / zi).ceil());
  }
  return s;
}

Decomposition decompose(const ResolutionGraph& graph, const Divisor& d) {
  require_effective_integral(d, "decompose");
  const IntersectionForm form = graph.form();
  const auto support = d.support();
  require_connected(form, support, "decompose");
  if (!is_log_terminal_graph(graph.subgraph(support))) {
    throw PreconditionError("decompose: support of " + d.str() + " does not span a log terminal graph");
  }

  const std::int64_t m = multiplicity(graph, d);
  if (m <= 2) return {d, {}};

  std::int64_t n = std::numeric_limits<std::int64_t>::max();
  for (const auto& [id, c] : d.coeffs()) {
    if (graph.vertex(id).weight() > 2) n = std::min(n, c.to_int());
  }
  if (n == std::numeric_limits<std::int64_t>::max()) {
    throw InvariantError("decompose: multiplicity > 2 but no curve with b > 2 in the support");
  }

  const Divisor dnum = numerical_cycle(graph, support);
  Decomposition out;
  out.d1 = min(Rational(static_cast<long>(n)) * dnum, d);
  const Divisor rest = d - out.d1;
  if (!rest.is_zero()) {
    for (const auto& comp : connected_components(form, rest.support())) {
      out.d2_components.push_back(rest.restricted(comp));
    }
  }

  if (out.d1.is_zero()) throw InvariantError("decompose: d1 is zero");
  if (pair(form, out.d1, rest).sign() > 0) throw InvariantError("decompose: d1 . d2 > 0 for " + d.str());
  for (const auto& c : out.d2_components) {
    if (multiplicity(graph, c) >= m) {
      throw InvariantError("decompose: component " + c.str() + " does not drop the multiplicity");
    }
  }
  return out;
}

}  // namespace numrat
