#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "numrat/adjunction.hpp"
#include "numrat/model.hpp"

namespace numrat {

enum class Method { automatic, special, bruteforce };

std::string to_string(Method m);
/// "auto", "special" or "brute"; throws InputError otherwise.
Method parse_method(const std::string& text);

/// Outcome of a positivity check of g over nonzero effective divisors.
///
/// With method bruteforce, rational=true only means no counterexample was
/// found within bound_used times the numerical cycle.
struct Verdict {
  bool rational = false;
  std::optional<Divisor> witness;
  std::optional<Rational> witness_value;  ///< g(witness) <= 0
  Method method = Method::special;
  std::optional<int> bound_used;
  std::optional<Rational> chi;  ///< (r^2/2) g(witness), set by is_numerically_rational
};

/// Default cap on the number of divisors the brute-force search may visit.
inline constexpr std::int64_t kDefaultSearchCap = 10'000'000;
inline constexpr int kDefaultBound = 4;

/// Evaluates g on every special divisor. Requires a log terminal graph
/// without smooth rational (-1)-curves and l(E_i) <= 0; otherwise throws
/// PreconditionError naming the failed hypothesis.
Verdict check_special(const ResolutionGraph& graph, const LinearFunctional& ell);

/// Searches all nonzero effective integral E <= bound * Z_num (Z_num taken per
/// connected component) in lexicographic row order and returns the first E
/// with g(E) <= 0. Subtrees whose real minimum of g is positive are skipped.
/// Throws InputError once more than `cap` nodes have been visited.
Verdict check_bruteforce(const ResolutionGraph& graph, const LinearFunctional& ell, int bound,
                         std::int64_t cap = kDefaultSearchCap);

struct RationalityOptions {
  Method method = Method::automatic;
  int bound = kDefaultBound;
  std::int64_t cap = kDefaultSearchCap;
};

/// Which hypothesis of check_special fails for (graph, ell), if any.
std::optional<std::string> special_precondition_failure(const ResolutionGraph& graph, const LinearFunctional& ell);

/// Minimalizes the config, takes l = -K_A and decides positivity of g.
Verdict is_numerically_rational(const OrderConfig& config, const RationalityOptions& opts = {});

}  // namespace numrat
