#include "numrat/rationality.hpp"

#include <numeric>

#include "numrat/birational.hpp"
#include "numrat/cycles.hpp"
#include "numrat/discrepancy.hpp"
#include "numrat/errors.hpp"

namespace numrat {

std::string to_string(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::special: return "special";
    case Method::bruteforce: return "brute";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "auto") return Method::automatic;
  if (text == "special") return Method::special;
  if (text == "brute" || text == "bruteforce") return Method::bruteforce;
  throw InputError("unknown method '" + text + "' (expected auto, special or brute)");
}

std::optional<std::string> special_precondition_failure(const ResolutionGraph& graph, const LinearFunctional& ell) {
  if (!is_log_terminal_graph(graph)) return "graph is not log terminal";
  for (const auto& v : graph.vertices()) {
    if (ell(Divisor::curve(v.id)).sign() > 0) return "l(" + v.id + ") > 0";
  }
  for (const auto& v : graph.vertices()) {
    if (v.genus == 0 && v.self_intersection == -1) return "graph is not minimal ('" + v.id + "' is a (-1)-curve)";
  }
  return std::nullopt;
}

Verdict check_special(const ResolutionGraph& graph, const LinearFunctional& ell) {
  if (auto failure = special_precondition_failure(graph, ell)) {
    throw PreconditionError("check_special: " + *failure);
  }
  Verdict v;
  v.method = Method::special;
  v.rational = true;
  if (graph.empty()) return v;
  const IntersectionForm form = graph.form();
  for (const auto& d : special_divisors(graph)) {
    const Rational g = g_value(form, ell, d);
    if (g.sign() <= 0) {
      v.rational = false;
      v.witness = d;
      v.witness_value = g;
      break;
    }
  }
  return v;
}

namespace {

__extension__ typedef __int128 i128;

// Depth-first search over the box in lexicographic order. Values are scaled
// by L, the lcm of the denominators of l, so everything stays integral. A
// prefix is skipped when g restricted to it is positive for every real
// completion: with Q = -I and the free block F, that minimum is
// fixed - b^T Q_FF^{-1} b, and after clearing denominators the test is
// 4 L D fixed' > b'^T (D Q_FF^{-1}) b' with fixed' = L fixed, b' = 2 L b.
class Search {
 public:
  Search(const IntersectionForm& form, const LinearFunctional& ell, std::vector<std::int64_t> upper, std::int64_t cap)
      : n_(form.dim()), upper_(std::move(upper)), cap_(cap), x_(n_, 0) {
    for (const auto& id : form.ids()) scale_ = std::lcm(scale_, ell(Divisor::curve(id)).denominator());
    q_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) q_[i * n_ + j] = -form.at(i, j);
      lin_.push_back((ell(Divisor::curve(form.ids()[i])) * Rational(static_cast<long>(scale_))).to_int());
    }
    prune_ = build_inverses(form);
  }

  /// Lexicographically least nonzero x with g(x) <= 0.
  std::optional<std::vector<std::int64_t>> run() {
    visit(0);
    return found_;
  }

 private:
  struct Block {
    std::int64_t clear = 1;            // D: clears the denominators of Q_FF^{-1}
    std::vector<std::int64_t> scaled;  // D Q_FF^{-1}, row-major
  };

  bool build_inverses(const IntersectionForm& form) {
    std::int64_t ub = 1;
    std::int64_t row = 0;
    std::int64_t lmax = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      ub = std::max(ub, upper_[i]);
      std::int64_t r = 0;
      for (std::size_t j = 0; j < n_; ++j) r += std::abs(q_[i * n_ + j]);
      row = std::max(row, r);
      lmax = std::max(lmax, std::abs(lin_[i]));
    }
    const mpz_class limit = mpz_class(1) << 100;
    const mpz_class big_n(static_cast<long>(n_));
    const mpz_class bmax = 2 * mpz_class(static_cast<long>(scale_)) * row * ub + lmax;
    const mpz_class fmax = mpz_class(static_cast<long>(scale_)) * row * ub * ub * big_n + big_n * lmax * ub;

    for (std::size_t k = 0; k < n_; ++k) {
      std::vector<VertexId> ids(form.ids().begin() + static_cast<long>(k), form.ids().end());
      const std::size_t m = n_ - k;
      std::vector<std::int64_t> entries;
      for (std::size_t i = k; i < n_; ++i)
        for (std::size_t j = k; j < n_; ++j) entries.push_back(form.at(i, j));
      const IntersectionForm sub(ids, entries);
      std::vector<Rational> inv(m * m);
      for (std::size_t c = 0; c < m; ++c) {
        std::vector<Rational> unit(m, Rational(0));
        unit[c] = Rational(-1);  // Q_FF = -I_FF
        const auto col = solve_exact(sub, unit);
        for (std::size_t r = 0; r < m; ++r) inv[r * m + c] = col[r];
      }
      Block block;
      mpz_class clear = 1;
      for (const auto& v : inv) mpz_lcm(clear.get_mpz_t(), clear.get_mpz_t(), v.raw().get_den_mpz_t());
      mpz_class amax = 0;
      for (const auto& v : inv) {
        const mpz_class a = abs(mpq_class(v.raw() * clear).get_num());
        if (a > amax) amax = a;
      }
      if (!clear.fits_slong_p() || !amax.fits_slong_p()) return false;
      if (big_n * big_n * amax * bmax * bmax >= limit || 4 * mpz_class(static_cast<long>(scale_)) * clear * fmax >= limit) {
        return false;
      }
      block.clear = clear.get_si();
      for (const auto& v : inv) block.scaled.push_back(mpq_class(v.raw() * clear).get_num().get_si());
      blocks_.push_back(std::move(block));
    }
    return true;
  }

  void visit(std::size_t k) {
    if (++visited_ > cap_) {
      throw InputError("brute force search exceeds " + std::to_string(cap_) + " divisors; use a smaller bound");
    }
    if (k == n_) {
      bool zero = true;
      for (auto c : x_) zero = zero && c == 0;
      if (!zero && scaled_g() <= 0) found_ = x_;
      return;
    }
    if (prune_ && completions_positive(k)) return;
    for (std::int64_t v = 0; v <= upper_[k] && !found_; ++v) {
      x_[k] = v;
      visit(k + 1);
    }
    x_[k] = 0;
  }

  i128 scaled_g() const {
    i128 quad = 0;
    i128 lin = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x_[i] == 0) continue;
      lin += static_cast<i128>(lin_[i]) * x_[i];
      for (std::size_t j = 0; j < n_; ++j) quad += static_cast<i128>(q_[i * n_ + j]) * x_[i] * x_[j];
    }
    return quad * scale_ + lin;
  }

  bool completions_positive(std::size_t k) const {
    i128 fixed = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (x_[i] == 0) continue;
      fixed += static_cast<i128>(lin_[i]) * x_[i];
      for (std::size_t j = 0; j < k; ++j) fixed += static_cast<i128>(scale_) * q_[i * n_ + j] * x_[i] * x_[j];
    }
    const std::size_t m = n_ - k;
    std::vector<i128> b(m);
    for (std::size_t f = k; f < n_; ++f) {
      i128 s = lin_[f];
      for (std::size_t i = 0; i < k; ++i) s += static_cast<i128>(2) * scale_ * q_[f * n_ + i] * x_[i];
      b[f - k] = s;
    }
    const Block& blk = blocks_[k];
    i128 quad = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (b[r] == 0) continue;
      i128 row = 0;
      for (std::size_t c = 0; c < m; ++c) row += static_cast<i128>(blk.scaled[r * m + c]) * b[c];
      quad += b[r] * row;
    }
    return static_cast<i128>(4) * scale_ * blk.clear * fixed > quad;
  }

  std::size_t n_;
  std::vector<std::int64_t> upper_;
  std::int64_t cap_;
  std::vector<std::int64_t> x_;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> q_;
  std::vector<std::int64_t> lin_;
  std::vector<Block> blocks_;
  bool prune_ = false;
  std::int64_t visited_ = 0;
  std::optional<std::vector<std::int64_t>> found_;
};

}  // namespace

Verdict check_bruteforce(const ResolutionGraph& graph, const LinearFunctional& ell, int bound, std::int64_t cap) {
  if (bound < 1) throw InputError("check_bruteforce: bound must be at least 1");
  Verdict v;
  v.method = Method::bruteforce;
  v.bound_used = bound;
  v.rational = true;
  if (graph.empty()) return v;

  const IntersectionForm form = graph.form();
  if (!is_negative_definite(form)) throw PreconditionError("check_bruteforce: intersection form is not negative definite");
  const auto ids = graph.ids();
  Divisor z;
  for (const auto& component : connected_components(form, {ids.begin(), ids.end()})) {
    z += numerical_cycle(graph, component);
  }
  std::vector<std::int64_t> upper;
  for (const auto& id : form.ids()) upper.push_back(z[id].to_int() * bound);

  Search search(form, ell, std::move(upper), cap);
  if (auto hit = search.run()) {
    Divisor w;
    for (std::size_t i = 0; i < hit->size(); ++i) w.set(form.ids()[i], Rational(static_cast<long>((*hit)[i])));
    v.rational = false;
    v.witness = w;
    v.witness_value = g_value(form, ell, w);
    if (v.witness_value->sign() > 0) throw InvariantError("brute force witness has positive g");
  }
  return v;
}

Verdict is_numerically_rational(const OrderConfig& config, const RationalityOptions& opts) {
  require_valid(config);
  const auto [minimal, tower] = minimalize(config);
  const LinearFunctional ell = LinearFunctional::minus_canonical(minimal);
  const auto failure = special_precondition_failure(minimal.graph, ell);

  Verdict v;
  switch (opts.method) {
    case Method::special:
      v = check_special(minimal.graph, ell);
      break;
    case Method::bruteforce:
      v = check_bruteforce(minimal.graph, ell, opts.bound, opts.cap);
      break;
    case Method::automatic:
      v = failure ? check_bruteforce(minimal.graph, ell, opts.bound, opts.cap) : check_special(minimal.graph, ell);
      break;
  }
  if (v.witness) {
    const long r = minimal.rank_root;
    v.chi = Rational(r * r, 2) * *v.witness_value;
  }
  return v;
}

}  // namespace numrat
