#include "numrat/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "numrat/errors.hpp"

namespace numrat {

Divisor::Divisor(std::initializer_list<std::pair<const VertexId, Rational>> init) {
  for (const auto& [id, c] : init) add(id, c);
}

Divisor::Divisor(Map coeffs) {
  for (auto& [id, c] : coeffs) add(id, c);
}

Divisor Divisor::reduced(const std::set<VertexId>& support) {
  Divisor d;
  for (const auto& id : support) d.set(id, Rational(1));
  return d;
}

Rational Divisor::operator[](const VertexId& id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void Divisor::set(const VertexId& id, const Rational& value) {
  if (value.is_zero()) {
    coeffs_.erase(id);
  } else {
    coeffs_[id] = value;
  }
}

std::set<VertexId> Divisor::support() const {
  std::set<VertexId> s;
  for (const auto& [id, c] : coeffs_) s.insert(id);
  return s;
}

bool Divisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.sign() > 0; });
}

bool Divisor::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_integer(); });
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [id, c] : o.coeffs_) add(id, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [id, c] : o.coeffs_) add(id, -c);
  return *this;
}

Divisor& Divisor::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [id, c] : coeffs_) c *= s;
  return *this;
}

bool Divisor::leq(const Divisor& o) const {
  Divisor diff = o - *this;
  return diff.is_effective();
}

Divisor min(const Divisor& a, const Divisor& b) {
  Divisor out;
  std::set<VertexId> ids = a.support();
  ids.merge(b.support());
  for (const auto& id : ids) out.set(id, std::min(a[id], b[id]));
  return out;
}

Divisor Divisor::restricted(const std::set<VertexId>& keep) const {
  Divisor out;
  for (const auto& [id, c] : coeffs_) {
    if (keep.count(id)) out.set(id, c);
  }
  return out;
}

std::string Divisor::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, c] : coeffs_) {
    if (!first) os << ',';
    first = false;
    os << id << ':' << c;
  }
  return os.str();
}

IntersectionForm::IntersectionForm(std::vector<VertexId> ids, std::vector<std::int64_t> entries)
    : ids_(std::move(ids)), entries_(std::move(entries)) {
  const std::size_t n = ids_.size();
  if (entries_.size() != n * n) throw InputError("intersection matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second) throw InputError("duplicate vertex id '" + ids_[i] + "'");
    if (at(i, i) >= 0) throw InputError("self-intersection of '" + ids_[i] + "' must be negative");
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) != at(j, i)) throw InputError("intersection matrix is not symmetric");
      if (i != j && at(i, j) < 0) throw InputError("negative intersection between distinct curves");
    }
  }
}

std::size_t IntersectionForm::index_of(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InputError("unknown vertex id '" + id + "'");
  return it->second;
}

std::vector<Rational> IntersectionForm::dense(const Divisor& d) const {
  std::vector<Rational> v(dim());
  for (const auto& [id, c] : d.coeffs()) v[index_of(id)] = c;
  return v;
}

Divisor IntersectionForm::sparse(std::span<const Rational> values) const {
  Divisor d;
  for (std::size_t i = 0; i < values.size() && i < dim(); ++i) d.set(ids_[i], values[i]);
  return d;
}

Rational pair(const IntersectionForm& form, const Divisor& a, const Divisor& b) {
  mpq_class total = 0;
  for (const auto& [ia, ca] : a.coeffs()) {
    const std::size_t i = form.index_of(ia);
    for (const auto& [ib, cb] : b.coeffs()) {
      const std::int64_t m = form.at(i, form.index_of(ib));
      if (m != 0) total += ca.raw() * cb.raw() * mpq_class(static_cast<long>(m));
    }
  }
  return Rational(std::move(total));
}

namespace {

// Fraction-free elimination; returns the k-th leading principal minor after
// step k in minors[k].
std::vector<mpz_class> leading_minors(const IntersectionForm& form) {
  const std::size_t n = form.dim();
  std::vector<mpz_class> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = static_cast<long>(form.at(i, j));
  std::vector<mpz_class> minors;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class pivot = m[k * n + k];
    minors.push_back(pivot);
    // A zero leading minor already decides the question; stop eliminating.
    if (pivot == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * pivot - m[i * n + k] * m[k * n + j]) / prev;
      }
    }
    prev = pivot;
  }
  return minors;
}

}  // namespace

bool is_negative_definite(const IntersectionForm& form) {
  const auto minors = leading_minors(form);
  if (minors.size() != form.dim()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

std::vector<Rational> solve_exact(const IntersectionForm& form, std::span<const Rational> target) {
  const std::size_t n = form.dim();
  if (target.size() != n) throw InputError("target vector has wrong length");
  std::vector<mpq_class> a(n * (n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * (n + 1) + j] = static_cast<long>(form.at(i, j));
    a[i * (n + 1) + n] = target[i].raw();
  }
  auto cell = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * (n + 1) + j]; };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(cell(p, k)) == 0) ++p;
    if (p == n) throw PreconditionError("intersection form is singular");
    if (p != k)
      for (std::size_t j = 0; j <= n; ++j) std::swap(cell(p, j), cell(k, j));
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(cell(i, k)) == 0) continue;
      const mpq_class factor = cell(i, k) / cell(k, k);
      for (std::size_t j = k; j <= n; ++j) cell(i, j) -= factor * cell(k, j);
    }
  }
  std::vector<Rational> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(mpq_class(cell(i, n) / cell(i, i)));
  return x;
}

std::vector<std::set<VertexId>> connected_components(const IntersectionForm& form,
                                                     const std::set<VertexId>& support) {
  std::vector<std::size_t> rows;
  for (const auto& id : support) rows.push_back(form.index_of(id));
  std::sort(rows.begin(), rows.end());
  std::vector<bool> seen(form.dim(), false);
  std::vector<bool> inside(form.dim(), false);
  for (auto r : rows) inside[r] = true;

  std::vector<std::set<VertexId>> out;
  for (auto start : rows) {
    if (seen[start]) continue;
    std::set<VertexId> comp;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      comp.insert(form.ids()[v]);
      for (std::size_t w = 0; w < form.dim(); ++w) {
        if (inside[w] && !seen[w] && w != v && form.at(v, w) != 0) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace numrat
