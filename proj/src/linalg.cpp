#include "smb/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace smb {

SparseVector sparse_add(const SparseVector& a, const SparseVector& b, const Rational& scale) {
  if (scale == 0) return a;
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, scale * j->second);
      ++j;
    } else {
      Rational c = i->second + scale * j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector sparse_scale(SparseVector v, const Rational& c) {
  if (c == 0) return {};
  for (auto& [i, x] : v) x *= c;
  return v;
}

ImageOutsideCodomain::ImageOutsideCodomain(const TriDegree& d)
    : std::domain_error("image component of tri-degree " + d.to_string() + " lies outside the codomain"),
      degree_(d) {}

SparseVector coordinates(const Block& blk, const Polynomial& p) {
  SparseVector v;
  v.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) {
    auto idx = blk.index_of(mono);
    if (!idx) throw ImageOutsideCodomain(mono.tri_degree());
    v.emplace_back(*idx, c);
  }
  // Block bases and polynomial terms share the canonical order.
  if (!std::is_sorted(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; })) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return v;
}

Polynomial to_polynomial(const Block& blk, const SparseVector& v) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(v.size());
  for (const auto& [i, c] : v) terms.emplace_back(blk.basis().at(i), c);
  return Polynomial::from_terms(std::move(terms));
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::vector<SparseVector> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_) {
    if (!c.empty() && c.back().first >= rows_) throw std::out_of_range("matrix entry outside row range");
  }
}

Rational RationalMatrix::entry(std::size_t i, std::size_t j) const {
  const auto& c = columns_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != c.end() && it->first == i) return it->second;
  return 0;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseVector RationalMatrix::operator*(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [j, x] : v) out = sparse_add(out, columns_.at(j), x);
  return out;
}

std::vector<SparseVector> RationalMatrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, x] : columns_[j]) rows[i].emplace_back(j, x);
  }
  return rows;
}

void RationalMatrix::set_blocks(BlockPtr domain, BlockPtr codomain) {
  domain_ = std::move(domain);
  codomain_ = std::move(codomain);
}

RationalMatrix RationalMatrix::stack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("stack: column counts differ");
  std::vector<SparseVector> cols(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    cols[j] = a.column(j);
    for (const auto& [i, x] : b.column(j)) cols[j].emplace_back(i + a.rows(), x);
  }
  RationalMatrix out(a.rows() + b.rows(), std::move(cols));
  out.domain_ = a.domain_;
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Eliminates entries of `row` at pivot columns, starting at position `pos`.
void reduce(SparseVector& row, std::size_t pos, const std::vector<SparseVector>& rows,
            const std::unordered_map<std::size_t, std::size_t>& pivot_row) {
  while (pos < row.size()) {
    auto it = pivot_row.find(row[pos].first);
    if (it == pivot_row.end()) {
      ++pos;
      continue;
    }
    const Rational f = -row[pos].second;
    row = sparse_add(row, rows[it->second], f);
  }
}

// Gauss-Jordan on one connected component.
std::vector<SparseVector> rref_component(std::vector<SparseVector> input) {
  std::sort(input.begin(), input.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<SparseVector> rows;
  std::unordered_map<std::size_t, std::size_t> pivot_row;
  for (auto& r : input) {
    reduce(r, 0, rows, pivot_row);
    if (r.empty()) continue;
    const Rational inv = 1 / r.front().second;
    if (inv != 1) r = sparse_scale(std::move(r), inv);
    pivot_row.emplace(r.front().first, rows.size());
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].front().first > rows[b].front().first; });
  // Back substitution from the largest pivot down; later rows are already reduced.
  for (std::size_t idx : order) reduce(rows[idx], 1, rows, pivot_row);
  return rows;
}

}  // namespace

std::vector<SparseVector> rref(std::vector<SparseVector> rows, std::size_t ncols) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const SparseVector& r) { return r.empty(); }), rows.end());
  UnionFind uf(ncols);
  for (const auto& r : rows) {
    for (const auto& [c, x] : r) {
      if (c >= ncols) throw std::out_of_range("rref: column index out of range");
      uf.unite(r.front().first, c);
    }
  }
  std::unordered_map<std::size_t, std::vector<SparseVector>> groups;
  for (auto& r : rows) {
    const std::size_t root = uf.find(r.front().first);
    groups[root].push_back(std::move(r));
  }
  std::vector<SparseVector> out;
  for (auto& [root, g] : groups) {
    auto part = rref_component(std::move(g));
    for (auto& r : part) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  return out;
}

namespace {

SparseVector reversed(const SparseVector& v, std::size_t n) {
  SparseVector out;
  out.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.emplace_back(n - 1 - it->first, it->second);
  return out;
}

}  // namespace

Subspace::Subspace(BlockPtr ambient) : ambient_(std::move(ambient)), ambient_dim_(ambient_ ? ambient_->dim() : 0) {}

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

Subspace Subspace::from_canonical(BlockPtr ambient, std::size_t ambient_dim, std::vector<SparseVector> basis) {
  Subspace s(ambient_dim);
  s.ambient_ = std::move(ambient);
  s.basis_ = std::move(basis);
  s.pivots_.reserve(s.basis_.size());
  for (const auto& v : s.basis_) s.pivots_.push_back(v.back().first);
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<SparseVector>& vectors) {
  std::vector<SparseVector> rev;
  rev.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().first >= n) throw std::out_of_range("vector outside ambient space");
    rev.push_back(reversed(v, n));
  }
  auto r = rref(std::move(rev), n);
  std::vector<SparseVector> basis;
  basis.reserve(r.size());
  for (auto it = r.rbegin(); it != r.rend(); ++it) basis.push_back(reversed(*it, n));
  return from_canonical(nullptr, n, std::move(basis));
}

Subspace Subspace::span(BlockPtr ambient, const std::vector<SparseVector>& vectors) {
  Subspace s = span(ambient->dim(), vectors);
  s.ambient_ = std::move(ambient);
  return s;
}

Subspace Subspace::span(BlockPtr ambient, const std::vector<Polynomial>& polys) {
  std::vector<SparseVector> vs;
  vs.reserve(polys.size());
  for (const auto& p : polys) vs.push_back(coordinates(*ambient, p));
  return span(std::move(ambient), vs);
}

Subspace Subspace::whole(BlockPtr ambient) {
  std::vector<SparseVector> basis(ambient->dim());
  for (std::size_t i = 0; i < basis.size(); ++i) basis[i].emplace_back(i, 1);
  const std::size_t n = ambient->dim();
  return from_canonical(std::move(ambient), n, std::move(basis));
}

std::vector<Polynomial> Subspace::basis_polynomials() const {
  if (!ambient_) throw std::logic_error("subspace has no ambient block");
  std::vector<Polynomial> out;
  out.reserve(basis_.size());
  for (const auto& v : basis_) out.push_back(to_polynomial(*ambient_, v));
  return out;
}

SparseVector Subspace::residual(SparseVector v) const {
  std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(v.size()) - 1;
  while (pos >= 0) {
    const std::size_t c = v[pos].first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    if (it == pivots_.end() || *it != c) {
      --pos;
      continue;
    }
    const std::size_t tail = v.size() - 1 - pos;
    const Rational f = -v[pos].second;
    v = sparse_add(v, basis_[it - pivots_.begin()], f);
    pos = static_cast<std::ptrdiff_t>(v.size()) - 1 - static_cast<std::ptrdiff_t>(tail);
  }
  return v;
}

bool Subspace::contains(const SparseVector& v) const { return residual(v).empty(); }

bool Subspace::contains(const Polynomial& p) const {
  if (!ambient_) throw std::logic_error("subspace has no ambient block");
  SparseVector v;
  try {
    v = coordinates(*ambient_, p);
  } catch (const ImageOutsideCodomain&) {
    return false;
  }
  return contains(v);
}

bool Subspace::same_ambient(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) return false;
  if (ambient_ && other.ambient_) return *ambient_ == *other.ambient_;
  return true;
}

RationalMatrix matrix_of(const LinearOperator& op, const BlockPtr& domain, const BlockPtr& codomain) {
  std::vector<SparseVector> cols;
  cols.reserve(domain->dim());
  for (const auto& mono : domain->basis()) cols.push_back(coordinates(*codomain, apply(op, mono)));
  RationalMatrix m(codomain->dim(), std::move(cols));
  m.set_blocks(domain, codomain);
  return m;
}

std::size_t rank(const RationalMatrix& m) { return rref(m.row_vectors(), m.cols()).size(); }

Subspace nullspace(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  const auto r = rref(m.row_vectors(), n);
  std::vector<bool> is_pivot(n, false);
  std::vector<SparseVector> by_col(n);
  for (const auto& row : r) {
    const std::size_t p = row.front().first;
    is_pivot[p] = true;
    for (std::size_t k = 1; k < row.size(); ++k) by_col[row[k].first].emplace_back(p, -row[k].second);
  }
  std::vector<SparseVector> basis;
  basis.reserve(n - r.size());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v = std::move(by_col[f]);
    v.emplace_back(f, 1);
    basis.push_back(std::move(v));
  }
  return Subspace::from_canonical(m.domain(), n, std::move(basis));
}

Subspace image(const RationalMatrix& m) {
  std::vector<SparseVector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  Subspace s = Subspace::span(m.rows(), cols);
  return Subspace::from_canonical(m.codomain(), m.rows(), s.basis());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) { return subspace_sum(std::vector<Subspace>{a, b}); }

Subspace subspace_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw std::invalid_argument("subspace_sum of nothing");
  std::vector<SparseVector> all;
  BlockPtr amb;
  for (const auto& p : parts) {
    if (!p.same_ambient(parts.front())) throw AmbientMismatch();
    if (!amb) amb = p.ambient();
    all.insert(all.end(), p.basis().begin(), p.basis().end());
  }
  Subspace s = Subspace::span(parts.front().ambient_dim(), all);
  return Subspace::from_canonical(amb, s.ambient_dim(), s.basis());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (!a.same_ambient(b)) throw AmbientMismatch();
  const BlockPtr amb = a.ambient() ? a.ambient() : b.ambient();
  if (a.is_zero() || b.is_zero()) return Subspace::from_canonical(amb, a.ambient_dim(), {});
  // Kernel of [A | B]: pairs (c, d) with sum c_i a_i = -sum d_j b_j.
  std::vector<SparseVector> cols = a.basis();
  cols.insert(cols.end(), b.basis().begin(), b.basis().end());
  const RationalMatrix m(a.ambient_dim(), std::move(cols));
  const Subspace k = nullspace(m);
  std::vector<SparseVector> vs;
  vs.reserve(k.dim());
  for (const auto& kv : k.basis()) {
    SparseVector w;
    for (const auto& [i, c] : kv) {
      if (i >= a.dim()) break;
      w = sparse_add(w, a.basis()[i], c);
    }
    vs.push_back(std::move(w));
  }
  Subspace s = Subspace::span(a.ambient_dim(), vs);
  return Subspace::from_canonical(amb, s.ambient_dim(), s.basis());
}

bool is_direct_sum(const std::vector<Subspace>& parts, const Subspace& target) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!p.same_ambient(target)) throw AmbientMismatch();
    total += p.dim();
  }
  if (parts.empty()) return target.is_zero();
  const Subspace s = subspace_sum(parts);
  return total == s.dim() && s.dim() == target.dim() && s.basis() == target.basis();
}

Subspace apply_to_subspace(const LinearOperator& op, const Subspace& sub, const BlockPtr& codomain) {
  std::vector<SparseVector> vs;
  vs.reserve(sub.dim());
  for (const auto& p : sub.basis_polynomials()) vs.push_back(coordinates(*codomain, apply(op, p)));
  return Subspace::span(codomain, vs);
}

}  // namespace smb
