#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "smb/catalog.hpp"
#include "smb/linalg.hpp"

using namespace smb;

namespace {

// Dense reference rank by plain Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

struct Random {
  std::mt19937 rng;
  explicit Random(unsigned seed) : rng(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  SparseVector vector(std::size_t n, double density) {
    SparseVector v;
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < n; ++i) {
      if (!keep(rng)) continue;
      const int x = uniform(-3, 3);
      if (x != 0) v.emplace_back(i, x);
    }
    return v;
  }
};

std::vector<std::vector<Rational>> dense(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, x] : m.column(j)) a[i][j] = x;
  return a;
}

}  // namespace

TEST_CASE("matrix_of examples") {
  const OperatorCatalog c(6);
  auto b = make_block(6, {{1, 0, 1}});
  const auto id = matrix_of(LinearOperator::identity(), b, b);
  for (std::size_t j = 0; j < b->dim(); ++j) {
    REQUIRE(id.column(j).size() == 1);
    CHECK(id.column(j)[0].first == j);
    CHECK(id.column(j)[0].second == 1);
  }

  auto p2 = make_block(6, {{0, 0, 2}});
  auto p0 = make_block(6, {{0, 0, 0}});
  const auto lap = matrix_of(c["Delta_z"], p2, p0);
  CHECK(lap.rows() == 1);
  CHECK(lap.cols() == 21);
  for (std::size_t j = 0; j < 21; ++j) {
    const Monomial& mono = p2->basis()[j];
    bool square = false;
    for (int i = 1; i <= 6; ++i) square = square || mono.exponent(VariableId::z(i)) == 2;
    CHECK(lap.entry(0, j) == (square ? 2 : 0));
  }

  // D_s(x_i z_j) = -delta_ij.
  const auto ds = matrix_of(c["D_s"], b, p0);
  for (std::size_t j = 0; j < b->dim(); ++j) {
    const Monomial& mono = b->basis()[j];
    bool diag = false;
    for (int i = 1; i <= 6; ++i) diag = diag || (mono.exponent(VariableId::x(i)) == 1 && mono.exponent(VariableId::z(i)) == 1);
    CHECK(ds.entry(0, j) == (diag ? -1 : 0));
  }
  CHECK(rank(ds) == 1);

  CHECK_THROWS_AS(matrix_of(c["Delta_z"], p2, b), ImageOutsideCodomain);
}

TEST_CASE("nullspace and rank examples") {
  const OperatorCatalog c(6);
  auto b = make_block(6, {{0, 1, 1}});
  CHECK(nullspace(matrix_of(LinearOperator::identity(), b, b)).is_zero());
  auto p2 = make_block(6, {{0, 0, 2}});
  auto p0 = make_block(6, {{0, 0, 0}});
  const auto h2 = nullspace(matrix_of(c["Delta_z"], p2, p0));
  CHECK(h2.dim() == 20);
  for (const auto& p : h2.basis_polynomials()) CHECK(apply(c["Delta_z"], p).is_zero());
  const RationalMatrix zero(7, 7);
  CHECK(nullspace(zero).dim() == 7);
  CHECK(rank(zero) == 0);
}

TEST_CASE("subspace lattice examples") {
  const OperatorCatalog c(6);
  auto blk = make_block(6, {{1, 0, 2}, {1, 0, 4}, {0, 1, 2}});
  Random r(4);
  std::vector<SparseVector> vs;
  for (int i = 0; i < 5; ++i) vs.push_back(r.vector(blk->dim(), 0.02));
  const Subspace v = Subspace::span(blk, vs);
  CHECK(subspace_sum(v, Subspace(blk)) == v);
  CHECK(subspace_intersect(v, v) == v);

  const Polynomial h = parse_polynomial("z1*z2");
  const Polynomial a = multiply_by(h, VariableId::x(1));
  const Polynomial b = apply(c["Pi_L"], multiply_by(h, VariableId::y(1)));
  const Subspace sa = Subspace::span(blk, std::vector<Polynomial>{a});
  const Subspace sb = Subspace::span(blk, std::vector<Polynomial>{b});
  CHECK(is_direct_sum({sa, sb}, subspace_sum(sa, sb)));
  CHECK_FALSE(is_direct_sum({sa, sa}, sa));

  auto other = make_block(6, {{1, 0, 2}});
  CHECK_THROWS_AS(subspace_sum(Subspace(other), v), AmbientMismatch);
}

TEST_CASE("rank-nullity on random sparse matrices") {
  Random r(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = r.uniform(1, 60);
    const std::size_t cols = r.uniform(1, 60);
    const double density = 0.02 + 0.3 * r.uniform(0, 10) / 10.0;
    std::vector<SparseVector> cs;
    for (std::size_t j = 0; j < cols; ++j) cs.push_back(r.vector(rows, density));
    const RationalMatrix m(rows, cs);
    const std::size_t rk = rank(m);
    const Subspace k = nullspace(m);
    CHECK(rk + k.dim() == cols);
    CHECK(rk == dense_rank(dense(m)));
    CHECK(image(m).dim() == rk);
    for (const auto& v : k.basis()) CHECK((m * v).empty());
  }
}

TEST_CASE("dimension formula for sum and intersection") {
  Random r(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = r.uniform(2, 40);
    std::vector<SparseVector> shared;
    for (int i = r.uniform(0, 4); i > 0; --i) shared.push_back(r.vector(n, 0.3));
    std::vector<SparseVector> av = shared;
    std::vector<SparseVector> bv = shared;
    for (int i = r.uniform(0, 6); i > 0; --i) av.push_back(r.vector(n, 0.2));
    for (int i = r.uniform(0, 6); i > 0; --i) bv.push_back(r.vector(n, 0.2));
    const Subspace a = Subspace::span(n, av);
    const Subspace b = Subspace::span(n, bv);
    const Subspace s = subspace_sum(a, b);
    const Subspace i = subspace_intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    for (const auto& v : i.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
    for (const auto& v : shared) CHECK(i.contains(v));
  }
}

TEST_CASE("canonical basis is independent of the spanning set") {
  Random r(31);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = r.uniform(1, 50);
    std::vector<SparseVector> vs;
    for (int i = r.uniform(1, 8); i > 0; --i) vs.push_back(r.vector(n, 0.25));
    const Subspace a = Subspace::span(n, vs);
    // Permute and mix the generators.
    std::vector<SparseVector> ws = vs;
    std::shuffle(ws.begin(), ws.end(), r.rng);
    for (std::size_t i = 1; i < ws.size(); ++i) ws[i] = sparse_add(ws[i], ws[i - 1], r.uniform(-2, 2));
    CHECK(Subspace::span(n, ws) == a);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const auto& v = a.basis()[k];
      CHECK(v.back().second == 1);
      if (k > 0) CHECK(a.basis()[k - 1].back().first < v.back().first);
      for (std::size_t l = 0; l < a.dim(); ++l) {
        if (l == k) continue;
        const auto& u = a.basis()[l];
        CHECK(std::none_of(u.begin(), u.end(), [&](const auto& e) { return e.first == v.back().first; }));
      }
    }
    for (const auto& v : vs) CHECK(a.contains(v));
  }
}

TEST_CASE("nullspace of stacked matrices is the intersection of nullspaces") {
  Random r(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t cols = r.uniform(2, 30);
    std::vector<SparseVector> ca, cb;
    const std::size_t ra = r.uniform(1, 20), rb = r.uniform(1, 20);
    for (std::size_t j = 0; j < cols; ++j) {
      ca.push_back(r.vector(ra, 0.1));
      cb.push_back(r.vector(rb, 0.1));
    }
    const RationalMatrix a(ra, ca), b(rb, cb);
    CHECK(nullspace(RationalMatrix::stack(a, b)) == subspace_intersect(nullspace(a), nullspace(b)));
  }
}
