#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "smb/repn.hpp"

using namespace smb;

TEST_CASE("harmonic dimensions") {
  const std::int64_t expected[] = {1, 6, 20, 50, 105, 196, 336};
  for (int a = 0; a <= 6; ++a) {
    CHECK(dim_harmonic(6, a) == expected[a]);
    CHECK(harmonic_space(6, a).dim() == static_cast<std::size_t>(expected[a]));
  }
  CHECK(dim_weight(6, {1, 1}) == 15);
  CHECK(dim_weight(6, {2, 1}) == 64);
  CHECK(dim_harmonic(6, -1) == 0);
}

TEST_CASE("weights reject non-dominant input") {
  CHECK_THROWS_AS(HighestWeightSO(1, 2), NonDominantWeight);
  CHECK_THROWS_AS(HighestWeightSO(-1), NonDominantWeight);
  CHECK(HighestWeightSO(3, 1).to_string() == "(3,1)");
  CHECK(HighestWeightSO(3).to_string() == "(3)");
  CHECK(HighestWeightSO(2, 1) < HighestWeightSO(3, 0));
}

TEST_CASE("Weyl formula agrees with the closed forms") {
  for (int m : {6, 7, 8, 9}) {
    for (int a = 0; a <= 5; ++a) {
      CHECK(weyl_dimension(m, {a}) == dim_harmonic(m, a));
      if (a >= 1) CHECK(weyl_dimension(m, {a, 1}) == dim_weight(m, {a, 1}));
    }
    CHECK(weyl_dimension(m, {}) == 1);
    CHECK(weyl_dimension(m, {1, 1}) == m * (m - 1) / 2);
  }
}

TEST_CASE("Klimyk examples") {
  auto r = klimyk_decompose(1, 1);
  REQUIRE(r.weights.size() == 3);
  CHECK(r.weights[0] == HighestWeightSO(0));
  CHECK(r.weights[1] == HighestWeightSO(1, 1));
  CHECK(r.weights[2] == HighestWeightSO(2));
  CHECK(r.dropped == 0);

  r = klimyk_decompose(3, 1);
  const std::vector<HighestWeightSO> want{{2}, {3, 1}, {4}};
  CHECK(r.weights == want);
  CHECK(klimyk_decompose(1, 3).weights == want);
}

TEST_CASE("Klimyk decomposition preserves dimension") {
  for (int m : {6, 7}) {
    for (int a = 0; a <= 5; ++a) {
      for (int b = 0; b <= 2; ++b) {
        const auto r = klimyk_decompose(a, b);
        std::int64_t total = 0;
        for (const auto& w : r.weights) total += dim_weight(m, w);
        CHECK(total == dim_harmonic(m, a) * dim_harmonic(m, b));
      }
    }
  }
}

TEST_CASE("simplicial harmonics dimensions") {
  CHECK(simplicial_harmonics(6, 1, 1, VarBlock::X).dim() == 15);
  CHECK(simplicial_harmonics(6, 1, 1, VarBlock::Y).dim() == 15);
  CHECK(simplicial_harmonics(6, 2, 1, VarBlock::X).dim() == 64);
  CHECK(simplicial_harmonics(6, 3, 0, VarBlock::X).dim() == 50);
  CHECK(simplicial_harmonics(6, 2, 2, VarBlock::X).dim() == static_cast<std::size_t>(weyl_dimension(6, {2, 2})));
  CHECK_THROWS_AS(simplicial_harmonics(6, 0, 1, VarBlock::X), NonDominantWeight);
}

TEST_CASE("dimension coherence across the stable range") {
  for (int m : {6, 7}) {
    for (int l1 = 0; l1 <= 5; ++l1) {
      for (int l2 = 0; l2 <= std::min(l1, 1); ++l2) {
        CHECK(dim_weight(m, {l1, l2}) == weyl_dimension(m, {l1, l2}));
      }
    }
  }
  for (int k = 1; k <= 3; ++k) {
    CHECK(simplicial_harmonics(7, k, 1, VarBlock::X).dim() == static_cast<std::size_t>(dim_weight(7, {k, 1})));
  }
}

TEST_CASE("Casimir eigenvalues on concrete modules") {
  const OperatorCatalog c(6);
  CHECK(casimir_value(6, {1}) == 5);
  CHECK(casimir_value(6, {1, 1}) == 8);

  auto r = casimir_eigencheck(c, harmonic_space(6, 1), {1});
  CHECK(r.pass);
  CHECK(r.expected == 5);
  CHECK(casimir_eigencheck(c, harmonic_space(6, 0), {0}).pass);
  CHECK(casimir_eigencheck(c, harmonic_space(6, 3), {3}).pass);
  r = casimir_eigencheck(c, simplicial_harmonics(6, 1, 1, VarBlock::X), {1, 1});
  CHECK(r.pass);
  CHECK(r.expected == 8);
  CHECK(casimir_eigencheck(c, simplicial_harmonics(6, 2, 1, VarBlock::Y), {2, 1}).pass);

  r = casimir_eigencheck(c, harmonic_space(6, 2), {1});
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness.has_value());
  CHECK(harmonic_space(6, 2).contains(*r.witness));
}

TEST_CASE("lowest weight vectors generate Verma modules") {
  const OperatorCatalog c(6);
  struct Case {
    const char* v;
    Rational lambda;
  };
  const std::vector<Case> cases{{"1", 3}, {"x1", 2}, {"z1", 4}, {"x1*z2 - x2*z1", 3}};
  for (const auto& cs : cases) {
    for (int n = 0; n <= 3; ++n) {
      const auto r = verma_action_check(c, {cs.lambda}, n, parse_polynomial(cs.v));
      CHECK_MESSAGE(r.pass, cs.v << " n=" << n << " " << r.detail);
      CHECK(r.kappa == 1);
    }
  }
  CHECK_THROWS_AS(verma_action_check(c, {3}, 1, parse_polynomial("y1")), NotLowestWeight);
  CHECK_THROWS_AS(verma_action_check(c, {5}, 1, parse_polynomial("z1")), NotLowestWeight);
}

TEST_CASE("classical Fischer decomposition") {
  const OperatorCatalog c(6);
  for (int d = 0; d <= 6; ++d) {
    auto blk = make_block(6, {{0, 0, d}});
    const Subspace h = harmonic_space(6, d);
    std::vector<Polynomial> lifted;
    if (d >= 2) {
      for (const auto& mono : monomial_basis(6, {0, 0, d - 2})) lifted.push_back(apply(c["norm_z"], Polynomial::from_terms({{mono, 1}})));
    }
    const Subspace rest = Subspace::span(blk, lifted);
    CHECK(is_direct_sum({h, rest}, Subspace::whole(blk)));
    CHECK(h.dim() + rest.dim() == monomial_count(6, {0, 0, d}));
  }
}

TEST_CASE("branching table rows") {
  const auto& t = branching_table();
  REQUIRE(t.size() == 5);
  CHECK(t[0].verma(6, 1).lowest_weight == 2);
  CHECK(t[4].admits(0));
  CHECK_FALSE(t[0].admits(0));
  CHECK(t[1].weight(2) == HighestWeightSO(2, 1));
  const auto j = t[1].to_json();
  CHECK(j["verma"] == "m/2+a-1");
  CHECK(j["range"] == "a>=1");
  CHECK(j["weight"] == nlohmann::json::array({"a", 1}));
  CHECK(t[2].to_json()["verma"] == "m/2+a");

  // Lowest-weight multiplicities at alpha = m/2 + t.
  const std::int64_t expected[] = {6, 35, 120, 316};
  for (int tt = -1; tt <= 2; ++tt) {
    std::int64_t total = 0;
    for (const auto& row : t) {
      const int a = tt - row.verma_offset;
      if (row.admits(a)) total += dim_weight(6, row.weight(a));
    }
    CHECK(total == expected[tt + 1]);
  }
}

TEST_CASE("sp(2m) generators close under commutators") {
  // An operator of order <= 2 is determined by its action on polynomials of
  // degree <= 2, so each operator is encoded by those images.
  const OperatorCatalog c(6);
  std::set<TriDegree> low, high;
  for (int kx = 0; kx <= 4; ++kx)
    for (int ky = 0; ky + kx <= 4; ++ky)
      for (int kz = 0; kz + ky + kx <= 4; ++kz) {
        high.insert({kx, ky, kz});
        if (kx + ky + kz <= 2) low.insert({kx, ky, kz});
      }
  auto test_blk = make_block(6, low);
  auto image_blk = make_block(6, high);
  const std::size_t stride = image_blk->dim();
  auto encode = [&](auto&& act) {
    SparseVector v;
    for (std::size_t i = 0; i < test_blk->dim(); ++i) {
      const Polynomial p = Polynomial::from_terms({{test_blk->basis()[i], 1}});
      for (auto& [j, x] : coordinates(*image_blk, act(p))) v.emplace_back(i * stride + j, x);
    }
    return v;
  };
  const auto& gens = c.sp_generators();
  std::vector<SparseVector> codes;
  for (const auto& g : gens) codes.push_back(encode([&](const Polynomial& p) { return apply(c[g], p); }));
  const std::size_t n = test_blk->dim() * stride;
  const Subspace algebra = Subspace::span(n, codes);
  CHECK(algebra.dim() == gens.size());

  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& a = c[gens[pick(rng)]];
    const auto& b = c[gens[pick(rng)]];
    const SparseVector v = encode([&](const Polynomial& p) { return commutator_apply(a, b, p); });
    CHECK_MESSAGE(algebra.contains(v), a.label() << " " << b.label());
  }
}
