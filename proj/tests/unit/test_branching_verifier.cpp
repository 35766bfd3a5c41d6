#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smb/verifier.hpp"

using namespace smb;

namespace {

bool all_pass(const std::vector<CheckResult>& rows) {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  return !rows.empty();
}

std::string dump_rows(const std::vector<CheckResult>& rows) {
  std::string s;
  for (const auto& r : rows) s += r.to_json().dump() + "\n";
  return s;
}

const OperatorCatalog& cat6() {
  static const OperatorCatalog c(6);
  return c;
}

}  // namespace

TEST_CASE("eigenblocks are joint eigenspaces of E and Ecal") {
  const auto& c = cat6();
  for (int k = 0; k <= 2; ++k) {
    for (int shift = -2; shift <= 3; ++shift) {
      const Rational alpha = Rational(3 + shift);
      for (const auto& deg : eigen_degrees(6, k, alpha)) {
        CHECK(deg.kx + deg.ky == k);
        for (const auto& mono : monomial_basis(6, deg)) {
          const Polynomial p = Polynomial::from_monomial(mono);
          CHECK(apply(c["E"], p) == p * Rational(k));
          CHECK(apply(c["Ecal"], p) == p * alpha);
        }
      }
    }
  }
  const auto eb = k1_block(6, 2);
  CHECK(eb.block->dim() == 6 * 21 + 6);
  CHECK(eb.to_string() == "k=1 alpha=m/2+1");
  CHECK(half_m_label(0) == "m/2");
  CHECK(half_m_label(-1) == "m/2-1");
}

TEST_CASE("kernel of D_s on small blocks") {
  const auto& c = cat6();
  const auto k0 = make_eigenblock(6, 0, 5);
  CHECK(kernel_Ds(c, k0).dim() == k0.block->dim());

  CHECK(kernel_Ds(c, k1_block(6, 0)).dim() == 6);

  // D_s(x_i z_j) = -delta_ij, so only the trace direction survives.
  const auto eb = k1_block(6, 1);
  REQUIRE(eb.block->dim() == 36);
  CHECK(kernel_Ds(c, eb).dim() == 35);

  const Subspace ker = kernel_Ds(c, k1_block(6, 2));
  for (const auto& v : ker.basis_polynomials()) CHECK(apply(c["D_s"], v).is_zero());
  CHECK_FALSE(ker.contains(apply(c["D_s_dag"], parse_polynomial("z1"))));
}

TEST_CASE("kernel of L on small blocks") {
  const auto& c = cat6();
  CHECK(kernel_L(c, k1_block(6, 1)).dim() == 36);
  for (int a = 0; a <= 3; ++a) {
    const auto eb = make_eigenblock(6, 0, Rational(3 + a));
    CHECK(kernel_L(c, eb).dim() == static_cast<std::size_t>(dim_harmonic(6, a)));
  }
  const Subspace lw = lowest_weight_space(c, k1_block(6, 1));
  for (const auto& v : lw.basis_polynomials()) {
    CHECK(apply(c["D_s"], v).is_zero());
    CHECK(apply(c["L"], v).is_zero());
  }
}

TEST_CASE("table of L-kernels") {
  const auto rows = verify_table_ker(cat6(), 3);
  REQUIRE(rows.size() == 4);
  CHECK(all_pass(rows));
  CHECK(rows[0].params["alpha"] == "m/2-1");
  CHECK(rows[3].params["a"] == 3);
}

TEST_CASE("L-Fischer and symplectic Fischer") {
  CHECK(all_pass(verify_L_fischer(cat6(), 0, 3)));
  CHECK(all_pass(verify_L_fischer(cat6(), 1, 2)));
  CHECK(all_pass(verify_symplectic_fischer_k1(cat6(), 2)));
}

TEST_CASE("item (v) split against a direct proportionality oracle") {
  const auto& c = cat6();
  for (int a : {2, 3, 4}) {
    const ItemVSplit s = item_v_split(c, a);
    CHECK(s.independent);
    CHECK(s.one_kernel_direction);
    CHECK(s.dagger_in_span);
    CHECK(s.uniform);
    for (const auto& h : harmonic_space(6, a - 1).basis_polynomials()) {
      const Polynomial u = apply(c["D_s"], apply(c["C_xz"], h));
      const Polynomial w = apply(c["D_s"], apply(c["Pi_L"], apply(c["S_yz"], h)));
      REQUIRE_FALSE(u.is_zero());
      const Monomial& lead = u.terms().front().first;
      const Rational lambda = -w.coefficient(lead) / u.terms().front().second;
      CHECK((u * lambda + w).is_zero());
      CHECK(s.c_coeff / s.s_coeff == lambda);
    }
    for (const auto& v : s.kernel) CHECK(apply(c["D_s"], v).is_zero());
  }
  CHECK(item_v_split(c, 3).c_coeff / item_v_split(c, 3).s_coeff == frac(4, 15));
  CHECK_THROWS(item_v_split(c, 1));
}

TEST_CASE("kernel families") {
  for (int a = 0; a <= 3; ++a) CHECK_MESSAGE(all_pass(verify_kernel_families(cat6(), a)), "a=" << a);
}

TEST_CASE("lowest weight dimensions") {
  const auto& c = cat6();
  CHECK(lowest_weight_space(c, make_eigenblock(6, 1, 2)).dim() == 6);
  CHECK(lowest_weight_space(c, make_eigenblock(6, 1, 3)).dim() == 35);
  CHECK(lowest_weight_space(c, make_eigenblock(6, 1, 5)).dim() == 316);
  const auto rows = verify_branching_table(c, 1);
  CHECK(all_pass(rows));
}

TEST_CASE("multiplicity predictions") {
  const auto rows = verify_multiplicity_lemma(cat6(), 2);
  CHECK(all_pass(rows));
  for (int m : {6, 7}) {
    const auto h = [m](int a) { return dim_harmonic(m, a); };
    CHECK(m * (h(0) + h(-2)) - h(-1) == m);
    CHECK(m * (h(1) + h(-1)) - h(0) == m * m - 1);
  }
}

TEST_CASE("dimension identity") {
  for (int m : {6, 7}) {
    const auto rows = verify_dim_identity(m, 6);
    REQUIRE(rows.size() == 5);
    CHECK(all_pass(rows));
    for (int a = 2; a <= 6; ++a) {
      const auto lhs = weyl_dimension(m, {a + 1, 1}) + weyl_dimension(m, {a - 1, 1}) + weyl_dimension(m, {a + 2}) +
                       weyl_dimension(m, {a}) + weyl_dimension(m, {a - 2});
      const auto rhs = m * (weyl_dimension(m, {a + 1}) + weyl_dimension(m, {a - 1})) - weyl_dimension(m, {a});
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Verma suite") {
  CHECK(all_pass(verify_verma(cat6(), 2, 2)));
}

TEST_CASE("suite rows are deterministic") {
  const OperatorCatalog other(6);
  CHECK(dump_rows(verify_kernel_families(cat6(), 3)) == dump_rows(verify_kernel_families(other, 3)));
  CHECK(dump_rows(verify_table_ker(cat6(), 2)) == dump_rows(verify_table_ker(cat6(), 2)));
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 12);
  CHECK(is_suite("dim_identity"));
  CHECK_FALSE(is_suite("nonexistent"));
  SuiteOptions o;
  o.a_max = 2;
  CHECK_FALSE(suite_tasks("kernel_families", cat6(), o).empty());
}

TEST_CASE("a sign flip in D_s is detected with witnesses") {
  const LinearOperator flipped = (cat6()["z_dy"] + cat6()["dx_dz"]).with_label("D_s");
  const OperatorCatalog bad(6, {{"D_s", flipped}});
  SuiteOptions o;
  o.a_max = 3;
  o.t_max = 2;
  o.max_degree = 3;
  for (const std::string suite : {"algebra_relations", "symplectic_fischer_k1", "kernel_families", "branching_table"}) {
    int failed = 0, witnessed = 0;
    for (const auto& task : suite_tasks(suite, bad, o)) {
      for (const auto& r : task.run()) {
        if (r.pass) continue;
        ++failed;
        if (r.witness && !r.witness->is_zero()) ++witnessed;
      }
    }
    CHECK_MESSAGE(failed > 0, suite);
    CHECK_MESSAGE(witnessed > 0, suite);
  }
  CHECK(all_pass(verify_dim_identity(6, 4)));
}
