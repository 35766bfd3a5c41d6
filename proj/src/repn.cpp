#include "smb/repn.hpp"

#include <algorithm>

#include <gmpxx.h>

namespace smb {

NonDominantWeight::NonDominantWeight(int l1, int l2)
    : std::invalid_argument("non-dominant so(m) weight (" + std::to_string(l1) + "," + std::to_string(l2) + ")") {}

HighestWeightSO::HighestWeightSO(int l1, int l2) : lambda1(l1), lambda2(l2) {
  if (!dominant(l1, l2)) throw NonDominantWeight(l1, l2);
}

std::string HighestWeightSO::to_string() const {
  if (lambda2 == 0) return "(" + std::to_string(lambda1) + ")";
  return "(" + std::to_string(lambda1) + "," + std::to_string(lambda2) + ")";
}

nlohmann::json BranchingLine::to_json() const {
  std::string verma = "m/2+a";
  if (verma_offset > 0) verma += "+" + std::to_string(verma_offset);
  if (verma_offset < 0) verma += std::to_string(verma_offset);
  nlohmann::json weight = nlohmann::json::array({"a"});
  if (lambda2 != 0) weight.push_back(lambda2);
  return {{"weight", weight}, {"verma", verma}, {"range", "a>=" + std::to_string(a_min)}};
}

const std::vector<BranchingLine>& branching_table() {
  static const std::vector<BranchingLine> rows{
      {0, -2, 1},
      {1, -1, 1},
      {0, 0, 1},
      {1, 1, 1},
      {0, 2, 0},
  };
  return rows;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r.get_si();
}

std::int64_t dim_harmonic(int m, int a) {
  if (a < 0) return 0;
  return binomial(a + m - 1, m - 1) - binomial(a + m - 3, m - 1);
}

std::int64_t weyl_dimension(int m, const std::vector<int>& lambda) {
  const int n = m / 2;
  const bool odd = m % 2 == 1;
  std::vector<Rational> rho(n), l(n);
  for (int i = 0; i < n; ++i) {
    rho[i] = odd ? frac(2 * (n - i) - 1, 2) : Rational(n - 1 - i);
    const int li = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    l[i] = rho[i] + li;
  }
  for (int i = static_cast<int>(lambda.size()) - 1; i >= n; --i) {
    if (lambda[i] != 0) throw std::invalid_argument("weight has more entries than the rank");
  }
  Rational d = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) d *= (l[i] * l[i] - l[j] * l[j]) / (rho[i] * rho[i] - rho[j] * rho[j]);
    if (odd) d *= l[i] / rho[i];
  }
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num().get_si();
}

std::int64_t dim_weight(int m, const HighestWeightSO& w) {
  if (w.lambda2 == 0) return dim_harmonic(m, w.lambda1);
  if (w.lambda2 == 1) {
    return m * dim_harmonic(m, w.lambda1) - dim_harmonic(m, w.lambda1 + 1) - dim_harmonic(m, w.lambda1 - 1);
  }
  return weyl_dimension(m, {w.lambda1, w.lambda2});
}

Rational casimir_value(int m, const HighestWeightSO& w) {
  return Rational(w.lambda1 * (w.lambda1 + m - 2) + w.lambda2 * (w.lambda2 + m - 4));
}

KlimykResult klimyk_decompose(int a, int b) {
  if (a < b) std::swap(a, b);
  KlimykResult out;
  for (int i = 0; i <= b; ++i) {
    for (int j = 0; j <= b - i; ++j) {
      const int l1 = a - i + j;
      const int l2 = b - i - j;
      if (HighestWeightSO::dominant(l1, l2)) {
        out.weights.emplace_back(l1, l2);
      } else {
        ++out.dropped;
      }
    }
  }
  std::sort(out.weights.begin(), out.weights.end());
  return out;
}

Subspace harmonic_space(int m, int a) {
  if (a < 0) throw std::invalid_argument("negative degree");
  auto blk = make_block(m, {{0, 0, a}});
  if (a < 2) return Subspace::whole(blk);
  return nullspace(matrix_of(ops::laplacian(m, VarBlock::Z), blk, make_block(m, {{0, 0, a - 2}})));
}

Subspace simplicial_harmonics(int m, int k, int l, VarBlock second) {
  if (!HighestWeightSO::dominant(k, l)) throw NonDominantWeight(k, l);
  if (second == VarBlock::Z) throw std::invalid_argument("second variable must be x or y");
  auto deg = [&](int du, int dz) {
    return second == VarBlock::X ? TriDegree{l + du, 0, k + dz} : TriDegree{0, l + du, k + dz};
  };
  auto blk = make_block(m, {deg(0, 0)});
  const VarBlock z = VarBlock::Z;
  struct Condition {
    LinearOperator op;
    TriDegree target;
  };
  const std::vector<Condition> conditions{
      {ops::laplacian(m, z), deg(0, -2)},
      {ops::laplacian(m, second), deg(-2, 0)},
      {ops::der_der(m, z, second), deg(-1, -1)},
      {ops::mult_der(m, z, second), deg(-1, 1)},
  };
  std::optional<RationalMatrix> stacked;
  for (const auto& c : conditions) {
    if (!c.target.valid()) continue;
    auto mat = matrix_of(c.op, blk, make_block(m, {c.target}));
    stacked = stacked ? RationalMatrix::stack(*stacked, mat) : mat;
  }
  if (!stacked) return Subspace::whole(blk);
  return nullspace(*stacked);
}

VermaCheck verma_action_check(const OperatorCatalog& cat, const VermaLabel& label, int n, const Polynomial& v) {
  if (n < 0) throw std::invalid_argument("negative Verma level");
  const LinearOperator& R = cat["R"];
  const LinearOperator& L = cat["L"];
  const LinearOperator& H = cat["Ecal"];
  const Rational& lambda = label.lowest_weight;
  if (v.is_zero()) throw NotLowestWeight("zero vector");
  if (!apply(L, v).is_zero()) throw NotLowestWeight("L v != 0 for v = " + v.to_string());
  if (apply(H, v) != v * lambda) throw NotLowestWeight("Ecal v != " + lambda.get_str() + " v");

  VermaCheck out;
  // [R,L] v = -L R v for a lowest-weight v.
  const Polynomial probe = lambda != 0 ? v : Polynomial(Rational(1));
  const Rational probe_weight = lambda != 0 ? lambda : frac(cat.m(), 2);
  const Polynomial comm = -apply(L, apply(R, probe));
  const auto& [lead, lead_coeff] = probe.terms().front();
  out.kappa = comm.coefficient(lead) / (lead_coeff * probe_weight);
  if (comm != probe * (out.kappa * probe_weight)) {
    out.detail = "[R,L] is not proportional to Ecal on the probe vector";
    return out;
  }

  std::vector<Polynomial> powers{v};
  for (int k = 1; k <= n; ++k) powers.push_back(apply(R, powers.back()));
  const Polynomial& top = powers[n];
  const bool h_ok = apply(H, top) == top * (lambda + 2 * n);
  const Polynomial expected_l = n == 0 ? Polynomial() : powers[n - 1] * (-out.kappa * n * (lambda + n - 1));
  const bool l_ok = apply(L, top) == expected_l;
  out.pass = h_ok && l_ok;
  out.detail = "kappa=" + out.kappa.get_str() + (h_ok ? "" : " H-action mismatch") + (l_ok ? "" : " L-action mismatch");
  return out;
}

CasimirCheck casimir_eigencheck(const OperatorCatalog& cat, const Subspace& sub, const HighestWeightSO& w) {
  CasimirCheck out;
  out.expected = casimir_value(cat.m(), w);
  if (sub.is_zero()) return out;
  const LinearOperator& cas = cat["Casimir"];
  for (const auto& b : sub.basis_polynomials()) {
    if (apply(cas, b) != b * out.expected) {
      out.witness = b;
      return out;
    }
  }
  out.pass = true;
  return out;
}

}  // namespace smb
