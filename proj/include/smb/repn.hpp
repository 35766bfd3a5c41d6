#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "smb/catalog.hpp"
#include "smb/linalg.hpp"

namespace smb {

class NonDominantWeight : public std::invalid_argument {
 public:
  NonDominantWeight(int l1, int l2);
};

class NotLowestWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// so(m) highest weight (lambda1, lambda2, 0, ...).
struct HighestWeightSO {
  int lambda1 = 0;
  int lambda2 = 0;

  HighestWeightSO() = default;
  /// Throws NonDominantWeight unless lambda1 >= lambda2 >= 0.
  HighestWeightSO(int l1, int l2 = 0);
  static bool dominant(int l1, int l2) { return l1 >= l2 && l2 >= 0; }

  /// "(a)" or "(a,b)".
  std::string to_string() const;
  friend auto operator<=>(const HighestWeightSO&, const HighestWeightSO&) = default;
};

/// Lowest weight of an sl(2) Verma module.
struct VermaLabel {
  Rational lowest_weight;
  std::string to_string() const { return lowest_weight.get_str(); }
  friend bool operator==(const VermaLabel&, const VermaLabel&) = default;
};

/// One row (weight, Verma label, range) of the branching table, symbolic in a:
/// weight (a, lambda2) tensor V_{m/2 + a + verma_offset}, for a >= a_min.
struct BranchingLine {
  int lambda2 = 0;
  int verma_offset = 0;
  int a_min = 0;

  bool admits(int a) const { return a >= a_min; }
  HighestWeightSO weight(int a) const { return HighestWeightSO(a, lambda2); }
  VermaLabel verma(int m, int a) const { return {frac(m, 2) + a + verma_offset}; }
  /// {weight: ["a", l2], verma: "m/2+a+c", range: "a>=k"}
  nlohmann::json to_json() const;
};

/// The five rows of the branching rule for the first symplectic monogenics.
const std::vector<BranchingLine>& branching_table();

std::int64_t binomial(int n, int k);
/// C(a+m-1, m-1) - C(a+m-3, m-1)
std::int64_t dim_harmonic(int m, int a);
/// Weyl dimension formula for so(m), valid for any dominant (l1, l2, 0, ...).
std::int64_t weyl_dimension(int m, const std::vector<int>& lambda);
/// Closed forms for lambda2 <= 1, Weyl formula otherwise.
std::int64_t dim_weight(int m, const HighestWeightSO& w);
/// sum_i lambda_i (lambda_i + m - 2i)
Rational casimir_value(int m, const HighestWeightSO& w);

struct KlimykResult {
  std::vector<HighestWeightSO> weights;
  int dropped = 0;
};
/// (a) x (b) = sum_{i<=b} sum_{j<=b-i} (a-i+j, b-i-j), non-dominant terms dropped.
KlimykResult klimyk_decompose(int a, int b);

/// Kernel of Delta_z on P_a(z).
Subspace harmonic_space(int m, int a);
/// Kernel of Delta_z, Delta_u, <d_z,d_u>, <z,d_u> on bidegree k in z, l in u.
Subspace simplicial_harmonics(int m, int k, int l, VarBlock second);

struct VermaCheck {
  bool pass = false;
  Rational kappa;  ///< measured [R,L] v = kappa * Ecal v
  std::string detail;
};
/// With (X,Y,H) = (R, L, Ecal): Ecal R^n v = (lambda+2n) R^n v and
/// L R^n v = -kappa n (lambda+n-1) R^{n-1} v. Throws NotLowestWeight.
VermaCheck verma_action_check(const OperatorCatalog& cat, const VermaLabel& label, int n, const Polynomial& v);

struct CasimirCheck {
  bool pass = false;
  Rational expected;
  std::optional<Polynomial> witness;
};
/// Casimir acts on every basis vector of sub as c(w).
CasimirCheck casimir_eigencheck(const OperatorCatalog& cat, const Subspace& sub, const HighestWeightSO& w);

}  // namespace smb
