#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "smb/catalog.hpp"
#include "smb/linalg.hpp"
#include "smb/repn.hpp"

namespace smb {

/// Joint eigenspace of (E, Ecal) inside the polynomials in (x, y; z).
struct EigenBlock {
  int m = 0;
  int k = 0;
  Rational alpha;
  BlockPtr block;

  bool empty() const { return block->dim() == 0; }
  /// "k=1 alpha=m/2+2"
  std::string to_string() const;
};

/// Tri-degrees with kx+ky = k and ky - kx + kz + m/2 = alpha.
std::set<TriDegree> eigen_degrees(int m, int k, const Rational& alpha);
EigenBlock make_eigenblock(int m, int k, const Rational& alpha);
/// k = 1 block at alpha = m/2 - 1 + a: degrees (1,0,a) and (0,1,a-2).
EigenBlock k1_block(int m, int a);
/// "m/2", "m/2+3", "m/2-1"
std::string half_m_label(int shift);

struct CheckResult {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::string expected;
  std::string actual;
  bool pass = false;
  std::optional<Polynomial> witness;

  nlohmann::json to_json() const;
};

Subspace kernel_Ds(const OperatorCatalog& cat, const EigenBlock& eb);
Subspace kernel_L(const OperatorCatalog& cat, const EigenBlock& eb);
/// kernel_Ds and kernel_L intersected, via one stacked nullspace.
Subspace lowest_weight_space(const OperatorCatalog& cat, const EigenBlock& eb);

/// The two-dimensional system on {C_xz h, Pi_L S_yz h} for h in H_{a-1}.
struct ItemVSplit {
  int a = 0;
  bool independent = true;            ///< both vectors span a plane for every h
  bool one_kernel_direction = true;   ///< exactly one D_s-kernel line per h
  bool dagger_in_span = true;         ///< D_s^dag h lies in the plane for every h
  bool uniform = true;                ///< same coefficients for every h
  Rational c_coeff;                   ///< kernel line: c_coeff*C_xz h + s_coeff*Pi_L S_yz h
  Rational s_coeff;
  std::vector<Polynomial> kernel;     ///< one kernel vector per basis harmonic
  std::vector<Polynomial> dagger;     ///< D_s^dag h per basis harmonic
  std::optional<Polynomial> witness;
};
ItemVSplit item_v_split(const OperatorCatalog& cat, int a);

struct SuiteOptions {
  int a_max = 4;
  int t_max = 4;
  int max_degree = 5;  ///< algebra relations on all blocks of total degree <= this
  int d_max = 6;       ///< classical Fischer and S_0 branching
  int verma_n = 3;
};

/// An independent unit of work; suites are lists of these.
struct SuiteTask {
  std::string suite;
  std::string label;
  std::function<std::vector<CheckResult>()> run;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Tasks in report order. `cat` must outlive the tasks.
std::vector<SuiteTask> suite_tasks(const std::string& suite, const OperatorCatalog& cat, const SuiteOptions& opt);

std::vector<CheckResult> verify_algebra_relations(const OperatorCatalog& cat, int max_degree);
std::vector<CheckResult> verify_projector(const OperatorCatalog& cat, int a_max);
std::vector<CheckResult> verify_classical_fischer(const OperatorCatalog& cat, int d_max);
std::vector<CheckResult> verify_table_ker(const OperatorCatalog& cat, int a_max);
std::vector<CheckResult> verify_L_fischer(const OperatorCatalog& cat, int k, int a_max);
std::vector<CheckResult> verify_symplectic_fischer_k1(const OperatorCatalog& cat, int a_max);
std::vector<CheckResult> verify_kernel_families(const OperatorCatalog& cat, int a);
std::vector<CheckResult> verify_branching_table(const OperatorCatalog& cat, int t_max);
std::vector<CheckResult> verify_multiplicity_lemma(const OperatorCatalog& cat, int a_max);
std::vector<CheckResult> verify_dim_identity(int m, int a_max);
std::vector<CheckResult> verify_s0_branching(const OperatorCatalog& cat, int d_max);
std::vector<CheckResult> verify_verma(const OperatorCatalog& cat, int n_max, int a_max);

}  // namespace smb
