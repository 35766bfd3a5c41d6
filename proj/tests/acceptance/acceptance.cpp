#include <algorithm>
#include <iostream>
#include <map>
#include <thread>

#include "smb/report.hpp"

using namespace smb;

namespace {

struct Tally {
  std::size_t rows = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void add(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks) {
      ++rows;
      if (c.pass) continue;
      if (failed++ == 0) first_failure = c.name + " " + c.params.dump() + ": " + c.actual;
    }
  }
  void require(bool ok, const std::string& what) {
    ++rows;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  bool pass() const { return rows > 0 && failed == 0; }
};

int failures = 0;

void report(int n, const std::string& title, const Tally& t) {
  std::cout << (t.pass() ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << t.rows << " checks";
  if (!t.pass()) std::cout << ", " << t.failed << " failed; first: " << t.first_failure;
  std::cout << ")" << std::endl;
  if (!t.pass()) ++failures;
}

std::map<std::string, std::vector<CheckResult>> by_suite(const Report& r) {
  std::map<std::string, std::vector<CheckResult>> out;
  for (const auto& s : r.suites) out[s.name] = s.checks;
  return out;
}

std::int64_t lowest_weight_dim(const std::vector<CheckResult>& rows, int t) {
  for (const auto& c : rows) {
    if (c.name == "lowest_weight_dim" && c.params["t"] == t) return std::stoll(c.actual.substr(4));
  }
  return -1;
}

bool fails_with_witness(const std::vector<CheckResult>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const auto& c) { return !c.pass && c.witness && !c.witness->is_zero(); });
}

std::vector<CheckResult> run_tasks(const std::string& suite, const OperatorCatalog& cat, const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  for (const auto& task : suite_tasks(suite, cat, opt)) {
    auto rows = task.run();
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

}  // namespace

int main() {
  const int jobs = static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
  RunConfig config;
  config.jobs = jobs;
  const Report full = run(config);
  auto rows = by_suite(full);
  const OperatorCatalog cat(6);

  {
    Tally t;
    t.add(rows["algebra_relations"]);
    t.require(cat.sp_generators().size() == 78, "sp(12) generator count");
    report(1, "algebra relations on blocks of degree <= 5", t);
  }
  {
    Tally t;
    t.add(rows["projector"]);
    report(2, "Pi_L formula on y_i H_a, a <= 4", t);
  }
  {
    Tally t;
    t.add(rows["classical_fischer"]);
    const std::int64_t anchors[] = {1, 6, 20, 50, 105, 196, 336};
    for (int a = 0; a <= 6; ++a) {
      t.require(harmonic_space(6, a).dim() == static_cast<std::size_t>(anchors[a]), "nullspace dim H_" + std::to_string(a));
      t.require(dim_harmonic(6, a) == anchors[a], "closed form dim H_" + std::to_string(a));
    }
    report(3, "classical Fischer decomposition, d <= 6", t);
  }
  {
    Tally t;
    t.add(rows["table_ker"]);
    t.require(rows["table_ker"].size() == 5, "five table rows");
    report(4, "L-kernel table, a <= 4", t);
  }
  {
    Tally t;
    t.add(rows["l_fischer"]);
    t.add(rows["symplectic_fischer_k1"]);
    report(5, "L-Fischer and symplectic Fischer at k <= 1, alpha <= m/2+4", t);
  }
  {
    Tally t;
    t.add(rows["kernel_families"]);
    report(6, "kernel families and the item (v) split, a <= 4", t);
  }
  {
    Tally t;
    const auto& br = rows["branching_table"];
    t.add(br);
    t.add(rows["multiplicity"]);
    for (int tt = -1; tt <= 4; ++tt) t.require(lowest_weight_dim(br, tt) > 0, "row for t=" + std::to_string(tt));
    t.require(lowest_weight_dim(br, -1) == 6, "t=-1 anchor");
    t.require(lowest_weight_dim(br, 0) == 35, "t=0 anchor");
    t.require(lowest_weight_dim(br, 2) == 6 * (6 + 50) - 20, "t=2 anchor");
    const OperatorCatalog cat7(7);
    t.require(lowest_weight_space(cat7, make_eigenblock(7, 1, frac(5, 2))).dim() == 7, "m=7 t=-1");
    t.require(lowest_weight_space(cat7, make_eigenblock(7, 1, frac(7, 2))).dim() == 48, "m=7 t=0");
    report(7, "branching table and multiplicity theorem, t <= 4", t);
  }
  {
    Tally t;
    for (int m : {6, 7}) {
      const auto r = verify_dim_identity(m, 6);
      t.add(r);
      t.require(r.size() == 5, "a = 2..6");
    }
    report(8, "dimension identity, 2 <= a <= 6, m in {6, 7}", t);
  }
  {
    Tally t;
    t.add(rows["verma"]);
    report(9, "Verma action and tensor rule", t);
  }
  {
    Tally t;
    RunConfig again = config;
    again.jobs = 1;
    again.suites = {"table_ker", "kernel_families", "branching_table", "multiplicity", "dim_identity"};
    again.t_max = 2;
    RunConfig par = again;
    par.jobs = jobs;
    const std::string a = run(again).to_json(false).dump();
    t.require(a == run(again).to_json(false).dump(), "serial rerun identical");
    t.require(a == run(par).to_json(false).dump(), "parallel rerun identical");

    const LinearOperator flipped = (cat["z_dy"] + cat["dx_dz"]).with_label("D_s");
    const OperatorCatalog bad(6, {{"D_s", flipped}});
    SuiteOptions opt;
    opt.a_max = 3;
    opt.t_max = 2;
    opt.max_degree = 3;
    t.require(fails_with_witness(run_tasks("algebra_relations", bad, opt)), "mutation caught by suite 1");
    auto fischer = run_tasks("l_fischer", bad, opt);
    auto sympl = run_tasks("symplectic_fischer_k1", bad, opt);
    fischer.insert(fischer.end(), sympl.begin(), sympl.end());
    t.require(fails_with_witness(fischer), "mutation caught by suite 5");
    t.require(fails_with_witness(run_tasks("kernel_families", bad, opt)), "mutation caught by suite 6");
    auto branching = run_tasks("branching_table", bad, opt);
    auto mult = run_tasks("multiplicity", bad, opt);
    branching.insert(branching.end(), mult.begin(), mult.end());
    t.require(fails_with_witness(branching), "mutation caught by suite 7");
    report(10, "determinism and sign-flip mutation", t);
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
