#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smb/report.hpp"

namespace py = pybind11;

namespace {

std::string run_json(int m, int a_max, int t_max, std::vector<std::string> suites, int jobs) {
  smb::RunConfig c;
  c.m = m;
  c.a_max = a_max;
  c.t_max = t_max;
  c.suites = std::move(suites);
  c.jobs = jobs;
  c.format = smb::ReportFormat::Json;
  c.validate();
  py::gil_scoped_release release;
  return smb::run(c).to_json().dump();
}

std::string apply_label(int m, const std::string& label, const std::string& poly) {
  const smb::OperatorCatalog cat(m);
  return smb::apply(cat[label], smb::parse_polynomial(poly)).to_string();
}

std::size_t lowest_weight_dim(int m, int k, std::int64_t num, std::int64_t den) {
  const smb::OperatorCatalog cat(m);
  py::gil_scoped_release release;
  return smb::lowest_weight_space(cat, smb::make_eigenblock(m, k, smb::frac(num, den))).dim();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  py::register_exception<smb::ConfigError>(mod, "ConfigError", PyExc_ValueError);
  py::register_exception<smb::NonDominantWeight>(mod, "NonDominantWeight", PyExc_ValueError);

  mod.def("run_json", &run_json, py::arg("m"), py::arg("a_max"), py::arg("t_max"), py::arg("suites"), py::arg("jobs"));
  mod.def("suite_names", &smb::suite_names);
  mod.def("operator_labels", [](int m) { return smb::OperatorCatalog(m).labels(); }, py::arg("m") = 6);
  mod.def("apply", &apply_label, py::arg("m"), py::arg("label"), py::arg("poly"),
          "Apply a catalog operator to a polynomial given in text form.");
  mod.def("dim_harmonic", &smb::dim_harmonic, py::arg("m"), py::arg("a"));
  mod.def(
      "dim_weight", [](int m, int l1, int l2) { return smb::dim_weight(m, smb::HighestWeightSO(l1, l2)); },
      py::arg("m"), py::arg("l1"), py::arg("l2") = 0);
  mod.def("lowest_weight_dim", &lowest_weight_dim, py::arg("m"), py::arg("k"), py::arg("alpha_num"),
          py::arg("alpha_den") = 1, "Dimension of ker D_s and ker L on the (k, alpha) eigenblock.");
}
