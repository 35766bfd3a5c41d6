#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "smb/report.hpp"

namespace {

int list_operators(int m) {
  const smb::OperatorCatalog cat(m);
  for (const auto& label : cat.labels()) std::cout << label << "\n";
  return 0;
}

int apply_operator(int m, const std::string& label, const std::string& poly) {
  const smb::OperatorCatalog cat(m);
  if (!cat.contains(label)) {
    std::cerr << "unknown operator: " << label << "\n";
    return 2;
  }
  std::cout << smb::apply(cat[label], smb::parse_polynomial(poly)).to_string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the symplectic Dirac branching rule"};
  smb::RunConfig config;
  std::string format = "text";
  std::string out;
  bool list_suites = false;
  bool list_ops = false;
  bool flip_ds = false;
  std::string apply_label;
  std::string apply_poly;

  app.add_option("--m", config.m, "dimension (m >= 6)");
  app.add_option("--a-max", config.a_max, "largest harmonic degree a");
  app.add_option("--t-max", config.t_max, "largest branching index t");
  app.add_option("--suite", config.suites, "suite to run (repeatable; default all)");
  app.add_option("--format", format, "text or json");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--jobs", config.jobs, "worker threads");
  app.add_flag("--list-suites", list_suites, "print suite names and exit");
  app.add_flag("--list-operators", list_ops, "print catalog labels and exit");
  app.add_option("--apply", apply_label, "catalog label to apply to --poly");
  app.add_option("--poly", apply_poly, "polynomial for --apply, e.g. \"x1*z2 - y3\"");
  app.add_flag("--flip-ds", flip_ds, "replace D_s by <z,dy> + <dx,dz> (mutation check)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (list_suites) {
      for (const auto& s : smb::suite_names()) std::cout << s << "\n";
      return 0;
    }
    config.format = smb::parse_format(format);
    if (!out.empty()) config.output_path = out;
    config.validate();
    if (list_ops) return list_operators(config.m);
    if (!apply_label.empty()) return apply_operator(config.m, apply_label, apply_poly);
    if (flip_ds) {
      const smb::OperatorCatalog base(config.m);
      config.overrides.emplace("D_s", (base["z_dy"] + base["dx_dz"]).with_label("D_s"));
    }
  } catch (const smb::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const smb::Report report = smb::run(config);
  const std::string text = smb::render(report, config.format);
  if (config.output_path) {
    std::ofstream f(*config.output_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << *config.output_path << "\n";
      return 2;
    }
    f << text;
    std::cerr << "summary: " << report.passed() << " pass, " << report.failed() << " fail\n";
  } else {
    std::cout << text;
  }
  return report.exit_code();
}
