#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "smb/verifier.hpp"

namespace smb {

enum class ReportFormat { Text, Json };

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  int m = 6;
  int a_max = 4;
  int t_max = 4;
  std::vector<std::string> suites;  ///< empty means every suite
  ReportFormat format = ReportFormat::Text;
  std::optional<std::string> output_path;
  int jobs = 1;
  /// Replace catalog entries before running (used for mutation testing).
  std::map<std::string, LinearOperator> overrides;

  /// Throws ConfigError.
  void validate() const;
  std::vector<std::string> selected_suites() const;
  SuiteOptions suite_options() const;
  nlohmann::json to_json() const;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
};

struct Report {
  static constexpr const char* kVersion = "1";

  RunConfig config;
  std::vector<SuiteReport> suites;

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
  /// 0 when every check passes, 1 otherwise.
  int exit_code() const { return all_pass() ? 0 : 1; }

  nlohmann::json to_json(bool with_timing = true) const;
};

ReportFormat parse_format(const std::string& s);

/// Runs the selected suites on `config.jobs` threads; rows come back in the
/// same order for any job count.
Report run(const RunConfig& config);

std::string render(const Report& report, ReportFormat format);
std::string render_text(const Report& report);

}  // namespace smb
