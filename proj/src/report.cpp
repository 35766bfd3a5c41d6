#include "smb/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace smb {

namespace {

using json = nlohmann::json;

std::string param_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + param_text(e);
    return "[" + s + "]";
  }
  return v.dump();
}

void append_table(std::ostringstream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::string line;
    for (std::size_t i = 0; i < rows[k].size(); ++i) {
      std::string cell = rows[k][i];
      if (i + 1 < rows[k].size()) cell.resize(width[i], ' ');
      line += (i ? " | " : "  ") + cell;
    }
    os << line << "\n";
    if (k == 0) {
      std::string rule;
      for (std::size_t i = 0; i < width.size(); ++i) rule += (i ? "-+-" : "  ") + std::string(width[i], '-');
      os << rule << "\n";
    }
  }
}

}  // namespace

void RunConfig::validate() const {
  if (m < kStableRangeMin) throw ConfigError("m must be ≥ 6 (stable range)");
  if (m > kMaxDimension) throw ConfigError("m must be <= " + std::to_string(kMaxDimension));
  if (a_max < 0) throw ConfigError("a-max must be >= 0");
  if (t_max < 0) throw ConfigError("t-max must be >= 0");
  if (jobs < 1) throw ConfigError("jobs must be >= 1");
  for (const auto& s : suites) {
    if (!is_suite(s)) throw ConfigError("unknown suite: " + s);
  }
}

std::vector<std::string> RunConfig::selected_suites() const {
  if (suites.empty()) return suite_names();
  std::vector<std::string> out;
  for (const auto& s : suite_names()) {
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) out.push_back(s);
  }
  return out;
}

SuiteOptions RunConfig::suite_options() const {
  SuiteOptions o;
  o.a_max = a_max;
  o.t_max = t_max;
  return o;
}

json RunConfig::to_json() const {
  json j{{"m", m}, {"a_max", a_max}, {"t_max", t_max}, {"suites", selected_suites()},
         {"format", format == ReportFormat::Json ? "json" : "text"}};
  if (!overrides.empty()) {
    json o = json::array();
    for (const auto& [k, v] : overrides) o.push_back(k);
    j["overrides"] = o;
  }
  return j;
}

std::size_t SuiteReport::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

std::size_t Report::passed() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.passed();
  return n;
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failed();
  return n;
}

json Report::to_json(bool with_timing) const {
  json js = json::array();
  for (const auto& s : suites) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back(c.to_json());
    json e{{"name", s.name}, {"checks", checks}};
    if (with_timing) e["seconds"] = s.seconds;
    js.push_back(e);
  }
  return {{"version", kVersion}, {"config", config.to_json()}, {"suites", js},
          {"summary", {{"pass", passed()}, {"fail", failed()}}}};
}

ReportFormat parse_format(const std::string& s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  throw ConfigError("unknown format: " + s);
}

Report run(const RunConfig& config) {
  config.validate();
  const OperatorCatalog cat(config.m, config.overrides);
  const SuiteOptions opt = config.suite_options();

  Report report;
  report.config = config;
  std::vector<SuiteTask> tasks;
  std::vector<std::size_t> owner;
  for (const auto& name : config.selected_suites()) {
    report.suites.push_back({name, {}, 0});
    for (auto& t : suite_tasks(name, cat, opt)) {
      tasks.push_back(std::move(t));
      owner.push_back(report.suites.size() - 1);
    }
  }

  std::vector<std::vector<CheckResult>> results(tasks.size());
  std::vector<double> seconds(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      results[i] = tasks[i].run();
      seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const int n = std::min<int>(config.jobs, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    auto& s = report.suites[owner[i]];
    s.checks.insert(s.checks.end(), std::make_move_iterator(results[i].begin()),
                    std::make_move_iterator(results[i].end()));
    s.seconds += seconds[i];
  }
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  const auto& c = report.config;
  os << "symplectic branching verifier (report version " << Report::kVersion << ")\n";
  os << "m=" << c.m << " a_max=" << c.a_max << " t_max=" << c.t_max << "\n";
  for (const auto& s : report.suites) {
    os << "\n[" << s.name << "] " << s.passed() << " pass, " << s.failed() << " fail\n";
    if (s.checks.empty()) continue;
    std::vector<std::string> keys;
    for (const auto& chk : s.checks) {
      for (const auto& [k, v] : chk.params.items()) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
      }
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> head{"check"};
    head.insert(head.end(), keys.begin(), keys.end());
    head.insert(head.end(), {"expected", "actual", "result"});
    rows.push_back(head);
    for (const auto& chk : s.checks) {
      std::vector<std::string> r{chk.name};
      for (const auto& k : keys) r.push_back(chk.params.contains(k) ? param_text(chk.params[k]) : "");
      r.insert(r.end(), {chk.expected, chk.actual, chk.pass ? "PASS" : "FAIL"});
      rows.push_back(r);
    }
    append_table(os, rows);
    for (const auto& chk : s.checks) {
      if (chk.witness) os << "  witness for " << chk.name << " " << chk.params.dump() << ": " << chk.witness->to_string() << "\n";
    }
  }
  os << "\nsummary: " << report.passed() << " pass, " << report.failed() << " fail\n";
  return os.str();
}

std::string render(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report.to_json().dump(2) + "\n";
  return render_text(report);
}

}  // namespace smb
