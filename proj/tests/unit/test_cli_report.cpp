#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smb/report.hpp"

using namespace smb;
using nlohmann::json;

namespace {

json strip_timing(json j) {
  for (auto& s : j["suites"]) s.erase("seconds");
  return j;
}

}  // namespace

TEST_CASE("configuration is validated") {
  RunConfig c;
  c.m = 5;
  try {
    c.validate();
    FAIL("m=5 accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()) == "m must be ≥ 6 (stable range)");
  }
  c = RunConfig{};
  c.suites = {"nonexistent"};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_THROWS_AS(run(c), ConfigError);
  c = RunConfig{};
  c.jobs = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = RunConfig{};
  c.a_max = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  CHECK_NOTHROW(RunConfig{}.validate());
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("selected suites follow canonical order") {
  RunConfig c;
  c.suites = {"dim_identity", "table_ker"};
  CHECK(c.selected_suites() == std::vector<std::string>{"table_ker", "dim_identity"});
  CHECK(RunConfig{}.selected_suites() == suite_names());
}

TEST_CASE("dim_identity JSON report") {
  RunConfig c;
  c.suites = {"dim_identity"};
  c.format = ReportFormat::Json;
  const Report r = run(c);
  const json j = json::parse(render(r, ReportFormat::Json));
  CHECK(j["version"] == "1");
  CHECK(j["config"]["m"] == 6);
  REQUIRE(j["suites"].size() == 1);
  const auto& checks = j["suites"][0]["checks"];
  REQUIRE(checks.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(checks[i]["params"]["a"] == i + 2);
    CHECK(checks[i]["pass"] == true);
    for (const char* key : {"name", "params", "expected", "actual", "pass"}) CHECK(checks[i].contains(key));
  }
  CHECK(j["summary"]["pass"] == 3);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("empty report is valid JSON") {
  const Report r;
  const json j = json::parse(render(r, ReportFormat::Json));
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["suites"].empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("job count does not change the report") {
  RunConfig c;
  c.a_max = 2;
  c.t_max = 1;
  c.suites = {"table_ker", "kernel_families", "multiplicity", "dim_identity", "l_fischer"};
  const json one = strip_timing(run(c).to_json());
  c.jobs = 8;
  const Report eight = run(c);
  CHECK(strip_timing(eight.to_json()).dump() == one.dump());
  CHECK(eight.to_json(false).dump() == one.dump());
}

TEST_CASE("table_ker text layout") {
  RunConfig c;
  c.a_max = 3;
  c.suites = {"table_ker"};
  const std::string text = render_text(run(c));
  std::size_t rows = 0;
  for (std::size_t p = text.find("  ker_L "); p != std::string::npos; p = text.find("  ker_L ", p + 1)) ++rows;
  CHECK(rows == 4);
  CHECK(text.find("m/2+2") != std::string::npos);
  CHECK(text.find("summary: 4 pass, 0 fail") != std::string::npos);
}

TEST_CASE("injected failure renders its witness") {
  Report r;
  CheckResult bad;
  bad.name = "injected";
  bad.params = {{"a", 1}};
  bad.expected = "0";
  bad.actual = "nonzero";
  bad.witness = parse_polynomial("-1/2*y3 + x1*z2");
  r.suites.push_back({"algebra_relations", {bad}, 0});
  CHECK(r.exit_code() == 1);
  const std::string text = render_text(r);
  CHECK(text.find("-1/2*y3 + x1*z2") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  const json j = json::parse(render(r, ReportFormat::Json));
  CHECK(j["suites"][0]["checks"][0]["witness"] == "-1/2*y3 + x1*z2");
  CHECK(j["summary"]["fail"] == 1);
}

TEST_CASE("mutated catalog fails through run") {
  RunConfig c;
  const OperatorCatalog base(6);
  c.overrides.emplace("D_s", (base["z_dy"] + base["dx_dz"]).with_label("D_s"));
  c.a_max = 3;
  c.suites = {"kernel_families"};
  const Report r = run(c);
  CHECK(r.failed() > 0);
  CHECK(r.exit_code() == 1);
  CHECK(r.to_json()["config"]["overrides"][0] == "D_s");
}
