#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hconv/catalog.hpp"
#include "hconv/errors.hpp"
#include "hconv/operator_checks.hpp"
#include "hconv/suite.hpp"

using namespace hconv;

namespace {

std::string render_without_wall_time(const SuiteReport& report) {
  std::ostringstream os;
  write_report_jsonl(report, os);
  std::string text = os.str();
  const auto pos = text.rfind("\"wall_ms\"");
  REQUIRE(pos != std::string::npos);
  return text.substr(0, pos);
}

}  // namespace

TEST_CASE("config validation happens before any check") {
  SuiteConfig bad;
  bad.trials = 0;
  CHECK_THROWS_AS(run_suite(bad), ConfigError);

  SuiteConfig interval;
  interval.interval_lo = 2.0;
  interval.interval_hi = 0.5;
  CHECK_THROWS_AS(validate(interval), ConfigError);

  SuiteConfig dims;
  dims.dims = {0};
  CHECK_THROWS_AS(validate(dims), ConfigError);
  dims.dims = {kDefaultDimCap + 1};
  CHECK_THROWS_AS(validate(dims), ConfigError);

  SuiteConfig suites;
  suites.suites = {"nope"};
  CHECK_THROWS_AS(validate(suites), ConfigError);

  SuiteConfig filter;
  filter.catalog_filter = {"f:missing"};
  CHECK_THROWS_AS(validate(filter), ConfigError);
}

TEST_CASE("operator suite record count and verdicts") {
  SuiteConfig config;
  config.suites = {"operator"};
  config.trials = 10;
  config.dims = {2, 3};
  config.seed = 7;
  const SuiteReport report = run_suite(config);
  // trials x |operator checks| x |dims| records.
  CHECK(report.records.size() == 10u * 6u * 2u);
  for (const auto& rec : report.records) {
    CAPTURE(rec.check_id);
    CAPTURE(rec.instance);
    CHECK(rec.verdict == Verdict::holds);
  }
  CHECK(exit_code(report) == 0);
}

TEST_CASE("identical configs give byte-identical reports modulo wall time") {
  SuiteConfig config;
  config.trials = 5;
  config.seed = 20240811;
  const std::string a = render_without_wall_time(run_suite(config));
  const std::string b = render_without_wall_time(run_suite(config));
  CHECK(a == b);
  CHECK(a.find("\"type\":\"config\"") != std::string::npos);
  CHECK(a.find("\"type\":\"summary\"") != std::string::npos);
}

TEST_CASE("record stream is ordered by check id blocks") {
  SuiteConfig config;
  config.suites = {"scalar"};
  config.trials = 4;
  const SuiteReport report = run_suite(config);
  // Within the suite, records arrive grouped per check id in fixed order.
  std::vector<std::string> block_order;
  for (const auto& rec : report.records) {
    if (block_order.empty() || block_order.back() != rec.check_id) {
      block_order.push_back(rec.check_id);
    }
  }
  std::vector<std::string> unique_sorted = block_order;
  std::sort(unique_sorted.begin(), unique_sorted.end());
  unique_sorted.erase(std::unique(unique_sorted.begin(), unique_sorted.end()),
                      unique_sorted.end());
  CHECK(block_order.size() == unique_sorted.size());  // no interleaving
}

TEST_CASE("exit code contract") {
  SuiteReport report;
  CHECK(exit_code(report) == 0);
  CheckRecord violated;
  violated.verdict = Verdict::violated;
  violated.certified = true;
  report.records.push_back(violated);
  CHECK(exit_code(report) == 1);
  report.records.back().certified = false;
  CHECK(exit_code(report) == 0);
  report.records.back().verdict = Verdict::degenerate;
  report.records.back().certified = true;
  CHECK(exit_code(report) == 0);
}

TEST_CASE("totals are consistent with the records") {
  SuiteConfig config;
  config.suites = {"hclass", "scalar"};
  config.trials = 10;
  const SuiteReport report = run_suite(config);
  int holds = 0, violations = 0, degenerate = 0;
  for (const auto& rec : report.records) {
    holds += rec.verdict == Verdict::holds;
    violations += rec.verdict == Verdict::violated;
    degenerate += rec.verdict == Verdict::degenerate;
  }
  CHECK(report.checks_run == static_cast<int>(report.records.size()));
  CHECK(report.holds == holds);
  CHECK(report.violations == violations);
  CHECK(report.degenerate == degenerate);
  CHECK(report.violations == 0);
}

TEST_CASE("records respect the verdict/gap/tolerance invariant") {
  SuiteConfig config;
  config.trials = 8;
  const SuiteReport report = run_suite(config);
  for (const auto& rec : report.records) {
    if (rec.verdict == Verdict::degenerate) continue;
    CAPTURE(rec.check_id);
    CAPTURE(rec.instance);
    CHECK((rec.verdict == Verdict::holds) == (rec.gap >= -rec.tol));
  }
}

TEST_CASE("catalog filter restricts the instances") {
  SuiteConfig config;
  config.suites = {"hclass"};
  config.trials = 5;
  config.catalog_filter = {"h:id", "f:square"};
  const SuiteReport report = run_suite(config);
  CHECK(!report.records.empty());
  for (const auto& rec : report.records) {
    CHECK(rec.instance.find("h:pow") == std::string::npos);
    CHECK(rec.instance.find("f:abs") == std::string::npos);
  }
}

TEST_CASE("counterexample search: falsifiable vs theorem-backed") {
  // t^3 on [-2,2] with h = t: a violation within the budget, shrunk while
  // the violation persists.
  const auto found = search_counterexample("operator.weighted_jensen",
                                           "f:cube", "h:id", 1000, 17, 2);
  REQUIRE(found.has_value());
  CHECK(found->gap < 0.0);
  CHECK(found->trials_used <= 1000);

  // Shrinking soundness: the stored witness still violates the check.
  const auto rep = check_weighted_jensen(builtin_catalog().f("f:cube"),
                                         builtin_catalog().h("h:id"),
                                         found->matrices, found->weights);
  CHECK(rep.verdict == Verdict::violated);

  // f = t^2 with h = t is theorem-backed: nothing within the same budget.
  CHECK_FALSE(search_counterexample("operator.weighted_jensen", "f:square",
                                    "h:id", 1000, 17, 2)
                  .has_value());

  // Budget contract and config errors.
  CHECK_THROWS_AS(search_counterexample("operator.weighted_jensen", "f:cube",
                                        "h:id", 0, 1, 2),
                  ConfigError);
  CHECK_THROWS_AS(
      search_counterexample("nope.check", "f:cube", "h:id", 10, 1, 2),
      ConfigError);
  CHECK_THROWS_AS(
      search_counterexample("operator.weighted_jensen", "f:missing", "h:id",
                            10, 1, 2),
      ConfigError);

  // The hmid target also finds the scalar-convexity failure of t^3.
  const auto hmid =
      search_counterexample("operator.hmid", "f:cube", "h:id", 1000, 23, 2);
  CHECK(hmid.has_value());

  // Budget contract honored at budget = 1: terminates after one instance.
  const auto one = search_counterexample("operator.weighted_jensen", "f:square",
                                         "h:id", 1, 29, 2);
  CHECK_FALSE(one.has_value());

  // Witness serialization is valid JSON-ish and carries the matrices.
  const std::string json_text = to_json(*found);
  CHECK(json_text.find("\"matrices\"") != std::string::npos);
  CHECK(json_text.find("\"gap\"") != std::string::npos);

  // The dcj target ships the map spec with its witness.
  const auto dcj =
      search_counterexample("operator.dcj", "f:cube", "h:id", 2000, 31, 3);
  if (dcj) {
    CHECK(to_json(*dcj).find("\"map\"") != std::string::npos);
    CHECK(dcj->map_json.find("pinching") != std::string::npos);
  }
}

TEST_CASE("map specs serialize with variant tags and matrices") {
  const auto phi = random_pinching(3, 2, 11);
  const std::string text = to_json(phi);
  CHECK(text.find("\"variant\":\"pinching\"") != std::string::npos);
  CHECK(text.find("\"projections\"") != std::string::npos);
  CHECK(text.find("\"entries\"") != std::string::npos);

  const auto mix = PositiveMapSpec::mixture(
      {PositiveMapSpec::normalized_trace(2), PositiveMapSpec::normalized_trace(2)},
      {0.5, 0.5});
  const std::string mix_text = to_json(mix);
  CHECK(mix_text.find("\"variant\":\"mixture\"") != std::string::npos);
  CHECK(mix_text.find("\"children\"") != std::string::npos);
}

TEST_CASE("known check ids cover every suite record") {
  const auto ids = known_check_ids();
  SuiteConfig config;
  config.trials = 3;
  const SuiteReport report = run_suite(config);
  for (const auto& rec : report.records) {
    CHECK(std::find(ids.begin(), ids.end(), rec.check_id) != ids.end());
  }
}
