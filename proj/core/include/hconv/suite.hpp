#ifndef HCONV_SUITE_HPP
#define HCONV_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hconv/matrix.hpp"
#include "hconv/positive_maps.hpp"
#include "hconv/report.hpp"
#include "hconv/vector_space.hpp"

namespace hconv {

/// Suite runner configuration. Suites: hclass, scalar, operator,
/// complementary. Instance generation is a pure function of (config, seed).
struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  std::vector<int> dims = {2, 3, 4, 6};
  double interval_lo = 0.5;
  double interval_hi = 2.0;
  double tol_rel = kLoewnerTolRel;
  std::set<std::string> suites = {"hclass", "scalar", "operator",
                                  "complementary"};
  std::vector<std::string> catalog_filter;  // empty = whole catalog
};

/// Throws ConfigError on invalid parameters (before any check runs).
void validate(const SuiteConfig& config);

struct CheckRecord {
  std::string check_id;   // e.g. "operator.weighted_jensen"
  std::string rule;       // the inequality, by name
  std::string instance;   // pair, dims, instance seed
  Verdict verdict = Verdict::degenerate;
  double gap = 0.0;
  double tol = 0.0;
  bool certified = true;  // hypothesis-certified instance
  std::string witness;    // populated for violations
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> records;
  int checks_run = 0;
  int holds = 0;
  int violations = 0;
  int degenerate = 0;
  double wall_ms = 0.0;
};

/// Runs every enabled checker over deterministically generated instances.
SuiteReport run_suite(const SuiteConfig& config);

/// 0 iff zero violations among certified-hypothesis checks.
int exit_code(const SuiteReport& report);

/// Line-delimited records plus a summary object; matrices serialize
/// row-major as (re, im) pairs. Byte-identical across runs of the same
/// config except for the summary's wall_ms.
void write_report_jsonl(const SuiteReport& report, std::ostream& os);

/// The check ids understood by run_suite and search_counterexample.
std::vector<std::string> known_check_ids();

struct Counterexample {
  std::string check_id;
  std::string f_name;
  std::string h_name;
  std::vector<HermitianMatrix> matrices;
  WeightVector weights;
  std::string map_json;  // serialized map spec, when the check uses one
  double gap = 0.0;
  int trials_used = 0;
  int shrink_steps = 0;
};

std::string to_json(const Counterexample& ce);

/// Report-format serialization of a map spec: variant tag plus its matrices
/// (row-major (re, im) pairs).
std::string to_json(const PositiveMapSpec& phi);

/// Random search for a violating instance of one operator check, with a
/// greedy shrink (halving dimension, zeroing off-diagonals) applied while
/// the violation persists. Interval defaults to f's declared domain.
std::optional<Counterexample> search_counterexample(
    const std::string& target_check, const std::string& f_name,
    const std::string& h_name, int budget, std::uint64_t seed, int dim = 2);

}  // namespace hconv

#endif
