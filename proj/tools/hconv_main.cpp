// Command-line front end: verify (suite runner), search (counterexample
// hunt), beta (complementary constant), catalog (list entries).
//
// Exit codes: 0 pass, 1 violations among certified checks, 2 config error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hconv/catalog.hpp"
#include "hconv/errors.hpp"
#include "hconv/operator_checks.hpp"
#include "hconv/suite.hpp"

namespace {

constexpr const char* kReportDirEnv = "HCONV_REPORT_DIR";

std::pair<double, double> parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw hconv::ConfigError("interval must be written as m,M");
  }
  try {
    const double m = std::stod(text.substr(0, comma));
    const double M = std::stod(text.substr(comma + 1));
    return {m, M};
  } catch (const std::exception&) {
    throw hconv::ConfigError("could not parse interval '" + text + "'");
  }
}

int cmd_verify(const hconv::SuiteConfig& config, const std::string& report_path) {
  const hconv::SuiteReport report = hconv::run_suite(config);

  std::string path = report_path;
  if (path.empty()) {
    if (const char* dir = std::getenv(kReportDirEnv)) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / "report.jsonl").string();
    }
  }
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw hconv::ConfigError("cannot open report path '" + path + "'");
    hconv::write_report_jsonl(report, out);
    std::cout << "report written to " << path << "\n";
  } else {
    hconv::write_report_jsonl(report, std::cout);
  }
  std::cout << "checks=" << report.checks_run << " holds=" << report.holds
            << " violations=" << report.violations
            << " degenerate=" << report.degenerate << " wall_ms="
            << report.wall_ms << "\n";
  return hconv::exit_code(report);
}

int cmd_search(const std::string& target, const std::string& f_name,
               const std::string& h_name, int budget, std::uint64_t seed,
               int dim) {
  const auto witness =
      hconv::search_counterexample(target, f_name, h_name, budget, seed, dim);
  if (!witness) {
    std::cout << "no counterexample within budget " << budget << "\n";
    return 0;
  }
  std::cout << hconv::to_json(*witness) << "\n";
  const auto& cat = hconv::builtin_catalog();
  const bool certified =
      cat.is_certified(f_name, h_name, hconv::Certification::operator_h_convex) ||
      cat.is_certified(f_name, h_name,
                       hconv::Certification::operator_h_mid_convex);
  if (certified) {
    std::cerr << "counterexample against a certified pair\n";
    return 1;
  }
  return 0;
}

int cmd_beta(const std::string& f_name, const std::string& g_name,
             const std::string& h_name, double alpha, double m, double M) {
  const auto& cat = hconv::builtin_catalog();
  const hconv::ComplementaryConstants cc = hconv::beta_compute(
      cat.f(f_name), cat.f(g_name), cat.h(h_name), alpha, m, M);
  std::cout.precision(17);
  std::cout << "{\"beta\":" << cc.beta << ",\"t_star\":" << cc.t_star
            << ",\"mu_h\":" << cc.psi.mu_h << ",\"nu_h\":" << cc.psi.nu_h
            << ",\"mu_f\":" << cc.psi.mu_f << ",\"nu_f\":" << cc.psi.nu_f
            << ",\"f_m\":" << cc.psi.f_m << ",\"f_M\":" << cc.psi.f_M
            << ",\"alpha\":" << cc.alpha << "}\n";
  return 0;
}

int cmd_catalog() {
  const auto& cat = hconv::builtin_catalog();
  std::cout << "h functions:\n";
  for (const auto& h : cat.h_functions) std::cout << "  " << h.name << "\n";
  std::cout << "f functions:\n";
  for (const auto& f : cat.f_functions) std::cout << "  " << f.name << "\n";
  std::cout << "certified pairs:\n";
  for (const auto& p : cat.pairs) {
    std::cout << "  (" << p.f_name << ", " << p.h_name << ") "
              << to_string(p.certification) << " -- " << p.provenance << "\n";
  }
  std::cout << "checks:\n";
  for (const auto& id : hconv::known_check_ids()) {
    std::cout << "  " << id << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification lab for h-convex scalar and operator "
               "inequalities"};
  // --h names a catalog function, so help stays on --help only.
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run checker suites");
  verify->set_help_flag("--help", "print help");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites,
                     "suites to run: hclass scalar operator complementary");
  int trials = 100;
  verify->add_option("--trials,-n", trials, "instances per check");
  std::uint64_t seed = 1;
  verify->add_option("--seed,-s", seed, "master seed");
  std::vector<int> dims;
  verify->add_option("--dim,-d", dims, "operator dimensions");
  std::string interval = "0.5,2";
  verify->add_option("--interval,-i", interval, "spectrum interval m,M");
  double tol = hconv::kLoewnerTolRel;
  verify->add_option("--tol,-t", tol, "relative Loewner tolerance");
  std::string report_path;
  verify->add_option("--report,-r", report_path,
                     "report path (default: $" + std::string(kReportDirEnv) +
                         "/report.jsonl, else stdout)");
  std::vector<std::string> filter;
  verify->add_option("--catalog", filter, "restrict to these catalog names");

  // search
  auto* search = app.add_subcommand("search", "hunt for a counterexample");
  search->set_help_flag("--help", "print help");
  std::string target, f_name, h_name;
  search->add_option("--target", target, "check id")->required();
  search->add_option("--f", f_name, "f name")->required();
  search->add_option("--h", h_name, "h name")->required();
  int budget = 1000;
  search->add_option("--budget,-b", budget, "max random instances");
  std::uint64_t search_seed = 1;
  search->add_option("--seed,-s", search_seed, "search seed");
  int search_dim = 2;
  search->add_option("--dim,-d", search_dim, "instance dimension");

  // beta
  auto* beta = app.add_subcommand("beta", "complementary constant");
  beta->set_help_flag("--help", "print help");
  std::string bf, bg, bh;
  beta->add_option("--f", bf, "f name")->required();
  beta->add_option("--g", bg, "g name")->required();
  beta->add_option("--h", bh, "h name")->required();
  double alpha = 1.0;
  beta->add_option("--alpha,-a", alpha, "alpha");
  std::string beta_interval = "0,1";
  beta->add_option("--interval,-i", beta_interval, "interval m,M");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "catalog inspection");
  catalog->set_help_flag("--help", "print help");
  std::string catalog_action = "list";
  catalog->add_option("action", catalog_action, "list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      hconv::SuiteConfig config;
      if (!suites.empty()) {
        config.suites = std::set<std::string>(suites.begin(), suites.end());
      }
      config.trials = trials;
      config.seed = seed;
      if (!dims.empty()) config.dims = dims;
      std::tie(config.interval_lo, config.interval_hi) =
          parse_interval(interval);
      config.tol_rel = tol;
      config.catalog_filter = filter;
      return cmd_verify(config, report_path);
    }
    if (*search) {
      return cmd_search(target, f_name, h_name, budget, search_seed,
                        search_dim);
    }
    if (*beta) {
      const auto [m, M] = parse_interval(beta_interval);
      return cmd_beta(bf, bg, bh, alpha, m, M);
    }
    if (*catalog) {
      if (catalog_action != "list") {
        throw hconv::ConfigError("unknown catalog action '" + catalog_action +
                                 "'");
      }
      return cmd_catalog();
    }
  } catch (const hconv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hconv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
