#include "hconv/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <nlohmann/json.hpp>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

#include "hconv/catalog.hpp"
#include "hconv/errors.hpp"
#include "hconv/operator_checks.hpp"
#include "hconv/positive_maps.hpp"
#include "hconv/quadrature.hpp"
#include "hconv/scalar_checks.hpp"

namespace hconv {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t instance_seed(const SuiteConfig& cfg, std::string_view check,
                            std::uint64_t index) {
  return splitmix64(splitmix64(cfg.seed ^ fnv1a(check)) + index);
}

const std::vector<std::pair<std::string, std::string>>& rule_names() {
  static const std::vector<std::pair<std::string, std::string>> rules = {
      {"predicate.superadditive", "super-additivity h(x+y) >= h(x)+h(y)"},
      {"predicate.subadditive", "sub-additivity h(x+y) <= h(x)+h(y)"},
      {"predicate.supermultiplicative",
       "super-multiplicativity h(xy) >= h(x)h(y)"},
      {"predicate.submultiplicative",
       "sub-multiplicativity h(xy) <= h(x)h(y)"},
      {"predicate.h_convex_scalar", "scalar h-convexity sampling"},
      {"scalar.char1", "segment characterization of h-convexity"},
      {"scalar.char3", "extrapolation bound for multiplicative h"},
      {"scalar.even_chain", "two-sided even-function chain"},
      {"scalar.even_integral", "integral mean bounds for even functions"},
      {"scalar.hh_norm", "Hermite-Hadamard bounds for norm powers"},
      {"scalar.mercer_lemma", "Jensen-Mercer two-point lemma"},
      {"scalar.mercer_h", "generalized Jensen-Mercer bound"},
      {"operator.hmid", "operator midpoint h-convexity"},
      {"operator.jensen_contraction", "contractive operator Jensen inequality"},
      {"operator.dcj", "Davis-Choi-Jensen inequality with h-weight"},
      {"operator.weighted_jensen", "weighted operator Jensen inequality"},
      {"operator.cor_weighted_dcj", "weighted Jensen through a unital map"},
      {"operator.mercer_chain", "operator Jensen-Mercer chain"},
      {"complementary.jensen", "complementary Jensen with explicit constant"},
      {"complementary.linear_f", "linear-form complementary bound"},
  };
  return rules;
}

std::string rule_of(const std::string& check_id) {
  for (const auto& [id, rule] : rule_names()) {
    if (id == check_id) return rule;
  }
  return check_id;
}

struct Runner {
  const SuiteConfig& cfg;
  const Catalog& cat = builtin_catalog();
  std::vector<CheckRecord>& records;

  bool allowed(const std::string& name) const {
    if (cfg.catalog_filter.empty()) return true;
    return std::find(cfg.catalog_filter.begin(), cfg.catalog_filter.end(),
                     name) != cfg.catalog_filter.end();
  }

  bool allowed(const CertifiedPair& p) const {
    return allowed(p.f_name) && allowed(p.h_name);
  }

  void push(const std::string& check_id, std::string instance,
            Verdict verdict, double gap, double tol, std::string witness) {
    CheckRecord rec;
    rec.check_id = check_id;
    rec.rule = rule_of(check_id);
    rec.instance = std::move(instance);
    rec.verdict = verdict;
    rec.gap = gap;
    rec.tol = tol;
    rec.certified = true;
    if (verdict == Verdict::violated) rec.witness = std::move(witness);
    records.push_back(std::move(rec));
  }

  void push_report(const std::string& check_id, std::string instance,
                   const IneqReport& rep) {
    push(check_id, std::move(instance), rep.verdict, rep.gap_min_eig,
         rep.tolerance_used, rep.witness);
  }

  // Generated instances that trip a precondition are degenerate, not
  // counterexamples.
  template <typename Fn>
  void guarded(const std::string& check_id, const std::string& instance,
               Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      push(check_id, instance + "|error=" + e.what(), Verdict::degenerate, 0.0,
           0.0, "");
    }
  }

  // --- hclass ---------------------------------------------------------
  void run_hclass() {
    for (const auto& h : cat.h_functions) {
      if (!allowed(h.name)) continue;
      auto predicate = [&](const char* id, HFlag flag, auto&& checker) {
        if (!h.has(flag)) return;
        guarded(id, h.name, [&] {
          const PredicateReport rep = checker();
          push(id, h.name,
               rep.holds ? Verdict::holds : Verdict::violated,
               rep.worst_violation, rep.tolerance,
               "witness=(" + std::to_string(rep.witness.first) + "," +
                   std::to_string(rep.witness.second) + ")");
        });
      };
      predicate("predicate.superadditive", HFlag::superadditive, [&] {
        return check_superadditive(h, kPredicateDefaultGrid, 1.0);
      });
      predicate("predicate.subadditive", HFlag::subadditive, [&] {
        return check_subadditive(h, kPredicateDefaultGrid, 1.0);
      });
      predicate("predicate.supermultiplicative", HFlag::supermultiplicative,
                [&] {
                  return check_supermultiplicative(h, kPredicateDefaultGrid);
                });
      predicate("predicate.submultiplicative", HFlag::submultiplicative, [&] {
        return check_submultiplicative(h, kPredicateDefaultGrid);
      });
    }
    int index = 0;
    for (const auto& p : cat.certified(Certification::scalar_h_convex)) {
      if (!allowed(p)) continue;
      const auto seed = instance_seed(cfg, "predicate.h_convex_scalar",
                                      static_cast<std::uint64_t>(index++));
      const std::string instance =
          p.f_name + "|" + p.h_name + "|seed=" + std::to_string(seed);
      guarded("predicate.h_convex_scalar", instance, [&] {
        const PredicateReport rep = check_h_convex_scalar(
            cat.f(p.f_name), cat.h(p.h_name), std::max(cfg.trials, 1000),
            seed);
        push("predicate.h_convex_scalar", instance,
             rep.holds ? Verdict::holds : Verdict::violated,
             rep.worst_violation, 0.0,
             "witness=(" + std::to_string(rep.witness.first) + "," +
                 std::to_string(rep.witness.second) + ")");
      });
    }
  }

  // --- scalar ----------------------------------------------------------
  VectorPoint random_point(std::mt19937_64& rng, int dim, double coord_cap,
                           NormKind kind) const {
    std::uniform_real_distribution<double> u(-coord_cap, coord_cap);
    VectorPoint p;
    p.norm_kind = kind;
    p.coords.resize(dim);
    for (double& c : p.coords) c = u(rng);
    return p;
  }

  static NormKind kind_of(int i) {
    switch (i % 3) {
      case 0: return NormKind::euclidean;
      case 1: return NormKind::one;
      default: return NormKind::infinity_norm;
    }
  }

  void run_scalar() {
    const auto pairs = [&] {
      std::vector<CertifiedPair> out;
      for (const auto& p : cat.certified(Certification::scalar_h_convex)) {
        if (allowed(p)) out.push_back(p);
      }
      return out;
    }();
    if (pairs.empty()) return;

    auto for_each_instance = [&](const std::string& check_id, auto&& body) {
      for (int i = 0; i < cfg.trials; ++i) {
        const auto seed =
            instance_seed(cfg, check_id, static_cast<std::uint64_t>(i));
        std::mt19937_64 rng(seed);
        body(i, seed, rng);
      }
    };

    for_each_instance("scalar.char1", [&](int i, std::uint64_t seed, auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const auto& f = cat.f(p.f_name);
      const VectorFn vf = radial(f);
      const int dim = 1 + static_cast<int>(rng() % 8);
      const double cap = 0.1 * f.domain_hi;
      const VectorPoint x = random_point(rng, dim, cap, kind_of(i));
      const VectorPoint y = random_point(rng, dim, cap, kind_of(i));
      const std::string instance = p.f_name + "|" + p.h_name + "|dim=" +
                                   std::to_string(dim) + "|seed=" +
                                   std::to_string(seed);
      guarded("scalar.char1", instance, [&] {
        push_report("scalar.char1", instance,
                    check_char1(vf, cat.h(p.h_name), x, y, 16, rng()));
      });
    });

    for_each_instance("scalar.char3", [&](int i, std::uint64_t seed, auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const auto& h = cat.h(p.h_name);
      if (!h.has(HFlag::multiplicative) || !h.has(HFlag::strictly_positive)) {
        return;  // the extrapolation form only applies to multiplicative h
      }
      const auto& f = cat.f(p.f_name);
      const VectorFn vf = radial(f);
      const int dim = 1 + static_cast<int>(rng() % 8);
      const double cap = f.domain_hi / 32.0;
      const VectorPoint x = random_point(rng, dim, cap, kind_of(i));
      const VectorPoint y = random_point(rng, dim, cap, kind_of(i));
      const std::string instance = p.f_name + "|" + p.h_name + "|dim=" +
                                   std::to_string(dim) + "|seed=" +
                                   std::to_string(seed);
      guarded("scalar.char3", instance, [&] {
        push_report("scalar.char3", instance,
                    check_char3(vf, h, x, y, 1.0, 16, rng()));
      });
    });

    for_each_instance("scalar.even_chain",
                      [&](int i, std::uint64_t seed, auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const auto& f = cat.f(p.f_name);
      const VectorFn vf = radial(f);
      const int dim = 1 + static_cast<int>(rng() % 8);
      const double cap = 0.1 * f.domain_hi;
      const VectorPoint x = random_point(rng, dim, cap, kind_of(i));
      const VectorPoint y = random_point(rng, dim, cap, kind_of(i));
      std::uniform_real_distribution<double> ut(0.01, 0.99);
      const double t = ut(rng);
      const std::string instance = p.f_name + "|" + p.h_name + "|dim=" +
                                   std::to_string(dim) + "|seed=" +
                                   std::to_string(seed);
      guarded("scalar.even_chain", instance, [&] {
        push_report("scalar.even_chain", instance,
                    check_even_chain(vf, cat.h(p.h_name), x, y, t));
      });
    });

    for_each_instance("scalar.even_integral",
                      [&](int i, std::uint64_t seed, auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const auto& h = cat.h(p.h_name);
      if (!h.defined_at(0.0) || !h.defined_at(1.0)) return;
      const auto& f = cat.f(p.f_name);
      const VectorFn vf = radial(f);
      const int dim = 1 + static_cast<int>(rng() % 8);
      const double cap = 0.1 * f.domain_hi;
      const VectorPoint x = random_point(rng, dim, cap, kind_of(i));
      const VectorPoint y = random_point(rng, dim, cap, kind_of(i));
      const std::string instance = p.f_name + "|" + p.h_name + "|dim=" +
                                   std::to_string(dim) + "|seed=" +
                                   std::to_string(seed);
      guarded("scalar.even_integral", instance, [&] {
        push_report("scalar.even_integral", instance,
                    check_even_integral(vf, h, x, y, kQuadDefaultTol));
      });
    });

    for_each_instance("scalar.hh_norm",
                      [&](int i, std::uint64_t seed, auto& rng) {
      static const double ps[] = {0.25, 0.5, 0.75};
      const double p = ps[i % 3];
      const int dim = 1 + static_cast<int>(rng() % 8);
      const VectorPoint x = random_point(rng, dim, 2.0, kind_of(i));
      const VectorPoint y = random_point(rng, dim, 2.0, kind_of(i));
      const std::string instance = "p=" + std::to_string(p) + "|dim=" +
                                   std::to_string(dim) + "|seed=" +
                                   std::to_string(seed);
      guarded("scalar.hh_norm", instance, [&] {
        push_report("scalar.hh_norm", instance,
                    check_hh_norm(x, y, p, kQuadDefaultTol));
      });
    });

    for_each_instance("scalar.mercer_lemma",
                      [&](int i, std::uint64_t seed, auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const auto& f = cat.f(p.f_name);
      std::uniform_real_distribution<double> ux(0.05 * f.domain_hi,
                                                0.9 * f.domain_hi);
      double x = ux(rng);
      double y = ux(rng);
      if (x > y) std::swap(x, y);
      std::uniform_real_distribution<double> uz(x, y);
      const double z = uz(rng);
      const std::string instance = p.f_name + "|" + p.h_name + "|seed=" +
                                   std::to_string(seed);
      guarded("scalar.mercer_lemma", instance, [&] {
        push_report("scalar.mercer_lemma", instance,
                    check_mercer_lemma(f, cat.h(p.h_name), x, y, z));
      });
    });

    for_each_instance("scalar.mercer_h",
                      [&](int i, std::uint64_t seed, auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const auto& f = cat.f(p.f_name);
      const int n = 2 + static_cast<int>(rng() % 5);
      std::uniform_real_distribution<double> ux(0.05 * f.domain_hi,
                                                0.9 * f.domain_hi);
      std::vector<double> xs(n);
      for (double& v : xs) v = ux(rng);
      // One deliberately degenerate instance exercises that verdict path.
      if (i == 7 && cfg.trials > 7) std::fill(xs.begin(), xs.end(), xs[0]);
      std::sort(xs.begin(), xs.end());
      WeightVector w;
      std::uniform_real_distribution<double> uw(0.2, 1.0);
      w.weights.resize(n);
      double sum = 0.0;
      for (double& v : w.weights) sum += (v = uw(rng));
      for (double& v : w.weights) v /= sum;
      const std::string instance = p.f_name + "|" + p.h_name + "|n=" +
                                   std::to_string(n) + "|seed=" +
                                   std::to_string(seed);
      guarded("scalar.mercer_h", instance, [&] {
        push_report("scalar.mercer_h", instance,
                    check_mercer_h(f, cat.h(p.h_name), xs, w));
      });
    });
  }

  // --- operator ---------------------------------------------------------
  std::vector<HermitianMatrix> random_operators(std::mt19937_64& rng, int n,
                                                int dim) const {
    std::vector<HermitianMatrix> as;
    as.reserve(n);
    for (int j = 0; j < n; ++j) {
      as.push_back(
          rand_hermitian(dim, cfg.interval_lo, cfg.interval_hi, rng()));
    }
    return as;
  }

  WeightVector random_weights(std::mt19937_64& rng, int n) const {
    WeightVector w;
    w.weights.resize(n);
    std::uniform_real_distribution<double> uw(0.2, 1.0);
    double sum = 0.0;
    for (double& v : w.weights) sum += (v = uw(rng));
    for (double& v : w.weights) v /= sum;
    return w;
  }

  PositiveMapSpec random_unital_map(std::mt19937_64& rng, int variant,
                                    int dim) const {
    switch (variant % 4) {
      case 0:
        return random_pinching(dim, 1 + static_cast<int>(rng() % dim), rng());
      case 1:
        return PositiveMapSpec::conjugation_unital(
            random_isometry(dim, dim, rng()));
      case 2:
        return PositiveMapSpec::normalized_trace(dim);
      default: {
        auto a = PositiveMapSpec::conjugation_unital(
            random_isometry(dim, dim, rng()));
        auto b = PositiveMapSpec::conjugation_unital(
            random_isometry(dim, dim, rng()));
        return PositiveMapSpec::mixture({std::move(a), std::move(b)},
                                        {0.5, 0.5});
      }
    }
  }

  std::vector<CertifiedPair> operator_pairs(bool need_full_convexity,
                                            bool need_supermult,
                                            bool need_h_on_01) const {
    std::vector<CertifiedPair> out;
    for (const auto& p : cat.pairs) {
      if (p.certification == Certification::scalar_h_convex) continue;
      if (need_full_convexity &&
          p.certification != Certification::operator_h_convex) {
        continue;
      }
      if (!allowed(p)) continue;
      const auto& f = cat.f(p.f_name);
      const auto& h = cat.h(p.h_name);
      if (f.domain_lo > cfg.interval_lo || f.domain_hi < cfg.interval_hi) {
        continue;
      }
      if (need_supermult && !h.has(HFlag::supermultiplicative)) continue;
      if (need_h_on_01 && (!h.defined_at(0.0) || !h.defined_at(1.0))) continue;
      // Avoid duplicate (f,h) combos from multi-certified pairs.
      const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& q) {
        return q.f_name == p.f_name && q.h_name == p.h_name;
      });
      if (!dup) out.push_back(p);
    }
    return out;
  }

  void run_operator() {
    const double m = cfg.interval_lo;
    const double M = cfg.interval_hi;

    auto for_each = [&](const std::string& check_id, auto&& body) {
      std::uint64_t counter = 0;
      for (int dim : cfg.dims) {
        for (int i = 0; i < cfg.trials; ++i) {
          const auto seed = instance_seed(cfg, check_id, counter++);
          std::mt19937_64 rng(seed);
          body(i, dim, seed, rng);
        }
      }
    };

    const auto mid_pairs = operator_pairs(false, false, false);
    const auto jensen_pairs = operator_pairs(true, true, false);
    const auto chain_pairs = operator_pairs(true, false, true);

    if (!mid_pairs.empty()) {
      for_each("operator.hmid", [&](int i, int dim, std::uint64_t seed,
                                    auto& rng) {
        const auto& p = mid_pairs[i % mid_pairs.size()];
        const auto as = random_operators(rng, 2, dim);
        const std::string instance = p.f_name + "|" + p.h_name + "|dim=" +
                                     std::to_string(dim) + "|seed=" +
                                     std::to_string(seed);
        guarded("operator.hmid", instance, [&] {
          push_report("operator.hmid", instance,
                      check_op_hmid(cat.f(p.f_name), cat.h(p.h_name), as[0],
                                    as[1], cfg.tol_rel));
        });
      });

      for_each("operator.jensen_contraction",
               [&](int i, int dim, std::uint64_t seed, auto& rng) {
        const auto& p = mid_pairs[i % mid_pairs.size()];
        const int n = 1 + static_cast<int>(rng() % 3);
        const int dout = (i % 2 == 0 || dim == 1) ? dim : dim - 1;
        const MapFamily family =
            random_family(n, dim, dout, FamilyMode::jointly_unital, rng());
        const auto as = random_operators(rng, n, dim);
        const std::string instance = p.f_name + "|" + p.h_name + "|n=" +
                                     std::to_string(n) + "|dim=" +
                                     std::to_string(dim) + "|seed=" +
                                     std::to_string(seed);
        guarded("operator.jensen_contraction", instance, [&] {
          push_report("operator.jensen_contraction", instance,
                      check_jensen_contraction(cat.f(p.f_name),
                                               cat.h(p.h_name), as, family,
                                               cfg.tol_rel));
        });
      });

      for_each("operator.dcj", [&](int i, int dim, std::uint64_t seed,
                                   auto& rng) {
        const auto& p = mid_pairs[i % mid_pairs.size()];
        const PositiveMapSpec phi = random_unital_map(rng, i, dim);
        const auto as = random_operators(rng, 1, dim);
        const std::string instance = p.f_name + "|" + p.h_name + "|map=" +
                                     phi.variant_name() + "|dim=" +
                                     std::to_string(dim) + "|seed=" +
                                     std::to_string(seed);
        guarded("operator.dcj", instance, [&] {
          push_report("operator.dcj", instance,
                      check_dcj(cat.f(p.f_name), cat.h(p.h_name), phi, as[0],
                                cfg.tol_rel));
        });
      });
    }

    // Weighted Jensen runs the certified convex pairs plus the reversed
    // (operator concave, sub-multiplicative) probe when the catalog has it.
    std::vector<std::pair<std::string, std::string>> wj_combos;
    for (const auto& p : jensen_pairs) wj_combos.push_back({p.f_name, p.h_name});
    if (allowed("f:pow:0.5") && allowed("h:id") && cfg.interval_lo >= 0.0 &&
        cfg.interval_hi <= cat.f("f:pow:0.5").domain_hi) {
      wj_combos.push_back({"f:pow:0.5", "h:id"});
    }
    if (!wj_combos.empty()) {
      for_each("operator.weighted_jensen",
               [&](int i, int dim, std::uint64_t seed, auto& rng) {
        const auto& [fn, hn] = wj_combos[i % wj_combos.size()];
        const int n = 2 + static_cast<int>(rng() % 2);
        const auto as = random_operators(rng, n, dim);
        const WeightVector w = random_weights(rng, n);
        const std::string instance = fn + "|" + hn + "|n=" +
                                     std::to_string(n) + "|dim=" +
                                     std::to_string(dim) + "|seed=" +
                                     std::to_string(seed);
        guarded("operator.weighted_jensen", instance, [&] {
          push_report("operator.weighted_jensen", instance,
                      check_weighted_jensen(cat.f(fn), cat.h(hn), as, w,
                                            cfg.tol_rel));
        });
      });
    }

    if (!jensen_pairs.empty()) {
      for_each("operator.cor_weighted_dcj",
               [&](int i, int dim, std::uint64_t seed, auto& rng) {
        const auto& p = jensen_pairs[i % jensen_pairs.size()];
        const PositiveMapSpec phi = random_unital_map(rng, i, dim);
        const int n = 2 + static_cast<int>(rng() % 2);
        const auto as = random_operators(rng, n, dim);
        const WeightVector w = random_weights(rng, n);
        const std::string instance = p.f_name + "|" + p.h_name + "|map=" +
                                     phi.variant_name() + "|dim=" +
                                     std::to_string(dim) + "|seed=" +
                                     std::to_string(seed);
        guarded("operator.cor_weighted_dcj", instance, [&] {
          push_report("operator.cor_weighted_dcj", instance,
                      check_cor_weighted_dcj(cat.f(p.f_name), cat.h(p.h_name),
                                             phi, as, w, cfg.tol_rel));
        });
      });
    }

    if (!chain_pairs.empty()) {
      for_each("operator.mercer_chain",
               [&](int i, int dim, std::uint64_t seed, auto& rng) {
        const auto& p = chain_pairs[i % chain_pairs.size()];
        const auto& h = cat.h(p.h_name);
        const int n = 1 + static_cast<int>(rng() % 3);
        // The weighted (each-unital) chain constant is a theorem only when
        // nu_h = h(0) vanishes; h's with h(0) > 0 run jointly unital, where
        // the constant is provable for every n.
        const bool jointly = (i % 3 == 2) ||
                             !h.has(HFlag::supermultiplicative) ||
                             h(0.0) > 0.0;
        MapFamily family;
        WeightVector w;
        if (jointly) {
          const int dout = (i % 2 == 0 || dim == 1) ? dim : dim - 1;
          family = random_family(n, dim, dout, FamilyMode::jointly_unital,
                                 rng());
        } else {
          family = random_family(n, dim, dim, FamilyMode::each_unital, rng());
          w = random_weights(rng, n);
        }
        const auto as = random_operators(rng, n, dim);
        const std::string instance =
            p.f_name + "|" + p.h_name + "|n=" + std::to_string(n) + "|dim=" +
            std::to_string(dim) + "|mode=" + to_string(family.mode) +
            "|seed=" + std::to_string(seed);
        guarded("operator.mercer_chain", instance, [&] {
          const MercerChainReport rep = check_mercer_operator(
              cat.f(p.f_name), h, family, as, w, m, M, cfg.tol_rel);
          push("operator.mercer_chain", instance, rep.verdict,
               std::min(rep.gap1, rep.gap2), rep.tolerance_used, rep.witness);
        });
      });
    }
  }

  // --- complementary -----------------------------------------------------
  void run_complementary() {
    const double m = cfg.interval_lo;
    const double M = cfg.interval_hi;
    const auto pairs = operator_pairs(true, false, true);
    if (pairs.empty()) return;
    static const double alphas[] = {1.0, 0.5, 2.0};

    auto for_each = [&](const std::string& check_id, auto&& body) {
      std::uint64_t counter = 0;
      for (int dim : cfg.dims) {
        for (int i = 0; i < cfg.trials; ++i) {
          const auto seed = instance_seed(cfg, check_id, counter++);
          std::mt19937_64 rng(seed);
          body(i, dim, seed, rng);
        }
      }
    };

    auto build = [&](int i, int dim, auto& rng, MapFamily& family,
                     std::vector<HermitianMatrix>& as, WeightVector& w,
                     const HFunction& h) {
      const int n = 1 + static_cast<int>(rng() % 3);
      // Same regime split as the operator chain: weighted families only
      // where nu_h = h(0) vanishes.
      const bool jointly = (i % 3 == 2) ||
                           !h.has(HFlag::supermultiplicative) || h(0.0) > 0.0;
      if (jointly) {
        family = random_family(n, dim, dim, FamilyMode::jointly_unital, rng());
      } else {
        family = random_family(n, dim, dim, FamilyMode::each_unital, rng());
        w = random_weights(rng, n);
      }
      as = random_operators(rng, n, dim);
    };

    for_each("complementary.jensen", [&](int i, int dim, std::uint64_t seed,
                                         auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const double alpha = alphas[i % 3];
      MapFamily family;
      std::vector<HermitianMatrix> as;
      WeightVector w;
      build(i, dim, rng, family, as, w, cat.h(p.h_name));
      const std::string instance =
          p.f_name + "|" + p.h_name + "|alpha=" + std::to_string(alpha) +
          "|dim=" + std::to_string(dim) + "|mode=" + to_string(family.mode) +
          "|seed=" + std::to_string(seed);
      guarded("complementary.jensen", instance, [&] {
        push_report("complementary.jensen", instance,
                    check_complementary(cat.f(p.f_name), cat.f(p.f_name),
                                        cat.h(p.h_name), alpha, family, as, w,
                                        m, M, cfg.tol_rel));
      });
    });

    for_each("complementary.linear_f", [&](int i, int dim, std::uint64_t seed,
                                           auto& rng) {
      const auto& p = pairs[i % pairs.size()];
      const double alpha = alphas[i % 3];
      MapFamily family;
      std::vector<HermitianMatrix> as;
      WeightVector w;
      build(i, dim, rng, family, as, w, cat.h(p.h_name));
      const std::string instance =
          p.f_name + "|" + p.h_name + "|alpha=" + std::to_string(alpha) +
          "|dim=" + std::to_string(dim) + "|mode=" + to_string(family.mode) +
          "|seed=" + std::to_string(seed);
      guarded("complementary.linear_f", instance, [&] {
        push_report("complementary.linear_f", instance,
                    check_linear_form_bound(cat.f(p.f_name), cat.f(p.f_name),
                                          cat.h(p.h_name), alpha, family, as,
                                          w, m, M, cfg.tol_rel));
      });
    });
  }
};

}  // namespace

void validate(const SuiteConfig& config) {
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (!(config.interval_lo < config.interval_hi)) {
    throw ConfigError("interval requires m < M");
  }
  if (!(config.tol_rel > 0.0)) throw ConfigError("tol_rel must be positive");
  if (config.dims.empty()) throw ConfigError("at least one dimension needed");
  for (int d : config.dims) {
    if (d < 1 || d > kDefaultDimCap) {
      throw ConfigError("dimensions must lie in [1, " +
                        std::to_string(kDefaultDimCap) + "]");
    }
  }
  static const std::set<std::string> known = {"hclass", "scalar", "operator",
                                              "complementary"};
  for (const auto& s : config.suites) {
    if (!known.count(s)) throw ConfigError("unknown suite '" + s + "'");
  }
  const auto& cat = builtin_catalog();
  for (const auto& name : config.catalog_filter) {
    if (!cat.has_f(name) && !cat.has_h(name)) {
      throw ConfigError("unknown catalog name '" + name + "'");
    }
  }
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();

  SuiteReport report;
  report.config = config;
  Runner runner{config, builtin_catalog(), report.records};
  if (config.suites.count("hclass")) runner.run_hclass();
  if (config.suites.count("scalar")) runner.run_scalar();
  if (config.suites.count("operator")) runner.run_operator();
  if (config.suites.count("complementary")) runner.run_complementary();

  for (const auto& rec : report.records) {
    ++report.checks_run;
    switch (rec.verdict) {
      case Verdict::holds: ++report.holds; break;
      case Verdict::violated: ++report.violations; break;
      case Verdict::degenerate: ++report.degenerate; break;
    }
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

int exit_code(const SuiteReport& report) {
  for (const auto& rec : report.records) {
    if (rec.certified && rec.verdict == Verdict::violated) return 1;
  }
  return 0;
}

void write_report_jsonl(const SuiteReport& report, std::ostream& os) {
  json cfg;
  cfg["type"] = "config";
  cfg["seed"] = report.config.seed;
  cfg["trials"] = report.config.trials;
  cfg["dims"] = report.config.dims;
  cfg["interval"] = {report.config.interval_lo, report.config.interval_hi};
  cfg["tol_rel"] = report.config.tol_rel;
  cfg["suites"] = report.config.suites;
  cfg["catalog_filter"] = report.config.catalog_filter;
  os << cfg.dump() << "\n";
  for (const auto& rec : report.records) {
    json r;
    r["type"] = "record";
    r["check"] = rec.check_id;
    r["rule"] = rec.rule;
    r["instance"] = rec.instance;
    r["verdict"] = to_string(rec.verdict);
    r["gap"] = rec.gap;
    r["tol"] = rec.tol;
    r["certified"] = rec.certified;
    if (!rec.witness.empty()) r["witness"] = rec.witness;
    os << r.dump() << "\n";
  }
  json summary;
  summary["type"] = "summary";
  summary["checks_run"] = report.checks_run;
  summary["holds"] = report.holds;
  summary["violations"] = report.violations;
  summary["degenerate"] = report.degenerate;
  summary["wall_ms"] = report.wall_ms;
  os << summary.dump() << "\n";
}

std::vector<std::string> known_check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, rule] : rule_names()) ids.push_back(id);
  return ids;
}

namespace {

json matrix_json(const ComplexMatrix& a) {
  json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  json entries = json::array();
  for (const auto& [re, im] : to_pairs(a)) {
    entries.push_back({re, im});
  }
  j["entries"] = std::move(entries);
  return j;
}

json matrix_json(const HermitianMatrix& a) { return matrix_json(a.raw()); }

json map_json(const PositiveMapSpec& phi) {
  json j;
  j["variant"] = phi.variant_name();
  j["dim_in"] = phi.dim_in;
  j["dim_out"] = phi.dim_out;
  switch (phi.variant) {
    case PositiveMapSpec::Variant::conjugation:
      j["frame"] = matrix_json(phi.frame);
      break;
    case PositiveMapSpec::Variant::pinching: {
      json ps = json::array();
      for (const auto& p : phi.projections) ps.push_back(matrix_json(p));
      j["projections"] = std::move(ps);
      break;
    }
    case PositiveMapSpec::Variant::mixture: {
      json children = json::array();
      for (const auto& c : phi.children) children.push_back(map_json(c));
      j["children"] = std::move(children);
      j["weights"] = phi.weights;
      break;
    }
    case PositiveMapSpec::Variant::normalized_trace:
      break;
  }
  return j;
}

// Evaluates one target check on a candidate instance; true means violated.
bool violates(const std::string& target, const ScalarFunction& f,
              const HFunction& h, const std::vector<HermitianMatrix>& as,
              const WeightVector& w, std::uint64_t map_seed, double* gap) {
  IneqReport rep;
  if (target == "operator.weighted_jensen") {
    rep = check_weighted_jensen(f, h, as, w);
  } else if (target == "operator.hmid") {
    rep = check_op_hmid(f, h, as.at(0), as.at(1));
  } else if (target == "operator.dcj") {
    const int dim = as.at(0).dim();
    const PositiveMapSpec phi =
        random_pinching(dim, std::max(1, dim / 2 + 1), map_seed);
    rep = check_dcj(f, h, phi, as.at(0));
  } else {
    throw ConfigError("unknown or unsupported search target '" + target + "'");
  }
  *gap = rep.gap_min_eig;
  return rep.verdict == Verdict::violated;
}

}  // namespace

std::string to_json(const Counterexample& ce) {
  json j;
  j["check"] = ce.check_id;
  j["f"] = ce.f_name;
  j["h"] = ce.h_name;
  j["dim"] = ce.matrices.empty() ? 0 : ce.matrices.front().dim();
  j["gap"] = ce.gap;
  j["weights"] = ce.weights.weights;
  json mats = json::array();
  for (const auto& a : ce.matrices) mats.push_back(matrix_json(a));
  j["matrices"] = std::move(mats);
  if (!ce.map_json.empty()) j["map"] = json::parse(ce.map_json);
  j["trials_used"] = ce.trials_used;
  j["shrink_steps"] = ce.shrink_steps;
  return j.dump();
}

std::string to_json(const PositiveMapSpec& phi) { return map_json(phi).dump(); }

std::optional<Counterexample> search_counterexample(
    const std::string& target_check, const std::string& f_name,
    const std::string& h_name, int budget, std::uint64_t seed, int dim) {
  if (budget < 1) throw ConfigError("budget must be >= 1");
  const auto& cat = builtin_catalog();
  const ScalarFunction& f = cat.f(f_name);
  const HFunction& h = cat.h(h_name);
  const auto ids = known_check_ids();
  if (std::find(ids.begin(), ids.end(), target_check) == ids.end()) {
    throw ConfigError("unknown check id '" + target_check + "'");
  }
  // Instances live on f's declared domain.
  const double m = f.domain_lo;
  const double M = f.domain_hi;
  const int n_ops = target_check == "operator.weighted_jensen" ? 2
                    : target_check == "operator.hmid"          ? 2
                                                               : 1;

  for (int trial = 0; trial < budget; ++trial) {
    const std::uint64_t s = splitmix64(seed + static_cast<std::uint64_t>(trial));
    std::mt19937_64 rng(s);
    std::vector<HermitianMatrix> as;
    for (int j = 0; j < n_ops; ++j) as.push_back(rand_hermitian(dim, m, M, rng()));
    WeightVector w;
    if (target_check == "operator.weighted_jensen") {
      std::uniform_real_distribution<double> uw(0.2, 1.0);
      w.weights.resize(n_ops);
      double sum = 0.0;
      for (double& v : w.weights) sum += (v = uw(rng));
      for (double& v : w.weights) v /= sum;
    }
    const std::uint64_t map_seed = rng();

    double gap = 0.0;
    if (!violates(target_check, f, h, as, w, map_seed, &gap)) continue;

    Counterexample ce;
    ce.check_id = target_check;
    ce.f_name = f_name;
    ce.h_name = h_name;
    ce.trials_used = trial + 1;

    // Greedy shrink: halve the dimension while the violation survives,
    // then try erasing off-diagonal structure.
    std::vector<HermitianMatrix> cur = as;
    int cur_dim = dim;
    while (cur_dim > 1) {
      const int half = (cur_dim + 1) / 2;
      std::vector<HermitianMatrix> smaller;
      for (const auto& a : cur) {
        smaller.push_back(
            hermitian_unchecked(a.raw().topLeftCorner(half, half)));
      }
      double small_gap = 0.0;
      bool still = false;
      try {
        still = violates(target_check, f, h, smaller, w, map_seed, &small_gap);
      } catch (const Error&) {
        still = false;  // shrunk instance broke a precondition; keep larger
      }
      if (!still) break;
      cur = std::move(smaller);
      cur_dim = half;
      gap = small_gap;
      ++ce.shrink_steps;
    }
    {
      std::vector<HermitianMatrix> diag;
      for (const auto& a : cur) {
        diag.push_back(hermitian_unchecked(
            ComplexMatrix(a.raw().diagonal().asDiagonal())));
      }
      double diag_gap = 0.0;
      bool still = false;
      try {
        still = violates(target_check, f, h, diag, w, map_seed, &diag_gap);
      } catch (const Error&) {
        still = false;
      }
      if (still) {
        cur = std::move(diag);
        gap = diag_gap;
        ++ce.shrink_steps;
      }
    }
    if (target_check == "operator.dcj") {
      const int final_dim = cur.front().dim();
      ce.map_json = to_json(
          random_pinching(final_dim, std::max(1, final_dim / 2 + 1), map_seed));
    }
    ce.matrices = std::move(cur);
    ce.weights = std::move(w);
    ce.gap = gap;
    return ce;
  }
  return std::nullopt;
}

}  // namespace hconv
