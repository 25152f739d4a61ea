#ifndef HCONV_CATALOG_HPP
#define HCONV_CATALOG_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hconv/report.hpp"

namespace hconv {

// Structural flags are declared by the catalog and spot-checked by the
// predicate operations below; they are not inferred (operator convexity in
// particular is not decidable by scalar sampling).
enum class HFlag {
  superadditive,
  subadditive,
  additive,
  supermultiplicative,
  submultiplicative,
  multiplicative,
  operator_convex,
  strictly_positive,
};

enum class FFlag {
  nonnegative,
  h_convex_scalar,
  operator_h_convex,
  operator_h_mid_convex,
  operator_h_concave,
  operator_monotone,
  even,
};

/// A non-negative weight function h on an interval J containing (0,1).
struct HFunction {
  std::string name;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  bool lo_open = false;  // h undefined at domain_lo itself (e.g. 1/t at 0)
  std::function<double(double)> eval;
  std::set<HFlag> flags;

  bool has(HFlag f) const { return flags.count(f) > 0; }
  bool defined_at(double t) const;
  /// Evaluates h, throwing DomainError outside J.
  double operator()(double t) const;
};

/// A scalar function f on [domain_lo, domain_hi] = [m, M].
struct ScalarFunction {
  std::string name;
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  std::function<double(double)> eval;
  std::function<double(double)> derivative;  // optional (empty when absent)
  std::set<FFlag> flags;

  bool has(FFlag f) const { return flags.count(f) > 0; }
  bool has_derivative() const { return static_cast<bool>(derivative); }
  bool defined_at(double t) const {
    return t >= domain_lo && t <= domain_hi;
  }
  double operator()(double t) const;
};

enum class Certification {
  scalar_h_convex,
  operator_h_convex,
  operator_h_mid_convex,
};

std::string to_string(Certification c);

/// A theorem-hypothesis pair (f, h) together with why it qualifies.
struct CertifiedPair {
  std::string f_name;
  std::string h_name;
  Certification certification;
  std::string provenance;
};

// ---------------------------------------------------------------------------
// Sampled structural predicates. These are certificates, not proofs: a
// uniform grid plus an equally sized batch of seeded-random points, with
// violations below kPredicateTol treated as roundoff.
// ---------------------------------------------------------------------------

inline constexpr double kPredicateTol = 1e-12;
inline constexpr int kPredicateDefaultGrid = 256;

/// h(x+y) >= h(x) + h(y) over pairs from [0, range_hi] (skipping endpoints
/// h is not defined at). Throws DomainError when a sampled sum exits J.
PredicateReport check_superadditive(const HFunction& h, int grid_n,
                                    double range_hi);
PredicateReport check_subadditive(const HFunction& h, int grid_n,
                                  double range_hi);

/// h(xy) >= h(x)h(y) over pairs from (0, 1].
PredicateReport check_supermultiplicative(const HFunction& h, int grid_n);
PredicateReport check_submultiplicative(const HFunction& h, int grid_n);

/// f(tx+(1-t)y) <= h(t)f(x) + h(1-t)f(y) + 1e-10*scale on random triples
/// (x, y, t), x,y in f's domain, t in (0,1).
PredicateReport check_h_convex_scalar(const ScalarFunction& f,
                                      const HFunction& h, int samples,
                                      std::uint64_t seed);

// Type-invariant spot checks (throw on violation).
void validate(const HFunction& h);
void validate(const ScalarFunction& f);

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

struct Catalog {
  std::vector<HFunction> h_functions;
  std::vector<ScalarFunction> f_functions;
  std::vector<CertifiedPair> pairs;

  const HFunction& h(std::string_view name) const;       // ConfigError if unknown
  const ScalarFunction& f(std::string_view name) const;  // ConfigError if unknown
  bool has_h(std::string_view name) const;
  bool has_f(std::string_view name) const;
  bool is_certified(std::string_view f_name, std::string_view h_name,
                    Certification c) const;
  std::vector<CertifiedPair> certified(Certification c) const;
};

/// The named h- and f-functions used throughout the checkers, with their
/// declared flags, plus the certified hypothesis pairs.
const Catalog& builtin_catalog();

}  // namespace hconv

#endif
