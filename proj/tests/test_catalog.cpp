#include <doctest.h>

#include <cmath>

#include "hconv/catalog.hpp"
#include "hconv/errors.hpp"

using namespace hconv;

TEST_CASE("super-additivity of the basic weights") {
  const auto& cat = builtin_catalog();

  // (x+y)^2 - x^2 - y^2 = 2xy >= 0, with equality on the axes.
  const auto sq = check_superadditive(cat.h("h:square"), 256, 1.0);
  CHECK(sq.holds);
  CHECK(sq.worst_violation >= -1e-12);
  CHECK(sq.worst_violation <= 1e-12);

  // sqrt is concave: sqrt(x+y) < sqrt(x)+sqrt(y) away from the axes.
  const auto root = check_superadditive(cat.h("h:pow:0.5"), 256, 1.0);
  CHECK_FALSE(root.holds);
  const auto [wx, wy] = root.witness;
  CHECK(std::sqrt(wx + wy) - std::sqrt(wx) - std::sqrt(wy) ==
        doctest::Approx(root.worst_violation).epsilon(1e-12));
  CHECK(root.worst_violation < -1e-6);

  // The identity is additive: equality throughout.
  const auto id = check_superadditive(cat.h("h:id"), 256, 1.0);
  CHECK(id.holds);
  CHECK(id.worst_violation == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("multiplicativity checks") {
  const auto& cat = builtin_catalog();

  // h(x) = x^(p-1) with p = 1/2: multiplicative, zero residual.
  const auto mul = check_supermultiplicative(cat.h("h:cpow:0:0.5"), 256);
  CHECK(mul.holds);
  CHECK(std::abs(mul.worst_violation) <= 1e-12);

  // (1+x)^(p-1), p = 1/2: super-multiplicative on (0,1].
  CHECK(check_supermultiplicative(cat.h("h:cpow:1:0.5"), 256).holds);

  // t^2 is multiplicative.
  const auto sq = check_supermultiplicative(cat.h("h:square"), 256);
  CHECK(sq.holds);
  CHECK(std::abs(sq.worst_violation) <= 1e-12);

  // 1+x is sub-multiplicative but not super-multiplicative on (0,1].
  CHECK(check_submultiplicative(cat.h("h:cpow:1:2"), 256).holds);
  CHECK_FALSE(check_supermultiplicative(cat.h("h:cpow:1:2"), 256).holds);
}

TEST_CASE("every multiplicative catalog h passes both mirrors") {
  for (const auto& h : builtin_catalog().h_functions) {
    if (!h.has(HFlag::multiplicative)) continue;
    CAPTURE(h.name);
    CHECK(check_supermultiplicative(h, 256).holds);
    CHECK(check_submultiplicative(h, 256).holds);
  }
}

TEST_CASE("power weights: multiplicative equality, super-additivity only at s=1") {
  const auto& cat = builtin_catalog();
  for (const char* name : {"h:pow:0.25", "h:pow:0.5", "h:pow:0.75"}) {
    CAPTURE(name);
    const auto& h = cat.h(name);
    const auto sup = check_supermultiplicative(h, 256);
    const auto sub = check_submultiplicative(h, 256);
    CHECK(sup.holds);
    CHECK(sub.holds);
    CHECK(std::abs(sup.worst_violation) <= 1e-12);
    CHECK(std::abs(sub.worst_violation) <= 1e-12);
    CHECK_FALSE(check_superadditive(h, 256, 1.0).holds);
  }
  CHECK(check_superadditive(cat.h("h:id"), 256, 1.0).holds);
}

TEST_CASE("scalar h-convexity sampling") {
  const auto& cat = builtin_catalog();

  CHECK(check_h_convex_scalar(cat.f("f:square"), cat.h("h:id"), 1000, 42)
            .holds);

  // sqrt on [0,1] is concave, so it cannot be h-convex for h = identity;
  // direct evaluation at x=0, y=1, t=1/2 already violates.
  ScalarFunction root;
  root.name = "f:test-root";
  root.domain_lo = 0.0;
  root.domain_hi = 1.0;
  root.eval = [](double t) { return std::sqrt(t); };
  root.flags = {FFlag::nonnegative};
  CHECK(std::sqrt(0.5) > 0.5);
  const auto rep = check_h_convex_scalar(root, cat.h("h:id"), 1000, 42);
  CHECK_FALSE(rep.holds);
  CHECK(rep.worst_violation < 0.0);

  // t^s with h = t^s: the s-convex class.
  CHECK(check_h_convex_scalar(cat.f("f:pow:0.5"), cat.h("h:pow:0.5"), 1000, 7)
            .holds);
}

TEST_CASE("certified scalar pairs hold at 1e4 samples, any seed") {
  const auto& cat = builtin_catalog();
  for (const auto& p : cat.certified(Certification::scalar_h_convex)) {
    CAPTURE(p.f_name);
    CAPTURE(p.h_name);
    for (std::uint64_t seed : {1ULL, 999ULL}) {
      CHECK(check_h_convex_scalar(cat.f(p.f_name), cat.h(p.h_name), 10000,
                                  seed)
                .holds);
    }
  }
}

TEST_CASE("grid refinement never flips fail to hold") {
  const auto& h = builtin_catalog().h("h:pow:0.5");
  // Nested uniform grids (2^k + 1 points) keep every earlier witness.
  bool prev_failed = false;
  for (int n : {17, 33, 65, 257}) {
    const auto rep = check_superadditive(h, n, 1.0);
    if (prev_failed) CHECK_FALSE(rep.holds);
    prev_failed = prev_failed || !rep.holds;
  }
  CHECK(prev_failed);
}

TEST_CASE("catalog contents and flags") {
  const auto& cat = builtin_catalog();
  for (const char* name :
       {"h:id", "h:one", "h:inv", "h:pow:0.25", "h:pow:0.5", "h:pow:0.75",
        "h:cpow:0:0.5", "h:cpow:1:0.5", "h:cpow:1:2", "h:max-half"}) {
    CHECK(cat.has_h(name));
  }
  for (const char* name : {"f:square", "f:abs:0.5", "f:quartic", "f:cube"}) {
    CHECK(cat.has_f(name));
  }
  CHECK(cat.is_certified("f:square", "h:id", Certification::operator_h_convex));
  CHECK(cat.is_certified("f:square", "h:max-half",
                         Certification::operator_h_mid_convex));
  CHECK(cat.is_certified("f:pow:0.5", "h:pow:0.5",
                         Certification::scalar_h_convex));
  const auto& inv = cat.h("h:inv");
  CHECK(inv.has(HFlag::multiplicative));
  CHECK(inv.has(HFlag::strictly_positive));
  CHECK_FALSE(inv.defined_at(0.0));
  CHECK_THROWS_AS(inv(0.0), DomainError);
  CHECK_THROWS_AS(cat.h("h:nope"), ConfigError);
  CHECK_THROWS_AS(cat.f("f:nope"), ConfigError);

  // Certification implies the matching flag on f.
  for (const auto& p : cat.pairs) {
    const auto& f = cat.f(p.f_name);
    switch (p.certification) {
      case Certification::scalar_h_convex:
        CHECK(f.has(FFlag::h_convex_scalar));
        break;
      case Certification::operator_h_convex:
        CHECK(f.has(FFlag::operator_h_convex));
        break;
      case Certification::operator_h_mid_convex:
        CHECK(f.has(FFlag::operator_h_mid_convex));
        break;
    }
  }
}

TEST_CASE("type invariant validation") {
  HFunction bad;
  bad.name = "h:test-negative";
  bad.domain_lo = 0.0;
  bad.domain_hi = 2.0;
  bad.eval = [](double t) { return t - 0.5; };
  CHECK_THROWS_AS(validate(bad), DomainError);

  HFunction zero = bad;
  zero.name = "h:test-zero";
  zero.eval = [](double) { return 0.0; };
  CHECK_THROWS_AS(validate(zero), DomainError);

  ScalarFunction wrong_deriv;
  wrong_deriv.name = "f:test-deriv";
  wrong_deriv.domain_lo = -1.0;
  wrong_deriv.domain_hi = 1.0;
  wrong_deriv.eval = [](double t) { return t * t; };
  wrong_deriv.derivative = [](double t) { return 3.0 * t; };
  CHECK_THROWS_AS(validate(wrong_deriv), DomainError);

  // The shipped catalog validates on construction; spot-check one entry.
  validate(builtin_catalog().f("f:square"));
  validate(builtin_catalog().h("h:inv"));
}

TEST_CASE("predicate domain errors") {
  const auto& h = builtin_catalog().h("h:id");
  CHECK_THROWS_AS(check_superadditive(h, 1, 1.0), DomainError);
  // Sums would exceed the domain of a narrow h.
  HFunction narrow;
  narrow.name = "h:test-narrow";
  narrow.domain_lo = 0.0;
  narrow.domain_hi = 1.5;
  narrow.eval = [](double t) { return t; };
  CHECK_THROWS_AS(check_superadditive(narrow, 16, 1.0), DomainError);
}
