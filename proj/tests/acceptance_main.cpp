// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// exit 0 iff all pass. Tolerances and runtime budgets are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hconv/catalog.hpp"
#include "hconv/matrix.hpp"
#include "hconv/operator_checks.hpp"
#include "hconv/positive_maps.hpp"
#include "hconv/quadrature.hpp"
#include "hconv/scalar_checks.hpp"
#include "hconv/suite.hpp"
#include "hconv/vector_space.hpp"

using namespace hconv;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string name, double budget_seconds)
      : number_(number),
        name_(std::move(name)),
        budget_s_(budget_seconds),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      problems_.push_back(what);
    }
  }

  ~Criterion() {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    bool ok = problems_.empty();
    if (elapsed > budget_s_) {
      problems_.push_back("runtime " + std::to_string(elapsed) +
                          "s exceeds budget " + std::to_string(budget_s_) +
                          "s");
      ok = false;
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                number_, name_.c_str(), elapsed);
    for (const auto& p : problems_) {
      std::printf("       - %s\n", p.c_str());
    }
    if (!ok) ++failures;
  }

 private:
  int number_;
  std::string name_;
  double budget_s_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

const Catalog& cat() { return builtin_catalog(); }

WeightVector normalized_weights(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> uw(0.2, 1.0);
  WeightVector w;
  w.weights.resize(n);
  double sum = 0.0;
  for (double& v : w.weights) sum += (v = uw(rng));
  for (double& v : w.weights) v /= sum;
  return w;
}

void criterion1_secant_constants() {
  Criterion c(1, "secant constants reproduce the worked cases", 1.0);
  const auto ident = secant_coeffs([](double t) { return t; }, 1.0, 2.0);
  c.require(std::abs(ident.mu - 1.0) <= 1e-14 && std::abs(ident.nu) <= 1e-14,
            "phi = t should give (1, 0)");
  const auto constant = secant_coeffs([](double) { return 1.0; }, 1.0, 2.0);
  c.require(std::abs(constant.mu) <= 1e-14 &&
                std::abs(constant.nu - 1.0) <= 1e-14,
            "phi = 1 should give (0, 1)");
  const auto inverse =
      secant_coeffs([](double t) { return 1.0 / t; }, 1.0, 2.0);
  c.require(std::abs(inverse.mu + 0.5) <= 1e-14 &&
                std::abs(inverse.nu - 1.5) <= 1e-14,
            "phi = 1/t on [1,2] should give (-0.5, 1.5)");
}

void criterion2_operator_jensen_suite() {
  Criterion c(2, "operator Jensen suite, 500 instances per form", 60.0);
  const auto& f = cat().f("f:square");
  const auto& h = cat().h("h:id");
  const int dims[] = {2, 3, 4, 6};
  const double m = 0.5, M = 2.0;
  int violations = 0;

  for (int i = 0; i < 500; ++i) {
    std::mt19937_64 rng(0xA0000 + i);
    const int dim = dims[i % 4];

    // Weighted Jensen.
    {
      const int n = 2 + static_cast<int>(rng() % 2);
      std::vector<HermitianMatrix> as;
      for (int j = 0; j < n; ++j) as.push_back(rand_hermitian(dim, m, M, rng()));
      violations +=
          !check_weighted_jensen(f, h, as, normalized_weights(rng, n), 1e-9)
               .holds();
    }
    // Davis-Choi-Jensen through a random unital map.
    {
      const auto a = rand_hermitian(dim, m, M, rng());
      PositiveMapSpec phi =
          (i % 3 == 0)
              ? random_pinching(dim, 1 + static_cast<int>(rng() % dim), rng())
              : (i % 3 == 1)
                    ? PositiveMapSpec::conjugation_unital(
                          random_isometry(dim, dim, rng()))
                    : PositiveMapSpec::normalized_trace(dim);
      violations += !check_dcj(f, h, phi, a, 1e-9).holds();
    }
    // Weighted Jensen composed with one unital map.
    {
      const int n = 2 + static_cast<int>(rng() % 2);
      std::vector<HermitianMatrix> as;
      for (int j = 0; j < n; ++j) as.push_back(rand_hermitian(dim, m, M, rng()));
      const auto phi = random_pinching(
          dim, 1 + static_cast<int>(rng() % dim), rng());
      violations += !check_cor_weighted_dcj(f, h, phi, as,
                                            normalized_weights(rng, n), 1e-9)
                         .holds();
    }
    // Contractive form over a jointly unital family.
    {
      const int n = 1 + static_cast<int>(rng() % 3);
      const int dout = (i % 2 == 0 || dim == 1) ? dim : dim - 1;
      const MapFamily family =
          random_family(n, dim, dout, FamilyMode::jointly_unital, rng());
      std::vector<HermitianMatrix> as;
      for (int j = 0; j < n; ++j) as.push_back(rand_hermitian(dim, m, M, rng()));
      violations += !check_jensen_contraction(f, h, as, family, 1e-9).holds();
    }
  }
  c.require(violations == 0,
            std::to_string(violations) + " violations among 2000 instances");
}

void criterion3_mercer_chain() {
  Criterion c(3, "Mercer operator chain, 200 instances + endpoint tightness",
              60.0);
  const auto& f = cat().f("f:square");
  const auto& h = cat().h("h:id");
  const double m = 0.5, M = 2.0;
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    std::mt19937_64 rng(0xB0000 + i);
    const int dim = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    MapFamily family;
    WeightVector w;
    if (i % 2 == 0) {
      family = random_family(n, dim, dim, FamilyMode::each_unital, rng());
      w = normalized_weights(rng, n);
    } else {
      family = random_family(n, dim, dim, FamilyMode::jointly_unital, rng());
    }
    std::vector<HermitianMatrix> as;
    for (int j = 0; j < n; ++j) as.push_back(rand_hermitian(dim, m, M, rng()));
    const auto rep = check_mercer_operator(f, h, family, as, w, m, M, 1e-9);
    violations += !rep.holds();
  }
  c.require(violations == 0,
            std::to_string(violations) + " chain violations in 200 instances");

  // Endpoint tightness: n=1, Phi=identity, A=diag(m,M), h=t.
  const MapFamily identity{{PositiveMapSpec::conjugation_unital(
                               ComplexMatrix::Identity(2, 2))},
                           FamilyMode::each_unital};
  const auto tight = check_mercer_operator(
      f, h, identity, {HermitianMatrix::diagonal({m, M})},
      WeightVector{{1.0}}, m, M, 1e-9);
  c.require(std::abs(tight.gap1) <= 1e-9,
            "gap1 at the endpoint instance should vanish");
  c.require(std::abs(tight.gap2) <= 1e-9,
            "gap2 at the endpoint instance should vanish");
}

void criterion4_complementary_constants() {
  Criterion c(4, "complementary constants: beta, t0 cases, eq-type bound",
              30.0);
  const auto& f = cat().f("f:square");
  const auto& h = cat().h("h:id");

  const auto cc = beta_compute(f, f, h, 1.0, 0.0, 1.0);
  c.require(std::abs(cc.beta - 0.25) <= 1e-7, "beta should be 1/4");
  c.require(std::abs(cc.t_star - 0.5) <= 1e-7, "t_star should be 1/2");

  double brute = -1e300;
  for (int k = 0; k <= 100000; ++k) {
    const double t = k / 100000.0;
    brute = std::max(brute, t - t * t);
  }
  c.require(std::abs(cc.beta - brute) <= 1e-6,
            "beta should match the 1e5-point grid oracle");

  c.require(std::abs(t0_compute(f, h, 1.0, 1.0, 2.0) - 1.5) <= 1e-8,
            "interior case should give t0 = 1.5");
  c.require(std::abs(t0_compute(f, h, 10.0, 1.0, 2.0) - 1.0) <= 1e-8,
            "steep case should clamp t0 = m = 1");
  c.require(std::abs(t0_compute(f, h, 0.5, 1.0, 2.0) - 2.0) <= 1e-8,
            "shallow case should clamp t0 = M = 2");

  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    std::mt19937_64 rng(0xC0000 + i);
    const int dim = 2 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 2);
    MapFamily family;
    std::vector<PositiveMapSpec> maps;
    for (int j = 0; j < n; ++j) {
      maps.push_back(random_pinching(dim, 1 + static_cast<int>(rng() % dim),
                                     rng()));
    }
    family = MapFamily{std::move(maps), FamilyMode::each_unital};
    std::vector<HermitianMatrix> as;
    for (int j = 0; j < n; ++j) {
      as.push_back(rand_hermitian(dim, 0.5, 2.0, rng()));
    }
    const auto rep = check_complementary(f, f, h, 1.0, family, as,
                                         normalized_weights(rng, n), 0.5, 2.0,
                                         1e-9);
    violations += !rep.holds();
  }
  c.require(violations == 0,
            std::to_string(violations) +
                " complementary violations in 200 instances");
}

void criterion5_scalar_suite() {
  Criterion c(5, "scalar inequality suite, 1e3 instances per check", 30.0);
  std::vector<CertifiedPair> pairs =
      cat().certified(Certification::scalar_h_convex);
  int viol_chain = 0, viol_integral = 0, viol_hh = 0, viol_lemma = 0,
      viol_mercer = 0;

  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(0xD0000 + i);
    const auto& p = pairs[i % pairs.size()];
    const auto& f = cat().f(p.f_name);
    const auto& h = cat().h(p.h_name);
    const VectorFn vf = radial(f);
    const int dim = 1 + static_cast<int>(rng() % 8);
    const double cap = 0.1 * f.domain_hi;
    std::uniform_real_distribution<double> uc(-cap, cap);
    const NormKind kind = static_cast<NormKind>(i % 3);
    VectorPoint x, y;
    x.norm_kind = y.norm_kind = kind;
    x.coords.resize(dim);
    y.coords.resize(dim);
    for (double& v : x.coords) v = uc(rng);
    for (double& v : y.coords) v = uc(rng);

    std::uniform_real_distribution<double> ut(0.01, 0.99);
    viol_chain += !check_even_chain(vf, h, x, y, ut(rng)).holds();

    if (h.defined_at(0.0) && h.defined_at(1.0)) {
      viol_integral += !check_even_integral(vf, h, x, y, 1e-10).holds();
    }

    static const double ps[] = {0.25, 0.5, 0.75};
    viol_hh += !check_hh_norm(x, y, ps[i % 3], 1e-10).holds();

    std::uniform_real_distribution<double> ux(0.05 * f.domain_hi,
                                              0.9 * f.domain_hi);
    double a = ux(rng), b = ux(rng);
    if (a > b) std::swap(a, b);
    if (a == b) continue;
    std::uniform_real_distribution<double> uz(a, b);
    viol_lemma += !check_mercer_lemma(f, h, a, b, uz(rng)).holds();

    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<double> xs(n);
    for (double& v : xs) v = ux(rng);
    std::sort(xs.begin(), xs.end());
    if (xs.front() == xs.back()) continue;
    viol_mercer += !check_mercer_h(f, h, xs, normalized_weights(rng, n)).holds();
  }
  c.require(viol_chain == 0, "even-chain violations: " +
                                 std::to_string(viol_chain));
  c.require(viol_integral == 0,
            "even-integral violations: " + std::to_string(viol_integral));
  c.require(viol_hh == 0,
            "Hermite-Hadamard violations: " + std::to_string(viol_hh));
  c.require(viol_lemma == 0,
            "Mercer-lemma violations: " + std::to_string(viol_lemma));
  c.require(viol_mercer == 0,
            "generalized-Mercer violations: " + std::to_string(viol_mercer));
}

void criterion6_falsifiability() {
  Criterion c(6, "falsifiability of the weighted Jensen checker", 30.0);
  const auto cube = search_counterexample("operator.weighted_jensen", "f:cube",
                                          "h:id", 1000, 61, 2);
  c.require(cube.has_value(),
            "t^3 on [-2,2] should violate within 1e3 trials at dim 2");
  if (cube) {
    c.require(cube->gap < 0.0, "stored witness should carry a negative gap");
  }
  const auto square = search_counterexample("operator.weighted_jensen",
                                            "f:square", "h:id", 1000, 61, 2);
  c.require(!square.has_value(),
            "t^2 with h = t should survive the same budget");
}

void criterion7_structural_predicates() {
  Criterion c(7, "structural predicates on the default grid", 5.0);
  const auto mul = check_supermultiplicative(cat().h("h:cpow:0:0.5"), 256);
  c.require(mul.holds && std::abs(mul.worst_violation) <= 1e-12,
            "x^(p-1) with c=0 should be multiplicative with zero residual");
  const auto mul2 = check_submultiplicative(cat().h("h:cpow:0:0.5"), 256);
  c.require(mul2.holds && std::abs(mul2.worst_violation) <= 1e-12,
            "x^(p-1) with c=0: sub-multiplicative mirror");

  c.require(check_supermultiplicative(cat().h("h:cpow:1:0.5"), 256).holds,
            "(1+x)^(p-1), p=1/2 should be super-multiplicative");

  c.require(check_superadditive(cat().h("h:square"), 256, 1.0).holds,
            "t^2 should be super-additive");

  const auto root = check_superadditive(cat().h("h:pow:0.5"), 256, 1.0);
  c.require(!root.holds, "sqrt should fail super-additivity");
  c.require(root.worst_violation < -1e-12,
            "sqrt failure should come with a genuine witness");
}

void criterion8_numerics() {
  Criterion c(8, "eigensolver round trip and quadrature exactness", 30.0);
  // 1e3 random Hermitian matrices up to dim 32: reconstruction <= 1e-9 rel.
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(0xE0000 + i);
    const int dim = 2 + static_cast<int>(rng() % 31);
    const auto a = rand_hermitian(dim, -3.0, 3.0, rng(), 64);
    const auto d = eig_h(a);
    const double err = (d.eigenvectors * d.eigenvalues.asDiagonal() *
                            d.eigenvectors.adjoint() -
                        a.raw())
                           .cwiseAbs()
                           .maxCoeff();
    worst = std::max(worst, err / std::max(1.0, spectral_norm(a)));
  }
  c.require(worst <= 1e-9, "worst relative reconstruction error " +
                               std::to_string(worst));

  // Quadrature exact to 1e-12 on polynomials of degree <= 6.
  double worst_quad = 0.0;
  for (int k = 0; k <= 6; ++k) {
    const auto q =
        integrate01([k](double t) { return std::pow(t, k); }, 1e-12);
    worst_quad = std::max(worst_quad, std::abs(q.value - 1.0 / (k + 1)));
  }
  const auto mixed = integrate01(
      [](double t) {
        return 2.0 - t + 3 * t * t - std::pow(t, 5) + 0.25 * std::pow(t, 6);
      },
      1e-12);
  worst_quad = std::max(
      worst_quad, std::abs(mixed.value - (2 - 0.5 + 1 - 1.0 / 6 + 0.25 / 7)));
  c.require(worst_quad <= 1e-12,
            "worst polynomial quadrature error " + std::to_string(worst_quad));
}

}  // namespace

int main() {
  criterion1_secant_constants();
  criterion2_operator_jensen_suite();
  criterion3_mercer_chain();
  criterion4_complementary_constants();
  criterion5_scalar_suite();
  criterion6_falsifiability();
  criterion7_structural_predicates();
  criterion8_numerics();
  if (failures == 0) {
    std::printf("all 8 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
