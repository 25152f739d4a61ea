#ifndef HCONV_SCALAR_CHECKS_HPP
#define HCONV_SCALAR_CHECKS_HPP

#include <cstdint>
#include <vector>

#include "hconv/catalog.hpp"
#include "hconv/report.hpp"
#include "hconv/vector_space.hpp"

namespace hconv {

/// Relative tolerance applied to scalar inequality residuals.
inline constexpr double kScalarTolRel = 1e-10;

/// First characterization: the segment restriction f_{x,y}(t) = f(tx+(1-t)y)
/// is h-convex on [0,1]. Samples random (alpha, t1, t2) and reports the
/// worst residual of
///   h(alpha) f_{x,y}(t1) + h(1-alpha) f_{x,y}(t2) - f_{x,y}(alpha t1 + (1-alpha) t2).
IneqReport check_char1(const VectorFn& f, const HFunction& h,
                       const VectorPoint& x, const VectorPoint& y, int trials,
                       std::uint64_t seed);

/// Third characterization, for strictly positive multiplicative h:
///   f((1+s)x - sy) >= h(1+s) f(x) - h(s) f(y)  for s in (0, s_max].
/// Throws DomainError when the extrapolated point leaves f's domain.
IneqReport check_char3(const VectorFn& f, const HFunction& h,
                       const VectorPoint& x, const VectorPoint& y,
                       double s_max, int trials, std::uint64_t seed);

/// Even-function two-sided chain at a fixed t in (0,1):
///   [f((1-2t)x) + f((2t-1)y)] / [h(t)+h(1-t)]
///     <= f((1-t)x+ty) + f(tx+(1-t)y)
///     <= [h(t)+h(1-t)] [f(x)+f(y)].
/// Degenerate when h(t)+h(1-t) vanishes.
IneqReport check_even_chain(const VectorFn& f, const HFunction& h,
                            const VectorPoint& x, const VectorPoint& y,
                            double t);

/// Integral forms for even h-convex f:
///   (1/2) int_0^1 [f(tx)+f(ty)] dt
///     <= int_0^1 [h(t)+h(1-t)] f(tx+(1-t)y) dt,
/// and, when h is super-additive,
///   [1 / (2 h(1) int_0^1 h)] int_0^1 [f(tx)+f(ty)] dt <= f(x)+f(y).
/// Quadrature error bounds are subtracted from the reported gaps, so a
/// pass is never claimed inside numerical noise.
IneqReport check_even_integral(const VectorFn& f, const HFunction& h,
                               const VectorPoint& x, const VectorPoint& y,
                               double tol);

/// Hermite-Hadamard bounds for |.|^p, 0 < p < 1:
///   (|x|^p + |y|^p) / (4(p+1)) <= int_0^1 |(1-t)x + ty|^p dt <= |x|^p + |y|^p.
IneqReport check_hh_norm(const VectorPoint& x, const VectorPoint& y, double p,
                         double tol);

/// Solves z = lambda x + (1-lambda) y for lambda in [0,1], clamping roundoff
/// within 1e-12. Throws DomainError when x == y or z lies outside [x,y].
double lambda_of(double z, double x, double y);

/// Mercer lemma form: with lambda = lambda_of(z, x, y),
///   f(x+y-z) <= [h(lambda)+h(1-lambda)] [f(x)+f(y)] - f(z);
/// when h is super-additive, also f(x+y-z) <= h(1)[f(x)+f(y)] - f(z).
/// If h is undefined at a hit endpoint lambda in {0,1}, z is nudged 1e-9
/// into the open interval and the perturbation recorded.
IneqReport check_mercer_lemma(const ScalarFunction& f, const HFunction& h,
                              double x, double y, double z);

/// Generalized Jensen-Mercer bound over sorted 0 < x_1 <= ... <= x_n with
/// probability weights, plus the super-additive / multiplicative / classical
/// specializations where h's flags enable them. Degenerate when x_1 == x_n.
IneqReport check_mercer_h(const ScalarFunction& f, const HFunction& h,
                          const std::vector<double>& xs,
                          const WeightVector& w);

}  // namespace hconv

#endif
