#ifndef HCONV_QUADRATURE_HPP
#define HCONV_QUADRATURE_HPP

#include <functional>

namespace hconv {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

/// Adaptive Simpson quadrature over [a, b] with Richardson correction.
/// abs_error_bound is the accumulated per-interval error estimate; the
/// recursion refuses to go deeper than kQuadMaxDepth and throws
/// ConvergenceError if the tolerance is still unmet there.
inline constexpr int kQuadMaxDepth = 40;
inline constexpr double kQuadDefaultTol = 1e-10;

QuadratureResult integrate(const std::function<double(double)>& g, double a,
                           double b, double tol = kQuadDefaultTol);

/// Convenience form for the unit interval, where all the integral
/// inequalities in this library live.
QuadratureResult integrate01(const std::function<double(double)>& g,
                             double tol = kQuadDefaultTol);

}  // namespace hconv

#endif
