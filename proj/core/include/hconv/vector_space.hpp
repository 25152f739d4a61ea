#ifndef HCONV_VECTOR_SPACE_HPP
#define HCONV_VECTOR_SPACE_HPP

#include <functional>
#include <string>
#include <vector>

#include "hconv/catalog.hpp"

namespace hconv {

enum class NormKind { euclidean, one, infinity_norm };

std::string to_string(NormKind k);

/// A point in a finite-dimensional real normed space, carrying its norm.
struct VectorPoint {
  std::vector<double> coords;
  NormKind norm_kind = NormKind::euclidean;

  int dim() const { return static_cast<int>(coords.size()); }
  double norm() const;
};

VectorPoint scale(double a, const VectorPoint& x);
/// a*x + b*y (same dimension and norm kind required).
VectorPoint combine(double a, const VectorPoint& x, double b,
                    const VectorPoint& y);

/// Non-negative weights; probability vectors additionally sum to 1.
struct WeightVector {
  std::vector<double> weights;

  int size() const { return static_cast<int>(weights.size()); }
  double sum() const;
  bool is_probability(double tol = 1e-12) const;
};

/// Throws DomainError unless w is a probability vector.
void require_probability(const WeightVector& w);

/// A real-valued function on a normed space, for the segment/chain checks.
/// Radial functions phi(|x|) inherit evenness from the norm; dimension-one
/// wrappers evaluate a scalar catalog function on the single coordinate.
struct VectorFn {
  std::string name;
  std::function<double(const VectorPoint&)> eval;
  bool even = false;

  double operator()(const VectorPoint& x) const { return eval(x); }
};

/// phi(|x|) in x's own norm. Valid h-convexity transfers from the scalar
/// pair when phi is nondecreasing on [0, inf).
VectorFn radial(const ScalarFunction& profile);
/// |x|^p in x's own norm.
VectorFn norm_power(double p);
VectorFn norm_squared();
/// Dimension-1 view of a scalar function (throws on higher dimensions).
VectorFn from_scalar(const ScalarFunction& f);

}  // namespace hconv

#endif
