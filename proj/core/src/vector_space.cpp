#include "hconv/vector_space.hpp"

#include <cmath>
#include <numeric>

#include "hconv/errors.hpp"

namespace hconv {

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::euclidean: return "euclidean";
    case NormKind::one: return "one";
    case NormKind::infinity_norm: return "infinity";
  }
  return "?";
}

double VectorPoint::norm() const {
  if (coords.empty()) throw DimensionError("VectorPoint must have dim >= 1");
  switch (norm_kind) {
    case NormKind::euclidean: {
      double s = 0.0;
      for (double c : coords) s += c * c;
      return std::sqrt(s);
    }
    case NormKind::one: {
      double s = 0.0;
      for (double c : coords) s += std::abs(c);
      return s;
    }
    case NormKind::infinity_norm: {
      double s = 0.0;
      for (double c : coords) s = std::max(s, std::abs(c));
      return s;
    }
  }
  return 0.0;
}

VectorPoint scale(double a, const VectorPoint& x) {
  VectorPoint out = x;
  for (double& c : out.coords) c *= a;
  return out;
}

VectorPoint combine(double a, const VectorPoint& x, double b,
                    const VectorPoint& y) {
  if (x.dim() != y.dim()) throw DimensionError("dimension mismatch");
  if (x.norm_kind != y.norm_kind) {
    throw DomainError("norm kinds differ in combination");
  }
  VectorPoint out = x;
  for (int i = 0; i < x.dim(); ++i) {
    out.coords[i] = a * x.coords[i] + b * y.coords[i];
  }
  return out;
}

double WeightVector::sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

bool WeightVector::is_probability(double tol) const {
  if (weights.empty()) return false;
  for (double w : weights) {
    if (w < 0.0) return false;
  }
  return std::abs(sum() - 1.0) <= tol;
}

void require_probability(const WeightVector& w) {
  if (!w.is_probability()) {
    throw DomainError("weights must be a probability vector");
  }
}

VectorFn radial(const ScalarFunction& profile) {
  return VectorFn{
      "radial(" + profile.name + ")",
      [profile](const VectorPoint& x) { return profile(x.norm()); }, true};
}

VectorFn norm_power(double p) {
  return VectorFn{"norm^" + std::to_string(p),
                  [p](const VectorPoint& x) { return std::pow(x.norm(), p); },
                  true};
}

VectorFn norm_squared() {
  return VectorFn{"norm^2",
                  [](const VectorPoint& x) {
                    const double n = x.norm();
                    return n * n;
                  },
                  true};
}

VectorFn from_scalar(const ScalarFunction& f) {
  return VectorFn{"scalar(" + f.name + ")",
                  [f](const VectorPoint& x) {
                    if (x.dim() != 1) {
                      throw DimensionError(
                          "scalar view only applies to dimension 1");
                    }
                    return f(x.coords[0]);
                  },
                  f.has(FFlag::even)};
}

}  // namespace hconv
