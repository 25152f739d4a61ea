#ifndef HCONV_MAXIMIZE_HPP
#define HCONV_MAXIMIZE_HPP

#include <functional>

namespace hconv {

struct MaxResult {
  double arg = 0.0;
  double value = 0.0;
};

/// Maximizes g over [lo, hi]: dense grid scan (grid_points samples) followed
/// by golden-section refinement on the bracketing cell. The grid guards
/// against non-concave objectives; golden section then resolves arg to tol_x.
MaxResult grid_golden_max(const std::function<double(double)>& g, double lo,
                          double hi, int grid_points = 2049,
                          double tol_x = 1e-8);

}  // namespace hconv

#endif
