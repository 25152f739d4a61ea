#include "hconv/maximize.hpp"

#include <algorithm>
#include <cmath>

#include "hconv/errors.hpp"

namespace hconv {

MaxResult grid_golden_max(const std::function<double(double)>& g, double lo,
                          double hi, int grid_points, double tol_x) {
  if (!(lo < hi)) throw DomainError("grid_golden_max requires lo < hi");
  if (grid_points < 3) throw DomainError("need at least 3 grid points");

  const double step = (hi - lo) / (grid_points - 1);
  const auto grid_at = [&](int i) {
    return i == grid_points - 1 ? hi : lo + step * i;
  };
  int best = 0;
  double best_val = g(lo);
  for (int i = 1; i < grid_points; ++i) {
    const double v = g(grid_at(i));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  // Golden-section on the cell bracketing the best grid point.
  double a = grid_at(std::max(0, best - 1));
  double b = grid_at(std::min(grid_points - 1, best + 1));
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = g(c);
  double fd = g(d);
  while (b - a > tol_x) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = g(d);
    }
  }
  const double mid = 0.5 * (a + b);
  MaxResult res{mid, g(mid)};
  // The refined point can only improve on the grid scan; keep the better.
  if (best_val > res.value) {
    res = {grid_at(best), best_val};
  }
  return res;
}

}  // namespace hconv
