#include "hconv/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "hconv/errors.hpp"

namespace hconv {
namespace {

double eval_finite(const std::function<double(double)>& g, double t) {
  const double v = g(t);
  if (!std::isfinite(v)) {
    throw DomainError("integrand not finite at t=" + std::to_string(t));
  }
  return v;
}

// One interval with its Simpson value, the two-panel refinement, and the
// |S2-S1|/15 error estimate. Subdivision is driven globally by a priority
// queue, so the error budget concentrates where the integrand is hard
// (endpoint cusps) instead of being halved away level by level.
struct Cell {
  double a, b;
  double fa, fm, fb;    // endpoint and midpoint values
  double flm, frm;      // quarter-point values
  double value;         // Richardson-corrected two-panel estimate
  double est;           // error estimate |S2-S1|/15
  int depth;

  static Cell make(const std::function<double(double)>& g, double a, double b,
                   double fa, double fm, double fb, int depth) {
    Cell c{a, b, fa, fm, fb, 0, 0, 0, 0, depth};
    const double m = 0.5 * (a + b);
    c.flm = eval_finite(g, 0.5 * (a + m));
    c.frm = eval_finite(g, 0.5 * (m + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * c.flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * c.frm + fb);
    const double delta = left + right - whole;
    c.value = left + right + delta / 15.0;
    c.est = std::abs(delta) / 15.0;
    return c;
  }
};

struct WorstFirst {
  bool operator()(const Cell& x, const Cell& y) const {
    if (x.est != y.est) return x.est < y.est;
    return x.a > y.a;  // deterministic tie break
  }
};

constexpr std::size_t kMaxCells = 200000;

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& g, double a,
                           double b, double tol) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (a == b) return {0.0, 0.0};

  const double fa = eval_finite(g, a);
  const double fb = eval_finite(g, b);
  const double fm = eval_finite(g, 0.5 * (a + b));

  std::priority_queue<Cell, std::vector<Cell>, WorstFirst> queue;
  queue.push(Cell::make(g, a, b, fa, fm, fb, 0));
  double total_est = queue.top().est;

  while (total_est > tol) {
    const Cell worst = queue.top();
    if (worst.depth >= kQuadMaxDepth) {
      throw ConvergenceError("adaptive quadrature exceeded depth " +
                             std::to_string(kQuadMaxDepth));
    }
    if (queue.size() >= kMaxCells) {
      throw ConvergenceError("adaptive quadrature exceeded the cell budget");
    }
    queue.pop();
    const double m = 0.5 * (worst.a + worst.b);
    const Cell left =
        Cell::make(g, worst.a, m, worst.fa, worst.flm, worst.fm,
                   worst.depth + 1);
    const Cell right =
        Cell::make(g, m, worst.b, worst.fm, worst.frm, worst.fb,
                   worst.depth + 1);
    total_est += left.est + right.est - worst.est;
    queue.push(left);
    queue.push(right);
  }

  QuadratureResult out{0.0, 0.0};
  while (!queue.empty()) {
    out.value += queue.top().value;
    out.abs_error_bound += queue.top().est;
    queue.pop();
  }
  return out;
}

QuadratureResult integrate01(const std::function<double(double)>& g,
                             double tol) {
  return integrate(g, 0.0, 1.0, tol);
}

}  // namespace hconv
