#include "congsig/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "congsig/errors.hpp"

namespace congsig {

Minimum minimize_1d(const std::function<double(double)>& f, double lo, double hi, std::size_t grid_points,
                    double x_tol) {
  if (!(hi > lo)) throw ValidationError("minimize_1d needs lo < hi");
  grid_points = std::max<std::size_t>(grid_points, 3);
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);

  std::size_t best = 0;
  double best_value = f(lo);
  for (std::size_t i = 1; i < grid_points; ++i) {
    const double v = f(lo + step * static_cast<double>(i));
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }

  double a = lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
  double b = std::min(hi, lo + step * static_cast<double>(best + 1));
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > x_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (b - a <= x_tol * 1e-3 + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a)) break;
  }

  Minimum m{0.5 * (a + b), 0.0};
  m.value = f(m.x);
  // The grid point itself may still be better (minimum at an endpoint).
  if (best_value < m.value) return {lo + step * static_cast<double>(best), best_value};
  return m;
}

}  // namespace congsig
