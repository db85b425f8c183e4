#pragma once

#include <cstddef>
#include <functional>

namespace congsig {

struct Minimum {
  double x = 0.0;
  double value = 0.0;
};

/// Minimizes a univariate function on [lo, hi]: a uniform grid locates the best
/// bracket, golden-section search refines it to `x_tol`.
Minimum minimize_1d(const std::function<double(double)>& f, double lo, double hi, std::size_t grid_points = 2001,
                    double x_tol = 1e-12);

}  // namespace congsig
