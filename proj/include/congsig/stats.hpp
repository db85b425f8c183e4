#pragma once

#include <span>

namespace congsig {

/// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|. Samples need not be
/// sorted and may contain ties. Both must be nonempty.
double ks_statistic(std::span<const double> a, std::span<const double> b);

}  // namespace congsig
