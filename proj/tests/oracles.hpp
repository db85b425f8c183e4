#pragma once

// Brute-force references used to cross-check the library.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "congsig/network.hpp"

namespace oracle {

struct PathEnumeration {
  double best = std::numeric_limits<double>::infinity();
  std::size_t count = 0;
  std::vector<std::size_t> edge_uses;  // per edge, number of minimum paths through it
};

/// Every simple origin->dest path by depth-first search; keeps those of minimum weight.
/// Intended for strictly positive integer weights, where ties are exact.
inline PathEnumeration enumerate_min_paths(const congsig::Network& net, const std::vector<double>& w, int origin,
                                           int dest) {
  PathEnumeration out;
  out.edge_uses.assign(net.edge_count(), 0);
  std::vector<std::vector<std::size_t>> minimal;
  std::vector<bool> seen(static_cast<std::size_t>(net.node_count()) + 1, false);
  std::vector<std::size_t> stack;
  std::function<void(int, double)> dfs = [&](int u, double d) {
    if (u == dest) {
      if (d < out.best) {
        out.best = d;
        minimal.clear();
      }
      if (d == out.best) minimal.push_back(stack);
      return;
    }
    seen[static_cast<std::size_t>(u)] = true;
    for (std::size_t id : net.out_edges(u)) {
      const int v = net.edge(id).to;
      if (seen[static_cast<std::size_t>(v)]) continue;
      stack.push_back(id);
      dfs(v, d + w[id]);
      stack.pop_back();
    }
    seen[static_cast<std::size_t>(u)] = false;
  };
  dfs(origin, 0.0);
  out.count = minimal.size();
  for (const auto& p : minimal) {
    for (std::size_t id : p) ++out.edge_uses[id];
  }
  return out;
}

/// Empirical CDF of `xs` at t.
inline double ecdf(const std::vector<double>& xs, double t) {
  std::size_t c = 0;
  for (double x : xs) c += x <= t ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(xs.size());
}

/// sup |F_a - F_b| evaluated at every sample point.
inline double ks_bruteforce(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (const auto* xs : {&a, &b}) {
    for (double t : *xs) d = std::max(d, std::abs(ecdf(a, t) - ecdf(b, t)));
  }
  return d;
}

/// Argmin of f over a uniform grid of n+1 points.
inline double grid_argmin(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
  double best_x = lo;
  double best = f(lo);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    const double v = f(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

}  // namespace oracle
