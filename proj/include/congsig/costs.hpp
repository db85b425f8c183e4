#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "congsig/network.hpp"

namespace congsig {

struct CostParams {
  bool capped = true;
};

/// BPR travel time F(1 + B (x/cap)^p). A zero power yields F(1 + B) for every flow.
double bpr_time(const Edge& edge, double flow);

/// BPR travel time with the flow/capacity ratio clamped at 1.
double bpr_time_capped(const Edge& edge, double flow);

inline double travel_time(const Edge& edge, double flow, CostParams params) {
  return params.capped ? bpr_time_capped(edge, flow) : bpr_time(edge, flow);
}

/// Capacity violation max(flow - capacity, 0).
double excess(const Edge& edge, double flow);

/// Cost of a resource as a function of the number of agents using it.
class AbstractCostFn {
 public:
  /// sum_k coeffs[k] * n^k
  struct Polynomial {
    std::vector<double> coeffs;
  };
  /// 1 below (N+1)/2 agents, (J+1)^((2n-N)/N) from there on.
  struct Flapping {
    double J = 1.0;
    int N = 3;
  };
  /// n/N + offset
  struct LinearOverN {
    double N = 1.0;
    double offset = 0.0;
  };
  using Kind = std::variant<Polynomial, Flapping, LinearOverN>;

  explicit AbstractCostFn(Kind kind);

  static AbstractCostFn polynomial(std::vector<double> coeffs) { return AbstractCostFn(Polynomial{std::move(coeffs)}); }
  static AbstractCostFn flapping(double J, int N) { return AbstractCostFn(Flapping{J, N}); }
  static AbstractCostFn linear_over_n(double N, double offset = 0.0) { return AbstractCostFn(LinearOverN{N, offset}); }

  double operator()(double n) const;
  const Kind& kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// sum_m (n_m / N) c_m(n_m). Counts must sum to N within 1e-9 relative.
double social_cost_abstract(std::span<const double> counts, std::span<const AbstractCostFn> costs, double total_agents);

struct PathCost {
  double cost = 0.0;    // travel time along the path
  double agents = 0.0;  // agents routed on it
};

/// Total travel time: sum over paths of cost x agents. Edge flows are not needed for the
/// sum itself; they are accepted for symmetry with the per-edge breakdown.
double social_cost_network(std::span<const double> flows, std::span<const PathCost> paths);

/// Arithmetic mean of a nonempty series.
double time_averaged_cost(std::span<const double> series);

}  // namespace congsig
