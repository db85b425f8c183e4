#include "congsig/costs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "congsig/errors.hpp"

namespace congsig {

namespace {

// 0^0 is taken as 1 so that zero-power edges have constant cost.
double ratio_power(double ratio, double power) {
  if (power == 0.0) return 1.0;
  return std::pow(ratio, power);
}

}  // namespace

double bpr_time(const Edge& edge, double flow) {
  return edge.free_flow * (1.0 + edge.b_coeff * ratio_power(flow / edge.capacity, edge.power));
}

double bpr_time_capped(const Edge& edge, double flow) {
  return edge.free_flow * (1.0 + edge.b_coeff * ratio_power(std::min(flow / edge.capacity, 1.0), edge.power));
}

double excess(const Edge& edge, double flow) { return std::max(flow - edge.capacity, 0.0); }

AbstractCostFn::AbstractCostFn(Kind kind) : kind_(std::move(kind)) {
  if (const auto* f = std::get_if<Flapping>(&kind_)) {
    if (!(f->J > 0.0)) throw ValidationError("flapping cost needs J > 0");
    if (f->N < 3 || f->N % 2 == 0) throw ValidationError("flapping cost needs an odd N >= 3");
  } else if (const auto* l = std::get_if<LinearOverN>(&kind_)) {
    if (!(l->N > 0.0)) throw ValidationError("linear cost needs N > 0");
  }
}

double AbstractCostFn::operator()(double n) const {
  struct Visitor {
    double n;
    double operator()(const Polynomial& p) const {
      double acc = 0.0;
      for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * n + *it;
      return acc;
    }
    double operator()(const Flapping& f) const {
      const double N = f.N;
      if (n < (N + 1.0) / 2.0) return 1.0;
      return std::pow(f.J + 1.0, (2.0 * n - N) / N);
    }
    double operator()(const LinearOverN& l) const { return n / l.N + l.offset; }
  };
  return std::visit(Visitor{n}, kind_);
}

double social_cost_abstract(std::span<const double> counts, std::span<const AbstractCostFn> costs,
                            double total_agents) {
  if (!(total_agents > 0.0)) throw ValidationError("total agent count must be positive");
  if (counts.size() != costs.size()) throw ValidationError("one cost function per action is required");
  const double sum = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (std::abs(sum - total_agents) > 1e-9 * total_agents) {
    throw ValidationError("action counts do not sum to the number of agents");
  }
  double c = 0.0;
  for (std::size_t m = 0; m < counts.size(); ++m) c += counts[m] / total_agents * costs[m](counts[m]);
  return c;
}

double social_cost_network(std::span<const double> /*flows*/, std::span<const PathCost> paths) {
  double c = 0.0;
  for (const PathCost& p : paths) {
    if (!(p.agents >= 0.0)) throw ValidationError("negative path load");
    c += p.cost * p.agents;
  }
  return c;
}

double time_averaged_cost(std::span<const double> series) {
  if (series.empty()) throw ValidationError("time average of an empty series");
  return std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(series.size());
}

}  // namespace congsig
