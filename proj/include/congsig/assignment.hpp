#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "congsig/network.hpp"
#include "congsig/population.hpp"
#include "congsig/rng.hpp"
#include "congsig/signaling.hpp"

namespace congsig {

/// Agents of one risk type travelling between one origin-destination pair,
/// spread evenly over every minimum-weight path.
struct PathLoad {
  int origin = 0;
  int dest = 0;
  double omega = 0.0;
  double weighted_cost = 0.0;  // path weight under the signal, equal for all chosen paths
  double agents = 0.0;
  /// (edge id, share of the group's agents crossing it), ascending edge ids.
  std::vector<std::pair<std::size_t, double>> edge_shares;

  /// Average travel time over the chosen paths for the given per-edge costs.
  double mean_path_cost(std::span<const double> edge_costs) const;
};

struct FlowState {
  std::vector<double> edge_flows;
  std::vector<PathLoad> path_loads;

  double total_agents() const;
};

/// omega * lo + (1 - omega) * hi per edge.
std::vector<double> edge_weight(const Signal& signal, double omega);

/// Routes every (origin, destination, type) group over its minimum-weight paths,
/// splitting the group equally between tied paths. Throws NoPathError for an
/// unreachable pair with positive demand.
FlowState assign(const Network& net, const DemandTable& demand, const Signal& signal, const PopulationProfile& profile,
                 const TypeSet& types, TieTolerance tol = {});

/// Index of an action minimizing omega * lo + (1 - omega) * hi. Ties are broken
/// uniformly at random; a unique minimizer draws nothing from `rng`.
std::size_t choose_action_abstract(const Signal& signal, double omega, Rng& rng, TieTolerance tol = {});

}  // namespace congsig
