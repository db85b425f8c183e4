#include "congsig/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "congsig/errors.hpp"

namespace congsig {

double PathLoad::mean_path_cost(std::span<const double> edge_costs) const {
  double c = 0.0;
  for (const auto& [id, share] : edge_shares) c += share * edge_costs[id];
  return c;
}

double FlowState::total_agents() const {
  double n = 0.0;
  for (const PathLoad& p : path_loads) n += p.agents;
  return n;
}

std::vector<double> edge_weight(const Signal& signal, double omega) {
  std::vector<double> w(signal.size());
  for (std::size_t e = 0; e < signal.size(); ++e) {
    w[e] = std::max(0.0, omega * signal[e].lo + (1.0 - omega) * signal[e].hi);
  }
  return w;
}

FlowState assign(const Network& net, const DemandTable& demand, const Signal& signal, const PopulationProfile& profile,
                 const TypeSet& types, TieTolerance tol) {
  if (signal.size() != net.edge_count()) throw ValidationError("signal width does not match edge count");
  if (profile.size() != types.size()) throw ValidationError("profile length does not match type count");

  FlowState state;
  state.edge_flows.assign(net.edge_count(), 0.0);

  const auto& entries = demand.entries();
  for (std::size_t k = 0; k < types.size(); ++k) {
    const double share = profile.weights[k];
    if (share <= 0.0) continue;
    const double omega = types.omegas[k];
    const auto weights = edge_weight(signal, omega);

    // Entries are ordered by origin, so one distance computation serves a block.
    for (auto it = entries.begin(); it != entries.end();) {
      const int origin = it->first.first;
      const auto dist = shortest_distances(net, weights, origin);
      for (; it != entries.end() && it->first.first == origin; ++it) {
        const int dest = it->first.second;
        const double agents = share * it->second;
        TightDag dag = tight_dag_from_distances(net, weights, dist, origin, dest, tol);

        PathLoad load;
        load.origin = origin;
        load.dest = dest;
        load.omega = omega;
        load.weighted_cost = dag.dist[static_cast<std::size_t>(dest)];
        load.agents = agents;
        load.edge_shares.reserve(dag.tight_edges.size());
        for (std::size_t id : dag.tight_edges) {
          const double s = dag.edge_share(net, id);
          load.edge_shares.emplace_back(id, s);
          state.edge_flows[id] += agents * s;
        }
        state.path_loads.push_back(std::move(load));
      }
    }
  }
  return state;
}

std::size_t choose_action_abstract(const Signal& signal, double omega, Rng& rng, TieTolerance tol) {
  if (signal.empty()) throw ValidationError("no actions to choose from");
  const auto w = edge_weight(signal, omega);
  const double best = *std::min_element(w.begin(), w.end());
  std::vector<std::size_t> ties;
  for (std::size_t m = 0; m < w.size(); ++m) {
    if (w[m] <= best * (1.0 + tol.relative) + tol.absolute) ties.push_back(m);
  }
  if (ties.size() == 1) return ties.front();
  return ties[rng.index(ties.size())];
}

}  // namespace congsig
