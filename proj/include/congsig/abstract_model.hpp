#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "congsig/costs.hpp"
#include "congsig/population.hpp"
#include "congsig/rng.hpp"
#include "congsig/signaling.hpp"

namespace congsig {

/// N agents choosing among M resources from a broadcast signal; one draw of the
/// population profile per period.
struct AbstractConfig {
  double agents = 1.0;                 // N
  std::vector<AbstractCostFn> costs;   // one per action; M = costs.size()
  Scheme scheme = Scheme::full_extreme();
  TypeSet types;
  RenewalProcess renewal;
  Signal initial_signal;               // s_1
  std::uint64_t seed = 1;

  std::size_t actions() const noexcept { return costs.size(); }
  void validate() const;
};

struct AbstractState {
  std::size_t t = 1;  // period about to be played
  Signal signal;      // s_t
  CostHistory history;

  explicit AbstractState(const AbstractConfig& config);
};

struct AbstractStep {
  std::size_t t = 0;
  PopulationProfile profile;
  Signal signal;               // s_t, what the agents saw
  std::vector<double> counts;  // n_t per action
  std::vector<double> costs;   // c_m(n_t^m)
  double social_cost = 0.0;
  Signal next_signal;          // s_{t+1}
};

/// Plays one period and advances `state`. Each risk type is one decider: its
/// whole mass goes to one minimizing action, ties drawn from `tie_rng`.
/// FullExtreme updates s by running min/max against the new costs (s_1
/// included); other schemes re-derive s from the cost history.
AbstractStep step_abstract(AbstractState& state, const AbstractConfig& config, Rng& population_rng, Rng& tie_rng);

/// Runs `horizon` periods on the random streams of trajectory `index`.
std::vector<AbstractStep> run_abstract(const AbstractConfig& config, std::size_t horizon, std::uint64_t index = 0);

/// One row per period: t, n_1..n_M, ulo_1..ulo_M, uhi_1..uhi_M, social_cost.
void write_abstract_csv(std::ostream& out, const std::vector<AbstractStep>& steps, std::size_t actions);

/// L1 distance between two signals of the same width.
double signal_distance(const Signal& a, const Signal& b);

struct ConvergenceResult {
  /// ||s_t(x) - s_t(y)||_1 for t = 1..horizon+1; entry 0 is the initial distance.
  std::vector<double> coupled_distance;
  /// KS statistic of n_m/N at t = horizon between the two initial conditions, per action.
  std::vector<double> ks_per_action;
  double ks_distance = 0.0;  // for action 1
};

/// Coupled run: both initial signals share every random draw. Distributional
/// check: `trajectories` independent runs per initial signal, disjoint streams.
ConvergenceResult convergence_check(const AbstractConfig& config, std::size_t trajectories, std::size_t horizon,
                                    const Signal& initial_a, const Signal& initial_b);

/// Lipschitz test bed: c_m(x) = x/N + 0.1 m, risk types {0, 1/2, 1} and two
/// population profiles drawn with equal probability, FullExtreme signaling.
AbstractConfig lipschitz_config(double agents, std::size_t actions, std::uint64_t seed);

struct FlappingSpec {
  double J = 1.0;
  int N = 3;

  void validate() const;
};

/// The flapping cost shared by both actions.
AbstractCostFn flapping_cost(const FlappingSpec& flap);

struct FlappingDemo {
  std::vector<AbstractStep> scalar_run;    // NOW signaling, one risk type
  std::vector<AbstractStep> interval_run;  // EXTREME(2) signaling, split initial signal
  double scalar_cost = 0.0;                // per-period cost of the scalar run after t = 1
  double interval_cost = 0.0;              // cost of the interval run at t = 1
  double closed_form_interval_cost = 0.0;  // floor(N/2)/N + ceil(N/2)/N (J+1)^(1/N)
  double gap = 0.0;                        // scalar_cost - interval_cost
  double gap_lower_bound = 0.0;            // J - N ((J+1)^(1/N) - 1)
  bool scalar_all_or_nothing = false;      // scalar counts in {(0,N), (N,0)} for every t >= 2
  bool interval_balanced = false;          // interval counts at t = 1 in {(floor, ceil), (ceil, floor)}
};

FlappingDemo flapping_demo(const FlappingSpec& flap, std::size_t horizon, std::uint64_t seed = 1);

}  // namespace congsig
