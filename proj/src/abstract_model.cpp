#include "congsig/abstract_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "congsig/assignment.hpp"
#include "congsig/csv.hpp"
#include "congsig/errors.hpp"
#include "congsig/stats.hpp"

namespace congsig {

void AbstractConfig::validate() const {
  if (!(agents >= 1.0)) throw ValidationError("the abstract model needs at least one agent");
  if (costs.empty()) throw ValidationError("the abstract model needs at least one action");
  scheme.validate();
  types.validate();
  congsig::validate(renewal);
  if (type_count(renewal) != types.size()) throw ValidationError("renewal profiles do not match the type set");
  if (initial_signal.size() != costs.size()) throw ValidationError("initial signal needs one interval per action");
  for (const Interval& s : initial_signal) {
    if (!(s.lo <= s.hi)) throw ValidationError("initial signal intervals need lo <= hi");
  }
}

AbstractState::AbstractState(const AbstractConfig& config)
    : signal(config.initial_signal), history(config.actions(), config.scheme.window()) {}

AbstractStep step_abstract(AbstractState& state, const AbstractConfig& config, Rng& population_rng, Rng& tie_rng) {
  const std::size_t M = config.actions();
  AbstractStep step;
  step.t = state.t;
  step.profile = sample_profile(config.renewal, population_rng);
  step.signal = state.signal;
  step.counts.assign(M, 0.0);
  for (std::size_t k = 0; k < config.types.size(); ++k) {
    const double mass = config.agents * step.profile.weights[k];
    if (mass <= 0.0) continue;
    step.counts[choose_action_abstract(state.signal, config.types.omegas[k], tie_rng)] += mass;
  }
  step.costs.resize(M);
  for (std::size_t m = 0; m < M; ++m) step.costs[m] = config.costs[m](step.counts[m]);
  step.social_cost = social_cost_abstract(step.counts, config.costs, config.agents);

  state.history.record_period(step.costs);
  if (config.scheme.kind == Scheme::Kind::FullExtreme) {
    for (std::size_t m = 0; m < M; ++m) {
      state.signal[m].lo = std::min(state.signal[m].lo, step.costs[m]);
      state.signal[m].hi = std::max(state.signal[m].hi, step.costs[m]);
    }
  } else {
    state.signal = window_signal(state.history, config.scheme);
  }
  step.next_signal = state.signal;
  ++state.t;
  return step;
}

std::vector<AbstractStep> run_abstract(const AbstractConfig& config, std::size_t horizon, std::uint64_t index) {
  config.validate();
  AbstractState state(config);
  Rng population_rng = Rng::substream(config.seed, "population", index);
  Rng tie_rng = Rng::substream(config.seed, "tie-break", index);
  std::vector<AbstractStep> steps;
  steps.reserve(horizon);
  for (std::size_t t = 0; t < horizon; ++t) steps.push_back(step_abstract(state, config, population_rng, tie_rng));
  return steps;
}

void write_abstract_csv(std::ostream& out, const std::vector<AbstractStep>& steps, std::size_t actions) {
  std::vector<std::string> names = {"t"};
  for (const char* prefix : {"n_", "ulo_", "uhi_"}) {
    for (std::size_t m = 1; m <= actions; ++m) names.push_back(prefix + std::to_string(m));
  }
  names.push_back("social_cost");
  CsvWriter csv(out);
  csv.header(names);
  for (const AbstractStep& s : steps) {
    csv.field(s.t);
    for (double n : s.counts) csv.field(n);
    for (const Interval& u : s.signal) csv.field(u.lo);
    for (const Interval& u : s.signal) csv.field(u.hi);
    csv.field(s.social_cost);
    csv.end_row();
  }
}

double signal_distance(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) throw ValidationError("signals differ in width");
  double d = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) d += std::abs(a[m].lo - b[m].lo) + std::abs(a[m].hi - b[m].hi);
  return d;
}

ConvergenceResult convergence_check(const AbstractConfig& config, std::size_t trajectories, std::size_t horizon,
                                    const Signal& initial_a, const Signal& initial_b) {
  if (trajectories < 1 || horizon < 1) throw ValidationError("convergence check needs trajectories and horizon >= 1");
  AbstractConfig a = config;
  a.initial_signal = initial_a;
  AbstractConfig b = config;
  b.initial_signal = initial_b;
  a.validate();
  b.validate();

  ConvergenceResult result;
  {
    AbstractState sa(a);
    AbstractState sb(b);
    // Same streams for both: only the starting point differs.
    Rng pop_a = Rng::substream(config.seed, "population", 0);
    Rng tie_a = Rng::substream(config.seed, "tie-break", 0);
    Rng pop_b = pop_a;
    Rng tie_b = tie_a;
    result.coupled_distance.push_back(signal_distance(sa.signal, sb.signal));
    for (std::size_t t = 0; t < horizon; ++t) {
      step_abstract(sa, a, pop_a, tie_a);
      step_abstract(sb, b, pop_b, tie_b);
      result.coupled_distance.push_back(signal_distance(sa.signal, sb.signal));
    }
  }

  const std::size_t M = config.actions();
  std::vector<std::vector<double>> end_a(M), end_b(M);
  for (std::size_t i = 0; i < trajectories; ++i) {
    const auto ra = run_abstract(a, horizon, 1 + i);
    const auto rb = run_abstract(b, horizon, 1 + trajectories + i);
    for (std::size_t m = 0; m < M; ++m) {
      end_a[m].push_back(ra.back().counts[m] / config.agents);
      end_b[m].push_back(rb.back().counts[m] / config.agents);
    }
  }
  for (std::size_t m = 0; m < M; ++m) result.ks_per_action.push_back(ks_statistic(end_a[m], end_b[m]));
  result.ks_distance = result.ks_per_action.front();
  return result;
}

AbstractConfig lipschitz_config(double agents, std::size_t actions, std::uint64_t seed) {
  AbstractConfig c;
  c.agents = agents;
  for (std::size_t m = 0; m < actions; ++m) {
    c.costs.push_back(AbstractCostFn::linear_over_n(agents, 0.1 * static_cast<double>(m + 1)));
  }
  c.scheme = Scheme::full_extreme();
  c.types = uniform_type_set(3);
  c.renewal = FiniteSupport{{PopulationProfile{{0.5, 0.3, 0.2}}, PopulationProfile{{0.2, 0.3, 0.5}}}, {0.5, 0.5}};
  c.initial_signal.assign(actions, Interval{0.5, 0.5});
  c.seed = seed;
  return c;
}

void FlappingSpec::validate() const {
  if (!(J > 0.0)) throw ValidationError("flapping demo needs J > 0");
  if (N < 3 || N % 2 == 0) throw ValidationError("flapping demo needs an odd N >= 3");
}

AbstractCostFn flapping_cost(const FlappingSpec& flap) {
  flap.validate();
  return AbstractCostFn::flapping(flap.J, flap.N);
}

FlappingDemo flapping_demo(const FlappingSpec& flap, std::size_t horizon, std::uint64_t seed) {
  flap.validate();
  if (horizon < 1) throw ValidationError("flapping demo needs horizon >= 1");
  const double N = flap.N;
  const double floor_half = std::floor(N / 2.0);
  const double ceil_half = std::ceil(N / 2.0);

  // Scalar signaling: every agent reads the same number, so one risk type suffices.
  AbstractConfig scalar;
  scalar.agents = N;
  scalar.costs = {flapping_cost(flap), flapping_cost(flap)};
  scalar.scheme = Scheme::now();
  scalar.types = TypeSet{{0.5}};
  scalar.renewal = FiniteSupport{{PopulationProfile{{1.0}}}, {1.0}};
  scalar.initial_signal = {Interval{1.0, 1.0}, Interval{flap.J + 1.0, flap.J + 1.0}};
  scalar.seed = seed;

  // Interval signaling: a risk-seeking and a risk-averse type read opposite
  // ends of the first signal and split floor/ceil.
  AbstractConfig interval;
  interval.agents = N;
  interval.costs = scalar.costs;
  interval.scheme = Scheme::extreme(2);
  interval.types = TypeSet{{0.0, 1.0}};
  interval.renewal = FiniteSupport{{PopulationProfile{{floor_half / N, 1.0 - floor_half / N}}}, {1.0}};
  interval.initial_signal = {Interval{0.0, flap.J + 2.0}, Interval{1.0, 1.0}};
  interval.seed = seed;

  FlappingDemo demo;
  demo.scalar_run = run_abstract(scalar, horizon);
  demo.interval_run = run_abstract(interval, horizon);

  demo.scalar_all_or_nothing = true;
  for (const AbstractStep& s : demo.scalar_run) {
    if (s.t < 2) continue;
    const bool first_full = s.counts[0] == N && s.counts[1] == 0.0;
    const bool second_full = s.counts[0] == 0.0 && s.counts[1] == N;
    demo.scalar_all_or_nothing = demo.scalar_all_or_nothing && (first_full || second_full);
  }
  const auto& first = demo.interval_run.front().counts;
  const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
  demo.interval_balanced = (near(first[0], floor_half) && near(first[1], ceil_half)) ||
                           (near(first[0], ceil_half) && near(first[1], floor_half));

  demo.scalar_cost = demo.scalar_run.front().social_cost;
  demo.interval_cost = demo.interval_run.front().social_cost;
  demo.closed_form_interval_cost = floor_half / N + ceil_half / N * std::pow(flap.J + 1.0, 1.0 / N);
  demo.gap = demo.scalar_cost - demo.interval_cost;
  demo.gap_lower_bound = flap.J - N * (std::pow(flap.J + 1.0, 1.0 / N) - 1.0);
  return demo;
}

}  // namespace congsig
