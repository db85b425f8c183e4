#include "congsig/engine.hpp"

#include <algorithm>
#include <cmath>

#include "congsig/assignment.hpp"
#include "congsig/costs.hpp"
#include "congsig/csv.hpp"
#include "congsig/diamond.hpp"
#include "congsig/errors.hpp"
#include "congsig/population.hpp"
#include "congsig/rng.hpp"

namespace congsig {

void RunConfig::validate() const {
  scheme.validate();
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
  if (type_count < 2) throw ValidationError("at least 2 risk types are required");
  if (!(eps >= 0.0)) throw ValidationError("eps must be nonnegative");
  congsig::validate(RenewalProcess{UniformPerturbation{type_count, eps}});
}

Instance load_instance(const RunConfig& config) {
  if (config.builtin == "diamond") return diamond_instance();
  if (config.builtin == "sioux-falls") return sioux_falls_instance();
  if (!config.builtin.empty()) throw ValidationError("unknown builtin instance '" + config.builtin + "'");
  if (config.net_path.empty() || config.trips_path.empty()) {
    throw ValidationError("a network file and a trips file are required");
  }
  return {config.net_path, load_network(config.net_path), load_trips(config.trips_path)};
}

std::vector<PeriodRecord> simulate(const Instance& instance, const RunConfig& config) {
  config.validate();
  const Network& net = instance.net;
  const std::size_t edge_count = net.edge_count();
  const TypeSet types = uniform_type_set(config.type_count);
  const RenewalProcess renewal = UniformPerturbation{config.type_count, config.eps};
  const CostParams cost_params{config.capped};

  Rng population_rng = Rng::substream(config.seed, "population");
  CostHistory history(edge_count, config.scheme.window());

  std::vector<PeriodRecord> records;
  records.reserve(config.horizon);
  std::vector<PathCost> path_costs;
  for (std::size_t t = 1; t <= config.horizon; ++t) {
    PeriodRecord rec;
    rec.t = t;
    const PopulationProfile profile = sample_profile(renewal, population_rng);
    rec.weights = profile.weights;
    rec.signal = emit_signal(history, config.scheme);

    FlowState state = assign(net, instance.demand, rec.signal, profile, types);
    rec.flows = std::move(state.edge_flows);

    rec.costs.resize(edge_count);
    for (const Edge& e : net.edges()) {
      rec.costs[e.id] = travel_time(e, rec.flows[e.id], cost_params);
      rec.total_excess += excess(e, rec.flows[e.id]);
    }
    history.record_period(rec.costs);

    path_costs.clear();
    for (const PathLoad& load : state.path_loads) {
      path_costs.push_back({load.mean_path_cost(rec.costs), load.agents});
    }
    rec.social_cost = social_cost_network(rec.flows, path_costs);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<PeriodRecord> run(const RunConfig& config) {
  config.validate();
  const Instance instance = load_instance(config);
  return simulate(instance, config);
}

Summary summarize(const std::vector<PeriodRecord>& records, std::optional<double> reference_cost,
                  std::optional<std::size_t> window) {
  if (records.empty()) throw ValidationError("no records to summarize");
  const std::size_t w = window.value_or(std::min<std::size_t>(50, records.size()));
  if (w < 1 || w > records.size()) throw ValidationError("summary window must lie in [1, T]");
  Summary s;
  s.window = w;
  for (auto it = records.end() - static_cast<std::ptrdiff_t>(w); it != records.end(); ++it) {
    s.mean_cost += it->social_cost;
    s.mean_excess += it->total_excess;
  }
  s.mean_cost /= static_cast<double>(w);
  s.mean_excess /= static_cast<double>(w);
  if (reference_cost) s.regret = s.mean_cost - *reference_cost;
  return s;
}

std::optional<double> reference_cost(const RunConfig& config) {
  return config.capped ? config.reference.capped_cost : config.reference.uncapped_cost;
}

void write_records_csv(std::ostream& out, const std::vector<PeriodRecord>& records, std::size_t type_count,
                       std::size_t edge_count) {
  std::vector<std::string> names = {"t", "social_cost", "total_excess"};
  for (std::size_t k = 1; k <= type_count; ++k) names.push_back("w_omega_" + std::to_string(k));
  for (const char* prefix : {"flow_e", "cost_e", "ulo_e", "uhi_e"}) {
    for (std::size_t e = 1; e <= edge_count; ++e) names.push_back(prefix + std::to_string(e));
  }
  CsvWriter csv(out);
  csv.header(names);
  for (const PeriodRecord& r : records) {
    csv.field(r.t).field(r.social_cost).field(r.total_excess);
    for (double w : r.weights) csv.field(w);
    for (double x : r.flows) csv.field(x);
    for (double c : r.costs) csv.field(c);
    for (const Interval& s : r.signal) csv.field(s.lo);
    for (const Interval& s : r.signal) csv.field(s.hi);
    csv.end_row();
  }
}

}  // namespace congsig
