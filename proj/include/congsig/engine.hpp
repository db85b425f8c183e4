#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "congsig/network.hpp"
#include "congsig/signaling.hpp"

namespace congsig {

struct Instance {
  std::string name;
  Network net;
  DemandTable demand;
};

/// Reference equilibrium values the simulated costs are compared with.
struct Reference {
  std::optional<double> capped_cost;
  std::optional<double> uncapped_cost;
  std::optional<double> excess;
};

struct RunConfig {
  std::string net_path;
  std::string trips_path;
  std::string builtin;  // "diamond" or empty; takes precedence over the paths
  Scheme scheme = Scheme::now();
  std::size_t horizon = 500;
  std::uint64_t seed = 1;
  bool capped = true;
  std::size_t type_count = 5;
  double eps = 0.15;
  Reference reference;

  void validate() const;
};

struct PeriodRecord {
  std::size_t t = 0;
  std::vector<double> flows;
  std::vector<double> costs;
  double social_cost = 0.0;
  double total_excess = 0.0;
  std::vector<double> weights;  // population share per risk type
  Signal signal;                // broadcast before the agents chose
};

/// Loads the builtin instance or parses the net/trips files named by the config.
Instance load_instance(const RunConfig& config);

/// Runs the per-period loop on an already loaded instance.
std::vector<PeriodRecord> simulate(const Instance& instance, const RunConfig& config);

/// load_instance + simulate; parse and validation errors surface before period 1.
std::vector<PeriodRecord> run(const RunConfig& config);

struct Summary {
  std::size_t window = 0;
  double mean_cost = 0.0;
  double mean_excess = 0.0;
  std::optional<double> regret;  // mean_cost - reference; negative when beating it
};

/// Means over the last `window` periods (default min(50, T)).
Summary summarize(const std::vector<PeriodRecord>& records, std::optional<double> reference_cost,
                  std::optional<std::size_t> window = std::nullopt);

/// Reference cost matching the cost mode of the config, if one was given.
std::optional<double> reference_cost(const RunConfig& config);

/// One row per period: t, social_cost, total_excess, w_omega_*, flow_e*, cost_e*, ulo_e*, uhi_e*.
void write_records_csv(std::ostream& out, const std::vector<PeriodRecord>& records, std::size_t type_count,
                       std::size_t edge_count);

}  // namespace congsig
