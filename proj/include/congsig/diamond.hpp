#pragma once

#include <string>

#include "congsig/engine.hpp"

namespace congsig {

/// net.txt of the five-link diamond: 1-2, 2-3, 2-4, 3-5, 4-5.
std::string diamond_net_text();
/// trips.txt of the diamond: 30 agents from node 1 to node 5.
std::string diamond_trips_text();
/// Parses the two generated texts.
Instance diamond_instance();

/// Directory holding the bundled Sioux Falls files (set at build time).
std::string data_dir();
Instance sioux_falls_instance();

/// Published equilibrium reference for a builtin instance ("diamond", "sioux-falls").
Reference builtin_reference(const std::string& name);

struct DiamondSue {
  double x = 0.0;               // minimizer on [0, 2]
  double uncapped_cost = 0.0;   // minimum of (2-x)(1+(2-x)^2) + x(10+x^6)
  double flow_2_3 = 0.0;        // split implied by x: 15x agents on 2-4, the rest on 2-3
  double flow_2_4 = 0.0;
  double network_uncapped_cost = 0.0;  // total travel time at that split, uncapped
  double capped_cost = 0.0;            // same, capped
  double excess = 0.0;                 // total excess at that split
};

/// Minimizes the two-route cost expression on [0, 2] (grid + golden section) and
/// evaluates the resulting split on the diamond network.
DiamondSue diamond_sue_oracle();

/// Total travel time and excess on the diamond with `flow_2_4` of the 30 agents
/// on route 1-2-4-5 and the rest on 1-2-3-5.
struct DiamondSplitCost {
  double cost = 0.0;
  double excess = 0.0;
};
DiamondSplitCost diamond_split_cost(double flow_2_4, bool capped);

}  // namespace congsig
