#pragma once

// Randomized property checks shared by the unit tests and the acceptance binary.
// Each returns an empty string on success, otherwise a description of the first
// counterexample.

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "congsig/assignment.hpp"
#include "congsig/costs.hpp"
#include "congsig/diamond.hpp"
#include "congsig/network.hpp"
#include "congsig/population.hpp"
#include "congsig/rng.hpp"
#include "congsig/signaling.hpp"

namespace props {

using namespace congsig;

inline bool close(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

inline std::string fail(const std::string& what, int trial) {
  return what + " (trial " + std::to_string(trial) + ")";
}

/// Random strongly connected graph: a ring plus random chords.
inline Network random_network(Rng& rng, int n) {
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    Edge e;
    e.from = u;
    e.to = v;
    e.capacity = rng.uniform(1, 50);
    e.free_flow = rng.uniform(0, 5);
    e.b_coeff = rng.uniform(0, 2);
    e.power = static_cast<double>(rng.index(5));
    edges.push_back(e);
  };
  for (int u = 1; u <= n; ++u) add(u, u % n + 1);
  const std::size_t chords = rng.index(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < chords; ++i) {
    const int u = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    const int v = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    if (u != v) add(u, v);
  }
  return Network(n, edges);
}

/// Random signal; coarse values in some trials so that exact ties occur.
inline Signal random_signal(Rng& rng, std::size_t width, bool coarse) {
  Signal s(width);
  for (Interval& u : s) {
    double a = coarse ? static_cast<double>(rng.index(3)) : rng.uniform(0, 10);
    double b = coarse ? static_cast<double>(rng.index(3)) : rng.uniform(0, 10);
    if (a > b) std::swap(a, b);
    u = {a, b};
  }
  return s;
}

/// Node balance: outflow - inflow equals demand leaving minus demand arriving;
/// the path loads carry exactly the demand.
inline std::string flow_conservation(int cases, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    const int n = 2 + static_cast<int>(rng.index(7));
    const Network net = random_network(rng, n);
    std::map<DemandTable::Key, double> entries;
    const std::size_t pairs = 1 + rng.index(6);
    for (std::size_t i = 0; i < pairs; ++i) {
      const int o = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      const int d = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      if (o != d) entries[{o, d}] += rng.uniform(0, 100);
    }
    const DemandTable demand(entries);
    const std::size_t K = 2 + rng.index(4);
    const TypeSet types = uniform_type_set(K);
    Rng prng = Rng::substream(seed, "profile", static_cast<std::uint64_t>(trial));
    const PopulationProfile profile =
        sample_profile(UniformPerturbation{K, rng.uniform(0, 1.0 / static_cast<double>(K))}, prng);
    const Signal signal = random_signal(rng, net.edge_count(), trial % 2 == 0);
    const FlowState f = assign(net, demand, signal, profile, types);

    std::vector<double> balance(static_cast<std::size_t>(n) + 1, 0.0);
    for (const Edge& e : net.edges()) {
      if (f.edge_flows[e.id] < 0) return fail("negative edge flow", trial);
      balance[static_cast<std::size_t>(e.from)] += f.edge_flows[e.id];
      balance[static_cast<std::size_t>(e.to)] -= f.edge_flows[e.id];
    }
    for (const auto& [od, x] : demand.entries()) {
      balance[static_cast<std::size_t>(od.first)] -= x;
      balance[static_cast<std::size_t>(od.second)] += x;
    }
    for (double b : balance) {
      if (!close(b, 0.0, 1e-9 * std::max(1.0, demand.total()))) return fail("node balance violated", trial);
    }
    if (!close(f.total_agents(), demand.total())) return fail("path loads do not carry the demand", trial);
  }
  return {};
}

/// Capped time never exceeds uncapped time; both are at least the free-flow time.
inline std::string capped_below_uncapped(int cases, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    Edge e;
    e.capacity = rng.uniform(0.01, 1000);
    e.free_flow = rng.uniform(0, 20);
    e.b_coeff = rng.uniform(0, 5);
    e.power = rng.uniform(0, 8);
    const double x = rng.uniform(0, 3 * e.capacity);
    const double capped = bpr_time_capped(e, x);
    const double uncapped = bpr_time(e, x);
    if (!(capped <= uncapped * (1 + 1e-15))) return fail("capped above uncapped", trial);
    if (!(capped >= e.free_flow)) return fail("capped below free flow", trial);
    if (!(capped <= e.free_flow * (1 + e.b_coeff) * (1 + 1e-15))) return fail("capped above F(1+B)", trial);
  }
  return {};
}

/// EXTREME(r) lies inside FULL_EXTREME, and larger windows contain smaller ones.
inline std::string extreme_nesting(int cases, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    const std::size_t width = 1 + rng.index(5);
    CostHistory h(width, 50);
    const std::size_t T = 1 + rng.index(80);
    for (std::size_t t = 0; t < T; ++t) {
      std::vector<double> c(width);
      for (double& x : c) x = rng.uniform(0, 100);
      h.record_period(c);
    }
    const Signal full = emit_signal(h, Scheme::full_extreme());
    Signal inner;
    for (std::size_t r : {1, 3, 10, 50}) {
      const Signal s = emit_signal(h, Scheme::extreme(r));
      for (std::size_t m = 0; m < width; ++m) {
        if (s[m].lo < full[m].lo || s[m].hi > full[m].hi) return fail("extreme outside full extreme", trial);
        if (!inner.empty() && (inner[m].lo < s[m].lo || inner[m].hi > s[m].hi)) {
          return fail("smaller window not nested", trial);
        }
      }
      inner = s;
    }
  }
  return {};
}

/// From the second recorded period on, EXTREME(1) broadcasts the NOW signal, so
/// routing is identical.
inline std::string extreme_one_is_now(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const Instance d = diamond_instance();
  const TypeSet types = uniform_type_set(5);
  for (int trial = 0; trial < cases; ++trial) {
    CostHistory h(d.net.edge_count(), 1);
    const std::size_t T = 2 + rng.index(20);
    for (std::size_t t = 0; t < T; ++t) {
      std::vector<double> c(d.net.edge_count());
      for (double& x : c) x = trial % 2 == 0 ? static_cast<double>(rng.index(4)) : rng.uniform(0, 30);
      h.record_period(c);
    }
    const Signal a = emit_signal(h, Scheme::extreme(1));
    const Signal b = emit_signal(h, Scheme::now());
    if (a != b) return fail("signals differ", trial);
    Rng prng(static_cast<std::uint64_t>(trial));
    const PopulationProfile p = sample_profile(UniformPerturbation{5, 0.15}, prng);
    if (assign(d.net, d.demand, a, p, types).edge_flows != assign(d.net, d.demand, b, p, types).edge_flows) {
      return fail("flows differ", trial);
    }
  }
  return {};
}

/// On the diamond every route has three links, so shifting all bounds by a constant
/// or scaling them by a positive factor leaves the assignment unchanged.
inline std::string shift_and_scale_invariance(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const Instance d = diamond_instance();
  const TypeSet types = uniform_type_set(5);
  for (int trial = 0; trial < cases; ++trial) {
    const Signal s = random_signal(rng, d.net.edge_count(), trial % 2 == 0);
    const double shift = static_cast<double>(rng.index(5));
    const double scale = static_cast<double>(1 + rng.index(4));
    Signal shifted = s;
    Signal scaled = s;
    for (std::size_t m = 0; m < s.size(); ++m) {
      shifted[m] = {s[m].lo + shift, s[m].hi + shift};
      scaled[m] = {s[m].lo * scale, s[m].hi * scale};
    }
    Rng prng(static_cast<std::uint64_t>(trial));
    const PopulationProfile p = sample_profile(UniformPerturbation{5, 0.15}, prng);
    const auto base = assign(d.net, d.demand, s, p, types).edge_flows;
    const auto x = assign(d.net, d.demand, shifted, p, types).edge_flows;
    const auto y = assign(d.net, d.demand, scaled, p, types).edge_flows;
    for (std::size_t e = 0; e < base.size(); ++e) {
      if (!close(base[e], x[e]) || !close(base[e], y[e])) return fail("assignment changed", trial);
    }
  }
  return {};
}

/// write_network/parse_network and write_trips/parse_trips reproduce their input.
inline std::string parser_round_trip(int cases, std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < cases; ++trial) {
    const int n = 2 + static_cast<int>(rng.index(10));
    const Network net = random_network(rng, n);
    std::map<DemandTable::Key, double> entries;
    for (int i = 0; i < n; ++i) {
      const int o = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      const int dd = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      if (o != dd) entries[{o, dd}] = rng.uniform(0, 1000);
    }
    const DemandTable demand(entries);
    std::ostringstream nt;
    write_network(nt, net);
    const Network back = parse_network(nt.str());
    if (back.edge_count() != net.edge_count() || back.node_count() != net.node_count()) {
      return fail("network shape changed", trial);
    }
    for (std::size_t id = 0; id < net.edge_count(); ++id) {
      const Edge& a = net.edge(id);
      const Edge& b = back.edge(id);
      if (a.from != b.from || a.to != b.to || a.capacity != b.capacity || a.length != b.length ||
          a.free_flow != b.free_flow || a.b_coeff != b.b_coeff || a.power != b.power) {
        return fail("edge changed", trial);
      }
    }
    std::ostringstream tt;
    write_trips(tt, demand, n);
    std::string warned;
    const DemandTable tback = parse_trips(tt.str(), [&](const std::string& w) { warned = w; });
    if (tback.entries() != demand.entries()) return fail("trips changed", trial);
    if (!warned.empty()) return fail("round trip warned: " + warned, trial);
  }
  return {};
}

}  // namespace props
