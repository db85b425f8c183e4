// Command-line front end: network runs, scheme sweeps and the abstract-model demos.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "congsig/abstract_model.hpp"
#include "congsig/csv.hpp"
#include "congsig/diamond.hpp"
#include "congsig/engine.hpp"
#include "congsig/errors.hpp"

namespace fs = std::filesystem;
using namespace congsig;

namespace {

struct InstanceFlags {
  std::string net;
  std::string trips;
  std::string builtin;
  std::optional<std::size_t> horizon;
  std::uint64_t seed = 1;
  bool uncapped = false;
  std::size_t types = 5;
  double eps = 0.15;
  std::optional<double> ref_capped;
  std::optional<double> ref_uncapped;
  std::optional<double> ref_excess;
  std::optional<std::size_t> window;

  void add_to(CLI::App* app) {
    app->add_option("--net", net, "TNTP network file");
    app->add_option("--trips", trips, "TNTP trips file");
    app->add_option("--instance", builtin, "Builtin instance instead of files")
        ->check(CLI::IsMember({"diamond", "sioux-falls"}));
    app->add_option("--horizon", horizon, "Number of periods T (default 500, 300 for sioux-falls)");
    app->add_option("--seed", seed, "Master random seed");
    app->add_flag("--uncapped", uncapped, "Use uncapped BPR travel times");
    app->add_option("--types", types, "Number of risk types")->check(CLI::PositiveNumber);
    app->add_option("--eps", eps, "Half-width of the population share perturbation");
    app->add_option("--ref-capped", ref_capped, "Reference capped social cost");
    app->add_option("--ref-uncapped", ref_uncapped, "Reference uncapped social cost");
    app->add_option("--ref-excess", ref_excess, "Reference total excess");
    app->add_option("--window", window, "Summary window W (default min(50, T))");
  }

  RunConfig config(const Scheme& scheme) const {
    if (builtin.empty() && (net.empty() || trips.empty())) {
      throw CLI::ValidationError("--net and --trips (or --instance) are required");
    }
    RunConfig c;
    c.net_path = net;
    c.trips_path = trips;
    c.builtin = builtin;
    c.scheme = scheme;
    c.horizon = horizon.value_or(builtin == "sioux-falls" ? 300 : 500);
    c.seed = seed;
    c.capped = !uncapped;
    c.type_count = types;
    c.eps = eps;
    c.reference = builtin_reference(builtin);
    if (ref_capped) c.reference.capped_cost = ref_capped;
    if (ref_uncapped) c.reference.uncapped_cost = ref_uncapped;
    if (ref_excess) c.reference.excess = ref_excess;
    return c;
  }
};

Scheme make_scheme(const std::string& name, std::size_t r, double alpha) {
  if (name == "now") return Scheme::now();
  if (name == "mean") return Scheme::mean();
  if (name == "extreme") return Scheme::extreme(r);
  if (name == "full-extreme") return Scheme::full_extreme();
  return Scheme::subinterval(r, alpha);
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

void print_summary(const RunConfig& c, const Summary& s) {
  std::cout << "scheme=" << c.scheme.name();
  if (c.scheme.kind == Scheme::Kind::Extreme || c.scheme.kind == Scheme::Kind::Subinterval) {
    std::cout << " r=" << c.scheme.r;
  }
  if (c.scheme.kind == Scheme::Kind::Subinterval) std::cout << " alpha=" << format_double(c.scheme.alpha);
  std::cout << " capped=" << (c.capped ? "yes" : "no") << " periods=" << c.horizon << " window=" << s.window
            << " mean_cost=" << format_double(s.mean_cost) << " mean_excess=" << format_double(s.mean_excess);
  if (s.regret) std::cout << " regret=" << format_double(*s.regret);
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congestion simulator with scalar and interval information provision"};
  app.require_subcommand(1);

  // run
  InstanceFlags run_flags;
  std::string scheme_name = "extreme";
  std::size_t r = 10;
  double alpha = 1.0;
  std::string out_path;
  auto* run_cmd = app.add_subcommand("run", "Simulate one signaling scheme and write the per-period CSV");
  run_flags.add_to(run_cmd);
  run_cmd->add_option("--scheme", scheme_name, "Signaling scheme")
      ->check(CLI::IsMember({"now", "mean", "extreme", "subinterval", "full-extreme"}));
  run_cmd->add_option("--r", r, "Window length for extreme/subinterval")->check(CLI::PositiveNumber);
  run_cmd->add_option("--alpha", alpha, "Shrink factor for subinterval")->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--out", out_path, "Output CSV")->required();

  // sweep
  InstanceFlags sweep_flags;
  std::string sweep_dir;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run now, mean and extreme r in {5,10,20}; one CSV each plus summary.csv");
  sweep_flags.add_to(sweep_cmd);
  sweep_cmd->add_option("--out-dir", sweep_dir, "Output directory")->required();

  // flapping-demo
  double flap_j = 7.0;
  int flap_n = 3;
  std::size_t flap_horizon = 10;
  std::uint64_t flap_seed = 1;
  std::string flap_dir;
  auto* flap_cmd = app.add_subcommand("flapping-demo", "Scalar vs interval signaling on the flapping cost");
  flap_cmd->add_option("--J", flap_j, "Cost jump J > 0");
  flap_cmd->add_option("--N", flap_n, "Odd number of agents >= 3");
  flap_cmd->add_option("--horizon", flap_horizon, "Number of periods")->check(CLI::PositiveNumber);
  flap_cmd->add_option("--seed", flap_seed, "Random seed");
  flap_cmd->add_option("--out-dir", flap_dir, "Write scalar.csv and interval.csv here");

  // convergence-check
  double conv_n = 20.0;
  std::size_t conv_m = 2;
  std::size_t conv_k = 2000;
  std::size_t conv_t = 200;
  std::uint64_t conv_seed = 1;
  std::string conv_dir;
  auto* conv_cmd = app.add_subcommand("convergence-check", "Coupled-trajectory and KS checks of the limit law");
  conv_cmd->add_option("--N", conv_n, "Number of agents")->check(CLI::PositiveNumber);
  conv_cmd->add_option("--M", conv_m, "Number of actions")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  conv_cmd->add_option("--trajectories", conv_k, "Independent runs per initial signal")->check(CLI::PositiveNumber);
  conv_cmd->add_option("--horizon", conv_t, "Periods per run")->check(CLI::PositiveNumber);
  conv_cmd->add_option("--seed", conv_seed, "Random seed");
  conv_cmd->add_option("--out-dir", conv_dir, "Write coupled_a.csv, coupled_b.csv and coupled_distance.csv here");

  // gen-diamond
  std::string diamond_dir;
  auto* gen_cmd = app.add_subcommand("gen-diamond", "Write the diamond net.txt and trips.txt");
  gen_cmd->add_option("--dir", diamond_dir, "Output directory")->required();

  auto* sue_cmd = app.add_subcommand("sue-oracle", "Print the diamond equilibrium reference values");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const RunConfig config = run_flags.config(make_scheme(scheme_name, r, alpha));
      const Instance instance = load_instance(config);
      const auto records = simulate(instance, config);
      auto out = open_out(out_path);
      write_records_csv(out, records, config.type_count, instance.net.edge_count());
      print_summary(config, summarize(records, reference_cost(config), run_flags.window));
    } else if (sweep_cmd->parsed()) {
      const std::vector<std::pair<std::string, Scheme>> cells = {{"now", Scheme::now()},
                                                                 {"mean", Scheme::mean()},
                                                                 {"extreme_r5", Scheme::extreme(5)},
                                                                 {"extreme_r10", Scheme::extreme(10)},
                                                                 {"extreme_r20", Scheme::extreme(20)}};
      const Instance instance = load_instance(sweep_flags.config(Scheme::now()));
      auto summary_out = open_out(fs::path(sweep_dir) / "summary.csv");
      CsvWriter summary(summary_out);
      summary.header({"scheme", "r", "mean_cost", "mean_excess", "regret"});
      for (const auto& [label, scheme] : cells) {
        const RunConfig config = sweep_flags.config(scheme);
        const auto records = simulate(instance, config);
        auto out = open_out(fs::path(sweep_dir) / (label + ".csv"));
        write_records_csv(out, records, config.type_count, instance.net.edge_count());
        const Summary s = summarize(records, reference_cost(config), sweep_flags.window);
        summary.field(scheme.name());
        if (scheme.kind == Scheme::Kind::Extreme) {
          summary.field(scheme.r);
        } else {
          summary.field(std::string_view{});
        }
        summary.field(s.mean_cost).field(s.mean_excess);
        if (s.regret) {
          summary.field(*s.regret);
        } else {
          summary.field(std::string_view{});
        }
        summary.end_row();
        print_summary(config, s);
      }
    } else if (flap_cmd->parsed()) {
      const FlappingDemo demo = flapping_demo(FlappingSpec{flap_j, flap_n}, flap_horizon, flap_seed);
      std::cout << "t,scalar_cost,interval_cost\n";
      for (std::size_t i = 0; i < flap_horizon; ++i) {
        std::cout << demo.scalar_run[i].t << ',' << format_double(demo.scalar_run[i].social_cost) << ','
                  << format_double(demo.interval_run[i].social_cost) << '\n';
      }
      std::cout << "scalar_cost=" << format_double(demo.scalar_cost)
                << " interval_cost=" << format_double(demo.interval_cost)
                << " closed_form_interval_cost=" << format_double(demo.closed_form_interval_cost)
                << " gap=" << format_double(demo.gap) << " gap_lower_bound=" << format_double(demo.gap_lower_bound)
                << " scalar_all_or_nothing=" << (demo.scalar_all_or_nothing ? "yes" : "no")
                << " interval_balanced=" << (demo.interval_balanced ? "yes" : "no") << '\n';
      if (!flap_dir.empty()) {
        auto s = open_out(fs::path(flap_dir) / "scalar.csv");
        write_abstract_csv(s, demo.scalar_run, 2);
        auto i = open_out(fs::path(flap_dir) / "interval.csv");
        write_abstract_csv(i, demo.interval_run, 2);
      }
    } else if (conv_cmd->parsed()) {
      const AbstractConfig config = lipschitz_config(conv_n, conv_m, conv_seed);
      Signal a(conv_m), b(conv_m);
      for (std::size_t m = 0; m < conv_m; ++m) {
        const double offset = 0.1 * static_cast<double>(m + 1);
        a[m] = {offset + 0.2, offset + 0.4};
        b[m] = {offset + 0.6, offset + 0.8};
      }
      const ConvergenceResult res = convergence_check(config, conv_k, conv_t, a, b);
      std::cout << "t,coupled_distance\n";
      for (std::size_t t = 0; t < res.coupled_distance.size(); ++t) {
        if (t <= 10 || t % 20 == 0 || t + 1 == res.coupled_distance.size()) {
          std::cout << t << ',' << format_double(res.coupled_distance[t]) << '\n';
        }
      }
      std::cout << "initial_distance=" << format_double(res.coupled_distance.front())
                << " final_distance=" << format_double(res.coupled_distance.back());
      for (std::size_t m = 0; m < res.ks_per_action.size(); ++m) {
        std::cout << " ks_" << m + 1 << '=' << format_double(res.ks_per_action[m]);
      }
      std::cout << '\n';
      if (!conv_dir.empty()) {
        AbstractConfig ca = config;
        ca.initial_signal = a;
        AbstractConfig cb = config;
        cb.initial_signal = b;
        auto fa = open_out(fs::path(conv_dir) / "coupled_a.csv");
        write_abstract_csv(fa, run_abstract(ca, conv_t, 0), conv_m);
        auto fb = open_out(fs::path(conv_dir) / "coupled_b.csv");
        write_abstract_csv(fb, run_abstract(cb, conv_t, 0), conv_m);
        auto fd = open_out(fs::path(conv_dir) / "coupled_distance.csv");
        CsvWriter csv(fd);
        csv.header({"t", "distance"});
        for (std::size_t t = 0; t < res.coupled_distance.size(); ++t) {
          csv.field(t).field(res.coupled_distance[t]);
          csv.end_row();
        }
      }
    } else if (gen_cmd->parsed()) {
      open_out(fs::path(diamond_dir) / "net.txt") << diamond_net_text();
      open_out(fs::path(diamond_dir) / "trips.txt") << diamond_trips_text();
    } else if (sue_cmd->parsed()) {
      const DiamondSue sue = diamond_sue_oracle();
      std::cout << "x=" << format_double(sue.x) << " uncapped_cost=" << format_double(sue.uncapped_cost)
                << " flow_2_3=" << format_double(sue.flow_2_3) << " flow_2_4=" << format_double(sue.flow_2_4)
                << " network_uncapped_cost=" << format_double(sue.network_uncapped_cost)
                << " capped_cost=" << format_double(sue.capped_cost) << " excess=" << format_double(sue.excess)
                << '\n';
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
