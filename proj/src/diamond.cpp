#include "congsig/diamond.hpp"

#include <cmath>

#include "congsig/costs.hpp"
#include "congsig/errors.hpp"
#include "congsig/minimize.hpp"

#ifndef CONGSIG_DATA_DIR
#define CONGSIG_DATA_DIR "data"
#endif

namespace congsig {

std::string diamond_net_text() {
  return "~\tFrom\tTo\tCapacity\tLength\tFFT\tB\tPower\tSpeed\tToll\tType\t;\n"
         "\t1\t2\t25900\t6\t6\t0.15\t4\t0\t0\t1\t;\n"
         "\t2\t3\t15\t0\t2\t1\t2\t0\t0\t1\t;\n"
         "\t2\t4\t15\t0\t2\t10\t6\t0\t0\t1\t;\n"
         "\t3\t5\t99900\t6\t1\t0.15\t1\t0\t0\t1\t;\n"
         "\t4\t5\t99900\t6\t1\t0.15\t1\t0\t0\t1\t;\n";
}

std::string diamond_trips_text() {
  return "<NUMBER OF ZONES> 5\n"
         "<TOTAL OD FLOW> 30\n"
         "<END OF METADATA>\n"
         "Origin \t1 \n"
         "    5 :    30;\n";
}

Instance diamond_instance() {
  return {"diamond", parse_network(diamond_net_text()), parse_trips(diamond_trips_text())};
}

std::string data_dir() { return CONGSIG_DATA_DIR; }

Instance sioux_falls_instance() {
  return {"sioux-falls", load_network(data_dir() + "/SiouxFalls_net.tntp"),
          load_trips(data_dir() + "/SiouxFalls_trips.tntp")};
}

Reference builtin_reference(const std::string& name) {
  if (name == "diamond") return {322.307, 621.229, 15.985};
  if (name == "sioux-falls") return {3853754.650, 7480225.345, 265068.520};
  return {};
}

DiamondSplitCost diamond_split_cost(double flow_2_4, bool capped) {
  static const Instance inst = diamond_instance();
  const Network& net = inst.net;
  const double total = inst.demand.total();
  const double flow_2_3 = total - flow_2_4;
  const std::vector<double> flows = {total, flow_2_3, flow_2_4, flow_2_3, flow_2_4};
  DiamondSplitCost out;
  for (const Edge& e : net.edges()) {
    out.cost += flows[e.id] * travel_time(e, flows[e.id], CostParams{capped});
    out.excess += excess(e, flows[e.id]);
  }
  return out;
}

DiamondSue diamond_sue_oracle() {
  const auto expr = [](double x) {
    const double y = 2.0 - x;
    return y * (1.0 + y * y) + x * (10.0 + std::pow(x, 6));
  };
  const Minimum m = minimize_1d(expr, 0.0, 2.0);

  DiamondSue sue;
  sue.x = m.x;
  sue.uncapped_cost = m.value;
  const Network net = diamond_instance().net;
  sue.flow_2_4 = m.x * net.edge(net.find_edge(2, 4)).capacity;
  sue.flow_2_3 = diamond_instance().demand.total() - sue.flow_2_4;
  const auto uncapped = diamond_split_cost(sue.flow_2_4, false);
  const auto capped = diamond_split_cost(sue.flow_2_4, true);
  sue.network_uncapped_cost = uncapped.cost;
  sue.capped_cost = capped.cost;
  sue.excess = capped.excess;
  return sue;
}

}  // namespace congsig
