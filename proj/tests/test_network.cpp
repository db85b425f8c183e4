#include <sstream>

#include "congsig/diamond.hpp"
#include "congsig/errors.hpp"
#include "congsig/network.hpp"
#include "congsig/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace congsig;

namespace {

const char* kMeta =
    "<NUMBER OF ZONES> 3\n"
    "<NUMBER OF NODES> 3\n"
    "<FIRST THRU NODE> 1\n"
    "<NUMBER OF LINKS> 2\n"
    "<END OF METADATA>\n"
    "~ init term cap len fft b p speed toll type ;\n";

std::vector<std::string> warnings;
void collect(const std::string& w) { warnings.push_back(w); }

}  // namespace

TEST_CASE("a diamond row parses field by field") {
  const Network net = parse_network("\t2\t3\t15\t0\t2\t1\t2\t0\t0\t1\t;\n");
  REQUIRE(net.edge_count() == 1);
  const Edge& e = net.edge(0);
  CHECK(e.from == 2);
  CHECK(e.to == 3);
  CHECK(e.capacity == 15);
  CHECK(e.length == 0);
  CHECK(e.free_flow == 2);
  CHECK(e.b_coeff == 1);
  CHECK(e.power == 2);
}

TEST_CASE("the diamond network has five nodes and five links") {
  const Network net = diamond_instance().net;
  CHECK(net.edge_count() == 5);
  CHECK(net.node_count() == 5);
  CHECK(net.find_edge(2, 4) == 2);
  CHECK(net.find_edge(5, 1) == net.edge_count());
  CHECK(net.out_edges(2).size() == 2);
}

TEST_CASE("metadata followed by no rows gives an empty network") {
  const Network net = parse_network("<NUMBER OF NODES> 0\n<END OF METADATA>\n");
  CHECK(net.edge_count() == 0);
}

TEST_CASE("malformed rows report their line") {
  SUBCASE("too few fields") {
    try {
      parse_network(std::string(kMeta) + "1 2 3 4 ;\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 7);
    }
  }
  SUBCASE("non-numeric field") {
    try {
      parse_network(std::string(kMeta) + "1 2 15 0 2 1 2 0 0 1 ;\n1 x 15 0 2 1 2 0 0 1 ;\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 8);
    }
  }
  SUBCASE("missing terminator") { CHECK_THROWS_AS(parse_network("1 2 15 0 2 1 2 0 0 1\n"), ParseError); }
}

TEST_CASE("nonpositive capacity is a validation error") {
  CHECK_THROWS_AS(parse_network("1 2 0 0 2 1 2 0 0 1 ;\n"), ValidationError);
  CHECK_THROWS_AS(parse_network("1 2 -3 0 2 1 2 0 0 1 ;\n"), ValidationError);
}

TEST_CASE("metadata must be closed") {
  CHECK_THROWS_AS(parse_network("<NUMBER OF NODES> 2\n1 2 15 0 2 1 2 0 0 1 ;\n"), ParseError);
}

TEST_CASE("load_network on a missing file throws") {
  CHECK_THROWS(load_network("/nonexistent/net.tntp"));
}

TEST_CASE("diamond trips") {
  const DemandTable d = diamond_instance().demand;
  CHECK(d.total() == 30);
  REQUIRE(d.entries().size() == 1);
  CHECK(d.entries().at({1, 5}) == 30);
}

TEST_CASE("trips parsing rules") {
  warnings.clear();
  SUBCASE("an empty origin block adds nothing") {
    const DemandTable d = parse_trips("Origin 1\n 2 : 5;\nOrigin 2\n", collect);
    CHECK(d.entries().size() == 1);
    CHECK(d.total() == 5);
  }
  SUBCASE("several entries per line, duplicates summed, zeros dropped") {
    const DemandTable d = parse_trips("Origin 1\n 2 : 5; 3 : 0; 2 : 1.5;\n", collect);
    CHECK(d.entries().size() == 1);
    CHECK(d.entries().at({1, 2}) == doctest::Approx(6.5));
  }
  SUBCASE("negative flow") { CHECK_THROWS_AS(parse_trips("Origin 1\n 2 : -1;\n", collect), ValidationError); }
  SUBCASE("origin without id") { CHECK_THROWS_AS(parse_trips("Origin\n 2 : 1;\n", collect), ParseError); }
  SUBCASE("stale total only warns") {
    const DemandTable d =
        parse_trips("<TOTAL OD FLOW> 99\n<END OF METADATA>\nOrigin 1\n 2 : 1;\n", collect);
    CHECK(d.total() == 1);
    CHECK(warnings.size() == 1);
  }
  SUBCASE("matching total is silent") {
    parse_trips("<TOTAL OD FLOW> 1\n<END OF METADATA>\nOrigin 1\n 2 : 1;\n", collect);
    CHECK(warnings.empty());
  }
}

TEST_CASE("sioux falls files") {
  const Instance sf = sioux_falls_instance();
  CHECK(sf.net.node_count() == 24);
  CHECK(sf.net.edge_count() == 76);
  CHECK(sf.demand.entries().size() == 528);
  CHECK(sf.demand.total() == doctest::Approx(360600).epsilon(1e-6));
}

TEST_CASE("tight dag on the diamond") {
  const Network net = diamond_instance().net;
  SUBCASE("zero weights") {
    const std::vector<double> w(5, 0.0);
    const TightDag dag = shortest_path_dag(net, w, 1, 5);
    CHECK(dag.total_paths() == 2);
    CHECK(dag.edge_share(net, net.find_edge(2, 3)) == doctest::Approx(0.5));
    CHECK(dag.edge_share(net, net.find_edge(1, 2)) == doctest::Approx(1.0));
  }
  SUBCASE("free-flow weights") {
    const std::vector<double> w = {6, 2, 2, 1, 1};
    const TightDag dag = shortest_path_dag(net, w, 1, 5);
    CHECK(dag.total_paths() == 2);
    CHECK(dag.dist[5] == 9);
  }
  SUBCASE("one route cheaper") {
    const std::vector<double> w = {6, 2, 3, 1, 1};
    const TightDag dag = shortest_path_dag(net, w, 1, 5);
    CHECK(dag.total_paths() == 1);
    CHECK(dag.edge_share(net, net.find_edge(2, 4)) == 0.0);
  }
  SUBCASE("unreachable destination") {
    const std::vector<double> w(5, 1.0);
    CHECK_THROWS_AS(shortest_path_dag(net, w, 5, 1), NoPathError);
  }
  SUBCASE("negative weight") {
    const std::vector<double> w = {1, -1, 1, 1, 1};
    CHECK_THROWS_AS(shortest_path_dag(net, w, 1, 5), ValidationError);
  }
}

TEST_CASE("single edge network") {
  const Network net(2, {Edge{0, 1, 2, 10, 0, 3, 0, 1}});
  const std::vector<double> w = {3.5};
  const TightDag dag = shortest_path_dag(net, w, 1, 2);
  CHECK(dag.total_paths() == 1);
  CHECK(dag.dist[2] == 3.5);
}

TEST_CASE("zero weights with the origin numbered above the destination") {
  // 4 -> {2,3} -> 1
  const Network net(4, {Edge{0, 4, 2, 1, 0, 1, 0, 1}, Edge{0, 4, 3, 1, 0, 1, 0, 1}, Edge{0, 2, 1, 1, 0, 1, 0, 1},
                        Edge{0, 3, 1, 1, 0, 1, 0, 1}});
  const std::vector<double> w(4, 0.0);
  const TightDag dag = shortest_path_dag(net, w, 4, 1);
  CHECK(dag.total_paths() == 2);
  CHECK(dag.tight_edges.size() == 4);
}

TEST_CASE("tight dag matches path enumeration on random graphs") {
  Rng rng(20240101);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng.index(5));
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) {
        if (u != v && rng.uniform01() < 0.45) edges.push_back(Edge{0, u, v, 1, 0, 1, 0, 1});
      }
    }
    const Network net(n, edges);
    std::vector<double> w(net.edge_count());
    for (double& x : w) x = 1.0 + static_cast<double>(rng.index(3));
    const int o = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    int d = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    if (d == o) d = o % n + 1;
    const oracle::PathEnumeration ref = oracle::enumerate_min_paths(net, w, o, d);
    if (ref.count == 0) {
      CHECK_THROWS_AS(shortest_path_dag(net, w, o, d), NoPathError);
      continue;
    }
    const TightDag dag = shortest_path_dag(net, w, o, d);
    CHECK(dag.dist[static_cast<std::size_t>(d)] == ref.best);
    CHECK(dag.total_paths() == static_cast<double>(ref.count));
    for (std::size_t id = 0; id < net.edge_count(); ++id) {
      CHECK(dag.edge_share(net, id) ==
            doctest::Approx(static_cast<double>(ref.edge_uses[id]) / static_cast<double>(ref.count)));
    }
  }
}

TEST_CASE("network and trips round-trip through the writers") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.index(8));
    std::vector<Edge> edges;
    std::map<DemandTable::Key, double> demand;
    for (int i = 0; i < 3 * n; ++i) {
      const int u = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      int v = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
      if (v == u) v = u % n + 1;
      Edge e;
      e.from = u;
      e.to = v;
      e.capacity = rng.uniform(0.1, 1e5);
      e.length = rng.uniform(0, 10);
      e.free_flow = rng.uniform(0, 10);
      e.b_coeff = rng.uniform(0, 2);
      e.power = static_cast<double>(rng.index(7));
      edges.push_back(e);
      demand[{u, v}] += rng.uniform(0, 100);
    }
    const Network net(n, edges);
    const DemandTable table(demand);

    std::ostringstream net_text;
    write_network(net_text, net);
    const Network back = parse_network(net_text.str());
    REQUIRE(back.edge_count() == net.edge_count());
    CHECK(back.node_count() == net.node_count());
    for (std::size_t id = 0; id < net.edge_count(); ++id) {
      const Edge& a = net.edge(id);
      const Edge& b = back.edge(id);
      CHECK(a.from == b.from);
      CHECK(a.to == b.to);
      CHECK(a.capacity == b.capacity);
      CHECK(a.length == b.length);
      CHECK(a.free_flow == b.free_flow);
      CHECK(a.b_coeff == b.b_coeff);
      CHECK(a.power == b.power);
    }

    std::ostringstream trips_text;
    write_trips(trips_text, table, n);
    warnings.clear();
    const DemandTable tback = parse_trips(trips_text.str(), collect);
    CHECK(tback.entries() == table.entries());
    CHECK(warnings.empty());
  }
}
