#include "congsig/assignment.hpp"
#include "congsig/diamond.hpp"
#include "congsig/errors.hpp"
#include "congsig/population.hpp"
#include "congsig/rng.hpp"
#include "doctest.h"

using namespace congsig;

namespace {

const TypeSet five = uniform_type_set(5);
const PopulationProfile even{{0.2, 0.2, 0.2, 0.2, 0.2}};

}  // namespace

TEST_CASE("edge weights by risk type") {
  const Signal s = {{1, 3}, {2, 6}};
  CHECK(edge_weight(s, 0) == std::vector<double>{3, 6});
  CHECK(edge_weight(s, 1) == std::vector<double>{1, 2});
  CHECK(edge_weight(s, 0.5) == std::vector<double>{2, 4});
}

TEST_CASE("diamond under a zero signal splits evenly") {
  const Instance d = diamond_instance();
  const FlowState f = assign(d.net, d.demand, Signal(5, Interval{0, 0}), even, five);
  CHECK(f.edge_flows[d.net.find_edge(1, 2)] == doctest::Approx(30));
  CHECK(f.edge_flows[d.net.find_edge(2, 3)] == doctest::Approx(15));
  CHECK(f.edge_flows[d.net.find_edge(2, 4)] == doctest::Approx(15));
  CHECK(f.total_agents() == doctest::Approx(30));
}

TEST_CASE("diamond with a strictly cheaper route") {
  const Instance d = diamond_instance();
  Signal s(5, Interval{1, 1});
  s[d.net.find_edge(2, 3)] = {1, 2};
  s[d.net.find_edge(2, 4)] = {3, 5};
  const PopulationProfile skew{{0.6, 0.1, 0.1, 0.1, 0.1}};
  const FlowState f = assign(d.net, d.demand, s, skew, five);
  CHECK(f.edge_flows[d.net.find_edge(2, 3)] == doctest::Approx(30));
  CHECK(f.edge_flows[d.net.find_edge(2, 4)] == 0);
  CHECK(f.edge_flows[d.net.find_edge(3, 5)] == doctest::Approx(30));
}

TEST_CASE("risk types can disagree") {
  const Instance d = diamond_instance();
  Signal s(5, Interval{1, 1});
  s[d.net.find_edge(2, 3)] = {0, 10};  // cheap for optimists
  s[d.net.find_edge(2, 4)] = {4, 4};
  const TypeSet two = uniform_type_set(2);
  const FlowState f = assign(d.net, d.demand, s, PopulationProfile{{0.25, 0.75}}, two);
  CHECK(f.edge_flows[d.net.find_edge(2, 4)] == doctest::Approx(7.5));
  CHECK(f.edge_flows[d.net.find_edge(2, 3)] == doctest::Approx(22.5));
}

TEST_CASE("zero demand gives zero flows") {
  const Instance d = diamond_instance();
  const FlowState f = assign(d.net, DemandTable{}, Signal(5, Interval{0, 0}), even, five);
  for (double x : f.edge_flows) CHECK(x == 0);
  CHECK(f.path_loads.empty());
}

TEST_CASE("unreachable demand names the pair") {
  const Instance d = diamond_instance();
  const DemandTable back({{{5, 1}, 3.0}});
  try {
    assign(d.net, back, Signal(5, Interval{0, 0}), even, five);
    FAIL("expected NoPathError");
  } catch (const NoPathError& e) {
    CHECK(e.origin() == 5);
    CHECK(e.dest() == 1);
  }
}

TEST_CASE("abstract action choice") {
  Rng rng(1);
  const Signal s = {{1, 3}, {2, 2}};
  CHECK(choose_action_abstract(s, 0.0, rng) == 1);
  CHECK(choose_action_abstract(s, 1.0, rng) == 0);
}

TEST_CASE("a unique minimizer draws nothing") {
  Rng a(8);
  Rng b(8);
  choose_action_abstract(Signal{{1, 3}, {2, 2}}, 0.0, a);
  CHECK(a.next() == b.next());
}

TEST_CASE("ties are broken uniformly") {
  Rng rng(2024);
  const Signal s = {{2, 2}, {2, 2}};
  int first = 0;
  const int draws = 10'000;
  for (int i = 0; i < draws; ++i) first += choose_action_abstract(s, 0.5, rng) == 0 ? 1 : 0;
  CHECK(std::abs(static_cast<double>(first) / draws - 0.5) <= 0.02);
}
