#include <doctest.h>

#include "helpers.hpp"
#include "sdtp/distance_graph.hpp"

using namespace sdtp;

TEST_CASE("direct graph shape and earliest distances") {
  const SdtpInstance inst = testing::ex1();
  const DistanceGraph g = DistanceGraph::build(inst, Direction::Direct);
  CHECK(g.node_count() == 3);

  SsspWorkspace ws;
  ws.resize(g.node_count());
  REQUIRE(bellman_ford(g.csr(), 0, ws) == SsspStatus::Ok);
  CHECK(ws.dist[0] == 0);
  // The raw kernel knows only global bounds: alpha->1 costs 0 and the
  // difference arc 2->1 offers -9+5; interval snapping is the solvers' job.
  CHECK(ws.dist[1] == -4);
  CHECK(ws.dist[2] == -9);
}

TEST_CASE("reverse graph yields the latest schedule distances") {
  const DistanceGraph g =
      DistanceGraph::build(testing::ex1(), Direction::Reverse);
  SsspWorkspace ws;
  ws.resize(g.node_count());
  REQUIRE(bellman_ford(g.csr(), 0, ws) == SsspStatus::Ok);
  CHECK(ws.dist[1] == 10);
  CHECK(ws.dist[2] == 12);
}

TEST_CASE("negative cycle detection") {
  const DistanceGraph g =
      DistanceGraph::build(testing::ex3(), Direction::Direct);
  SsspWorkspace ws;
  ws.resize(g.node_count());
  CHECK(bellman_ford(g.csr(), 0, ws) == SsspStatus::NegativeCycle);

  CHECK(has_c1_negative_cycle(testing::ex3()));
  CHECK_FALSE(has_c1_negative_cycle(testing::ex1()));
  CHECK_FALSE(has_c1_negative_cycle(testing::ex2()));
}

TEST_CASE("source-only graphs omit the arcs into alpha") {
  const SdtpInstance inst = testing::ex1();
  const DistanceGraph both = DistanceGraph::build(inst, Direction::Direct);
  const DistanceGraph one =
      DistanceGraph::build(inst, Direction::Direct, AlphaArcs::SourceOnly);
  CHECK(one.csr().arcs.size() + 2 == both.csr().arcs.size());
  for (NodeId v = 1; v <= 2; ++v)
    for (const Arc& a : one.out(v)) CHECK(a.target != 0);
}

TEST_CASE("alpha arc rewrite") {
  const SdtpInstance inst = testing::ex1();
  DistanceGraph g = DistanceGraph::build(inst, Direction::Direct);
  const std::vector<Interval> bounds{{0, 0}, {8, 10}, {9, 12}};
  g.update_alpha_arcs(bounds);
  const auto from_alpha = g.out(0);
  CHECK(from_alpha[0].weight == -8);
  CHECK(from_alpha[1].weight == -9);
  CHECK(g.out(1)[0].target == 0);
  CHECK(g.out(1)[0].weight == 10);
}

TEST_CASE("dijkstra on a simple path") {
  std::vector<std::tuple<NodeId, NodeId, Weight>> arcs{
      {0, 1, 2}, {1, 2, 3}};
  const Csr g = Csr::from_arcs(3, arcs);
  std::vector<Weight> dist;
  dijkstra(g, 0, dist);
  CHECK(dist == std::vector<Weight>{0, 2, 5});
}

TEST_CASE("floyd-warshall closes the fixture matrix") {
  DistanceMatrix m = DistanceMatrix::infinite(3);
  m.at(0, 1) = 2;
  m.at(1, 2) = 3;
  m.at(2, 0) = -4;
  REQUIRE(floyd_warshall(m) == SsspStatus::Ok);
  CHECK(m.at(0, 2) == 5);
  CHECK(m.at(2, 1) == -2);

  m.at(2, 0) = -6;  // cycle weight -1
  CHECK(floyd_warshall(m) == SsspStatus::NegativeCycle);
}

TEST_CASE("johnson matches repeated bellman-ford") {
  const DistanceGraph g =
      DistanceGraph::build(testing::ex1(), Direction::Direct);
  DistanceMatrix viaj = DistanceMatrix::infinite(g.node_count());
  REQUIRE(johnson_apsp(g.csr(), viaj) == SsspStatus::Ok);

  SsspWorkspace ws;
  ws.resize(g.node_count());
  for (NodeId src = 0; src < g.node_count(); ++src) {
    REQUIRE(bellman_ford(g.csr(), src, ws) == SsspStatus::Ok);
    for (NodeId v = 0; v < g.node_count(); ++v)
      CHECK(viaj.at(src, v) == ws.dist[v]);
  }

  const DistanceGraph bad =
      DistanceGraph::build(testing::ex3(), Direction::Direct);
  DistanceMatrix sink = DistanceMatrix::infinite(bad.node_count());
  CHECK(johnson_apsp(bad.csr(), sink) == SsspStatus::NegativeCycle);
}
