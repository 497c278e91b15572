#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "roadrank/errors.hpp"
#include "roadrank/ingest.hpp"
#include "synthetic.hpp"

namespace {

using namespace roadrank;

std::vector<GeoNode> nodes_from(const std::string& text) {
  std::istringstream in(text);
  return ingest::parse_nodes(in);
}

std::vector<EdgePair> edges_from(const std::string& text) {
  std::istringstream in(text);
  return ingest::parse_edges(in);
}

template <typename Error, typename Fn>
Error capture(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected exception was not thrown";
  throw std::logic_error("unreachable");
}

TEST(ParseNodes, SingleRow) {
  const auto nodes = nodes_from("id,lat,lon\n7,14.6042,120.9822\n");
  ASSERT_EQ(nodes.size(), 1u);
  EXPECT_EQ(nodes[0], (GeoNode{7, {14.6042, 120.9822}}));
}

TEST(ParseNodes, HeaderOnly) { EXPECT_TRUE(nodes_from("id,lat,lon\n").empty()); }

TEST(ParseNodes, CrLfAndBlankLines) {
  const auto nodes = nodes_from("id,lat,lon\r\n1,1.5,2.5\r\n\r\n2,-3,4\r\n");
  ASSERT_EQ(nodes.size(), 2u);
  EXPECT_EQ(nodes[1], (GeoNode{2, {-3.0, 4.0}}));
}

TEST(ParseNodes, LatitudeOutOfRange) {
  const auto e = capture<CoordinateOutOfRange>([] { nodes_from("id,lat,lon\n1,95.0,10.0\n"); });
  EXPECT_EQ(e.line(), 2u);
}

TEST(ParseNodes, LongitudeOutOfRange) {
  EXPECT_THROW(nodes_from("id,lat,lon\n1,10.0,180.5\n"), CoordinateOutOfRange);
}

TEST(ParseNodes, MalformedRows) {
  EXPECT_EQ(capture<MalformedRow>([] { nodes_from("id,lat,lon\n1,2\n"); }).line(), 2u);
  EXPECT_EQ(capture<MalformedRow>([] { nodes_from("id,lat,lon\n1,2,3\nx,2,3\n"); }).line(), 3u);
  EXPECT_THROW(nodes_from("id,lat,lon\n-1,2,3\n"), MalformedRow);
  EXPECT_THROW(nodes_from("id,lat,lon\n1,abc,3\n"), MalformedRow);
  EXPECT_THROW(nodes_from("id,lat,lon\n1,nan,3\n"), MalformedRow);
  EXPECT_THROW(nodes_from("id,lat,lon\n1,2,3,4\n"), MalformedRow);
  EXPECT_THROW(nodes_from("id,lat,lon\n1, 2,3\n"), MalformedRow);
}

TEST(ParseNodes, BadHeader) {
  EXPECT_EQ(capture<MalformedRow>([] { nodes_from("node,lat,lon\n1,2,3\n"); }).line(), 1u);
  EXPECT_THROW(nodes_from(""), MalformedRow);
}

TEST(ParseNodes, DuplicateId) {
  const auto e = capture<DuplicateNodeId>([] { nodes_from("id,lat,lon\n4,1,1\n5,1,1\n4,2,2\n"); });
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.node_id(), 4u);
}

TEST(ParseEdges, SingleEdge) {
  EXPECT_EQ(edges_from("source,target\n1,2\n"), (std::vector<EdgePair>{{1, 2}}));
}

TEST(ParseEdges, BothDirectionsKept) {
  EXPECT_EQ(edges_from("source,target\n1,2\n2,1\n"), (std::vector<EdgePair>{{1, 2}, {2, 1}}));
}

TEST(ParseEdges, DuplicatesPreserved) {
  EXPECT_EQ(edges_from("source,target\n1,2\n1,2\n").size(), 2u);
}

TEST(ParseEdges, MissingColumn) {
  EXPECT_EQ(capture<MalformedRow>([] { edges_from("source,target\n1\n"); }).line(), 2u);
}

TEST(ParseEdges, AcceptsExportedDistanceColumn) {
  EXPECT_EQ(edges_from("source,target,distance_km\n1,2,0.5\n"), (std::vector<EdgePair>{{1, 2}}));
  EXPECT_THROW(edges_from("source,target,distance_km\n1,2\n"), MalformedRow);
  EXPECT_THROW(edges_from("source,target,distance_km\n1,2,far\n"), MalformedRow);
}

TEST(BuildGraph, TwoNodesOneEdge) {
  const std::vector<GeoNode> nodes{{2, {14.61, 121.01}}, {1, {14.6, 121.0}}};
  const std::vector<EdgePair> edges{{1, 2}};
  const RoadGraph g = build_graph(nodes, edges);
  ASSERT_EQ(g.node_count(), 2u);
  ASSERT_EQ(g.edge_count(), 1u);
  // Dense index follows ascending id.
  EXPECT_EQ(g.node(0).node_id, 1u);
  EXPECT_EQ(g.index_of(2), NodeIndex{1});
  EXPECT_FALSE(g.index_of(3).has_value());
  ASSERT_EQ(g.out_arcs(0).size(), 1u);
  EXPECT_EQ(g.out_arcs(0)[0].node, 1u);
  EXPECT_EQ(g.out_arcs(0)[0].distance_km, geo::great_circle_distance({14.6, 121.0}, {14.61, 121.01}));
  EXPECT_EQ(g.in_arcs(1)[0].node, 0u);
}

TEST(BuildGraph, SelfLoopDropped) {
  const std::vector<GeoNode> nodes{{1, {0, 0}}};
  const std::vector<EdgePair> edges{{1, 1}};
  const RoadGraph g = build_graph(nodes, edges);
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, SharedCoordinatesStillLinked) {
  // Zero length is not "no link": presence is structural.
  const std::vector<GeoNode> nodes{{1, {5, 5}}, {2, {5, 5}}};
  const std::vector<EdgePair> edges{{1, 2}};
  const RoadGraph g = build_graph(nodes, edges);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.out_arcs(0)[0].distance_km, 0.0);
}

TEST(BuildGraph, UnknownEndpoint) {
  const std::vector<GeoNode> nodes{{1, {0, 0}}, {2, {0, 1}}};
  const std::vector<EdgePair> edges{{1, 2}, {2, 9}};
  const auto e = capture<UnknownEndpoint>([&] { build_graph(nodes, edges); });
  EXPECT_EQ(e.edge_row(), 1u);
  EXPECT_EQ(e.node_id(), 9u);
}

TEST(BuildGraph, DuplicateIdsRejected) {
  const std::vector<GeoNode> nodes{{1, {0, 0}}, {1, {0, 1}}};
  EXPECT_THROW(build_graph(nodes, {}), DuplicateNodeId);
}

TEST(BuildGraph, RandomEdgesWithDuplicateMatchOracle) {
  std::mt19937_64 rng(11);
  auto nodes = testkit::scattered_nodes(3, rng);
  std::vector<EdgePair> edges{{1, 2}, {2, 3}, {3, 1}, {2, 1}, {1, 3}, {2, 3}};
  const RoadGraph g = build_graph(nodes, edges);
  EXPECT_EQ(g.edge_count(), 5u);
  g.for_each_edge([&](NodeIndex from, const Arc& arc) {
    const auto& a = nodes[from].point;
    const auto& b = nodes[arc.node].point;
    EXPECT_NEAR(arc.distance_km, testkit::law_of_cosines_km(a.lat_deg, a.lon_deg, b.lat_deg, b.lon_deg,
                                                            geo::kEarthRadiusKm),
                1e-6);
    EXPECT_EQ(arc.distance_km, geo::great_circle_distance(a, b));
  });
}

TEST(BuildGraph, StructuralInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto net = testkit::random_network(25, 0.15, rng);
    // Inject repeats and self-loops.
    net.edges.push_back({3, 3});
    if (!net.edges.empty()) net.edges.push_back(net.edges.front());
    const RoadGraph g = testkit::build(net);

    std::set<std::pair<NodeIndex, NodeIndex>> out_set;
    std::set<std::pair<NodeIndex, NodeIndex>> in_set;
    for (NodeIndex i = 0; i < g.node_count(); ++i) {
      NodeIndex previous = 0;
      bool first = true;
      for (const Arc& a : g.out_arcs(i)) {
        EXPECT_NE(a.node, i);
        EXPECT_TRUE(first || a.node > previous);
        previous = a.node;
        first = false;
        out_set.insert({i, a.node});
        EXPECT_EQ(a.distance_km, geo::great_circle_distance(g.node(i).point, g.node(a.node).point));
      }
      for (const Arc& a : g.in_arcs(i)) in_set.insert({a.node, i});
    }
    EXPECT_EQ(out_set, in_set);
    EXPECT_EQ(out_set.size(), g.edge_count());
  }
}

TEST(GraphExport, RoundTripIsIsomorphicAndDeterministic) {
  std::mt19937_64 rng(21);
  const auto net = testkit::random_network(40, 0.1, rng);
  const RoadGraph g = testkit::build(net);

  std::ostringstream nodes_out, edges_out;
  ingest::write_nodes_csv(nodes_out, g);
  ingest::write_edges_csv(edges_out, g);

  std::istringstream nodes_in(nodes_out.str()), edges_in(edges_out.str());
  const RoadGraph back = build_graph(ingest::parse_nodes(nodes_in), ingest::parse_edges(edges_in));

  ASSERT_EQ(back.node_count(), g.node_count());
  ASSERT_EQ(back.edge_count(), g.edge_count());
  for (NodeIndex i = 0; i < g.node_count(); ++i) {
    EXPECT_EQ(back.node(i), g.node(i));
    ASSERT_EQ(back.out_arcs(i).size(), g.out_arcs(i).size());
    for (std::size_t k = 0; k < g.out_arcs(i).size(); ++k) EXPECT_EQ(back.out_arcs(i)[k], g.out_arcs(i)[k]);
  }

  std::ostringstream again;
  ingest::write_edges_csv(again, back);
  EXPECT_EQ(again.str(), edges_out.str());
}

TEST(InducedSubgraph, KeepsWeightsAndOrder) {
  const std::vector<GeoNode> nodes{{10, {0, 0}}, {20, {0, 1}}, {30, {1, 1}}};
  const std::vector<EdgePair> edges{{10, 20}, {20, 30}, {30, 10}, {10, 30}};
  const RoadGraph g = build_graph(nodes, edges);
  const auto sub = induced_subgraph(g, {true, false, true});
  EXPECT_EQ(sub.graph.node_count(), 2u);
  EXPECT_EQ(sub.graph.edge_count(), 2u);
  EXPECT_EQ(sub.index_map[0], NodeIndex{0});
  EXPECT_FALSE(sub.index_map[1].has_value());
  EXPECT_EQ(sub.index_map[2], NodeIndex{1});
  EXPECT_EQ(sub.graph.out_arcs(0)[0].distance_km, g.out_arcs(0)[1].distance_km);
}

}  // namespace
