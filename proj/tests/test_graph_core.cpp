#include <gtest/gtest.h>

#include <random>
#include <set>

#include "copsrobbers/distance.hpp"
#include "copsrobbers/edge_list_io.hpp"
#include "copsrobbers/generators.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/graph_algorithms.hpp"

using namespace copsrobbers;

namespace {

// Shortest cycle by brute force: for every edge uv, the shortest u-v path that
// avoids uv, plus one.
int girth_oracle(const Graph& g) {
  int best = 1 << 30;
  for (const auto& [u, v] : g.edges()) {
    std::vector<Edge> rest;
    for (const auto& e : g.edges())
      if (e != Edge{u, v}) rest.push_back(e);
    auto h = Graph::from_edges(g.order(), rest);
    auto d = bfs_distances(h, u)[static_cast<std::size_t>(v)];
    if (d != kUnreachable) best = std::min(best, d + 1);
  }
  return best;
}

}  // namespace

TEST(Graph, CycleBasics) {
  auto c5 = cycle_graph(5);
  EXPECT_EQ(c5.order(), 5u);
  EXPECT_EQ(c5.min_degree(), 2u);
  EXPECT_EQ(c5.max_degree(), 2u);
  EXPECT_TRUE(c5.connected());
}

TEST(Graph, PetersenIsCubic) {
  auto p = petersen();
  EXPECT_EQ(p.order(), 10u);
  EXPECT_EQ(p.size(), 15u);
  EXPECT_EQ(p.regular_degree(), 3);
}

TEST(Graph, SelfLoopRejected) {
  std::vector<Edge> e{{3, 3}};
  EXPECT_THROW(Graph::from_edges(5, e), InvalidInput);
}

TEST(Graph, OutOfRangeRejected) {
  std::vector<Edge> e{{0, 7}};
  EXPECT_THROW(Graph::from_edges(5, e), InvalidInput);
}

TEST(Graph, DuplicatesMergedAndSymmetric) {
  std::vector<Edge> e{{0, 1}, {1, 0}, {0, 1}, {1, 2}};
  auto g = Graph::from_edges(3, e);
  EXPECT_EQ(g.size(), 2u);
  for (Vertex v = 0; v < 3; ++v)
    for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.has_edge(w, v));
}

TEST(Graph, EmptyEdgeListIsDisconnectedNotError) {
  auto g = Graph::from_edges(4, std::vector<Edge>{});
  EXPECT_FALSE(g.connected());
  EXPECT_TRUE(Graph::from_edges(1, std::vector<Edge>{}).connected());
}

TEST(Digraph, TransposeAndDigons) {
  std::vector<Edge> arcs{{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 1}};
  auto d = Digraph::from_arcs(4, arcs);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v : d.out_neighbors(u)) {
      auto in = d.in_neighbors(v);
      EXPECT_TRUE(std::find(in.begin(), in.end(), u) != in.end());
    }
  ASSERT_EQ(d.digons().size(), 1u);
  EXPECT_EQ(d.digons()[0], (Edge{0, 1}));
  EXPECT_TRUE(d.in_digon(0));
  EXPECT_FALSE(d.in_digon(2));
  EXPECT_TRUE(d.connected());
}

TEST(Girth, SmallCases) {
  EXPECT_EQ(girth(cycle_graph(5)), 5);
  EXPECT_FALSE(girth(random_tree(7, 3)).has_value());
  EXPECT_EQ(girth(heawood()), 6);
  EXPECT_EQ(girth(complete_graph(4)), 3);
  EXPECT_EQ(girth(complete_bipartite(3, 3)), 4);
}

TEST(Girth, MatchesBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto g = random_regular(16, 3, seed);
    auto gi = girth(g);
    ASSERT_TRUE(gi.has_value());
    EXPECT_EQ(*gi, girth_oracle(g)) << "seed " << seed;
  }
}

TEST(Ball, Examples) {
  auto c6 = cycle_graph(6);
  DistanceOracle o6(c6);
  EXPECT_EQ(ball(o6, 0, 0), (std::vector<Vertex>{0}));
  EXPECT_EQ(ball(o6, 0, 2).size(), 5u);
  auto p = petersen();
  DistanceOracle op(p);
  EXPECT_EQ(ball(op, 3, 1).size(), 4u);
  EXPECT_THROW(ball(op, std::span<const Vertex>{}, 1), InvalidInput);
}

TEST(Ball, MonotoneAndSpherePartition) {
  auto g = mcgee();
  DistanceOracle o(g);
  for (Vertex v = 0; v < 24; v += 5) {
    std::size_t total = 0;
    std::vector<Vertex> prev;
    for (Hops r = 0; r <= 5; ++r) {
      auto b = ball(o, v, r);
      EXPECT_TRUE(std::includes(b.begin(), b.end(), prev.begin(), prev.end()));
      total += sphere(o, v, r).size();
      EXPECT_EQ(total, b.size());
      prev = b;
    }
  }
}

TEST(Distance, TriangleAndSymmetry) {
  auto g = random_regular(40, 3, 11);
  DistanceOracle o(g);
  std::mt19937 rng(5);
  std::uniform_int_distribution<Vertex> pick(0, 39);
  for (int i = 0; i < 500; ++i) {
    Vertex a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(o.dist(a, a), 0);
    EXPECT_EQ(o.dist(a, b), o.dist(b, a));
    if (o.dist(a, b) != kUnreachable && o.dist(b, c) != kUnreachable) {
      EXPECT_LE(o.dist(a, c), o.dist(a, b) + o.dist(b, c));
    }
  }
}

TEST(Distance, DisconnectedGivesSentinel) {
  std::vector<Edge> e{{0, 1}};
  auto g = Graph::from_edges(3, e);
  DistanceOracle o(g);
  EXPECT_EQ(o.dist(0, 2), kUnreachable);
}

TEST(Distance, DirectedIsOneWay) {
  auto d = directed_cycle(5);
  DistanceOracle o(d);
  EXPECT_EQ(o.dist(0, 1), 1);
  EXPECT_EQ(o.dist(1, 0), 4);
  auto rev = reverse_bfs_distances(d, 0);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(rev[static_cast<std::size_t>(v)], o.dist(v, 0));
}

TEST(Growth, Examples) {
  EXPECT_EQ(growth_parameter(cycle_graph(6), 2), 1u);
  EXPECT_EQ(growth_parameter(subdivide(petersen(), 1), 2), 2u);
  EXPECT_GE(growth_parameter(petersen(), 1), 2u);
  EXPECT_THROW(growth_parameter(petersen(), 0), InvalidInput);
}

TEST(Growth, DegreeMinusOneAtGirthFive) {
  for (const auto& name : {"petersen", "heawood", "mcgee", "hoffman_singleton"}) {
    auto g = named_fixture(name);
    EXPECT_EQ(growth_parameter(g, 1), g.min_degree() - 1) << name;
  }
}

TEST(Growth, SubdivisionScalesRadius) {
  for (const auto& name : {"petersen", "heawood", "tutte_coxeter"}) {
    auto g = named_fixture(name);
    auto q = growth_parameter(g, 1);
    for (int k = 1; k <= 2; ++k) EXPECT_EQ(growth_parameter(subdivide(g, k), k + 1), q) << name << " k=" << k;
  }
}

TEST(DigraphMinQ, Examples) {
  EXPECT_EQ(digraph_min_q(directed_cycle(5)), 1u);
  EXPECT_EQ(digraph_min_q(Digraph::bidirected(cycle_graph(5))), 1u);
  EXPECT_EQ(digraph_min_q(Digraph::bidirected(complete_graph(4))), 2u);
}

TEST(EdgeList, RoundTripIsByteStable) {
  auto g = petersen();
  auto text = to_edge_list(g);
  auto back = parse_edge_list(text);
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(to_edge_list(back.graph), text);
}

TEST(EdgeList, CommentsHeaderAndLabels) {
  auto loaded = parse_edge_list("# triangle\nn 4\na b\nb c # inline\nc a\n");
  EXPECT_EQ(loaded.graph.order(), 4u);
  EXPECT_EQ(loaded.graph.size(), 3u);
  EXPECT_EQ(loaded.labels[0], "a");
  EXPECT_EQ(loaded.labels[2], "c");
  EXPECT_FALSE(loaded.graph.connected());
}

TEST(EdgeList, NumericLabelsKeptAsIds) {
  auto loaded = parse_edge_list("5 7\n7 2\n");
  EXPECT_EQ(loaded.graph.order(), 8u);
  EXPECT_TRUE(loaded.graph.has_edge(5, 7));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list("0 0\n"), InvalidInput);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), InvalidInput);
  EXPECT_THROW(parse_edge_list("0 > 1\n"), InvalidInput);
  EXPECT_THROW(parse_edge_list("n 2\na b\nc d\n"), InvalidInput);
}

TEST(ArcList, DigonsAndArcs) {
  auto loaded = parse_arc_list("n 3\n0 > 1\n1 = 2\n");
  const auto& d = loaded.digraph;
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_FALSE(d.has_arc(1, 0));
  EXPECT_TRUE(d.is_digon(1, 2));
  EXPECT_EQ(to_arc_list(d), "n 3\n0 > 1\n1 = 2\n");
  EXPECT_EQ(parse_arc_list(to_arc_list(d)).digraph, d);
}
