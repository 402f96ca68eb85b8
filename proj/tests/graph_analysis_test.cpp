#include <gtest/gtest.h>

#include <random>

#include "cppg/fixtures.hpp"
#include "cppg/graph_analysis.hpp"
#include "support/brute_force.hpp"

using namespace cppg;
namespace fx = cppg::fixtures;

namespace {

SimpleGraph petersen() {
  SimpleGraph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Distance brute_distance(std::size_t d) { return d == brute::kInf ? Distance::infinite() : Distance(d); }

}  // namespace

TEST(GraphAnalysis, DistanceMarker) {
  EXPECT_TRUE(Distance::infinite().is_infinite());
  EXPECT_EQ(Distance::infinite().to_string(), "inf");
  EXPECT_EQ(Distance(3).to_string(), "3");
  EXPECT_NE(Distance(0), Distance::infinite());
}

TEST(GraphAnalysis, KnownGraphs) {
  SimpleGraph p = petersen();
  EXPECT_EQ(diameter(p), Distance(2));
  EXPECT_EQ(girth(p), Distance(5));
  EXPECT_TRUE(is_connected(p));
  EXPECT_FALSE(is_bipartite(p));
  EXPECT_TRUE(is_triangle_free(p));
  EXPECT_FALSE(is_claw_free(p));

  EXPECT_EQ(diameter(fx::cycle(7)), Distance(3));
  EXPECT_EQ(girth(fx::cycle(7)), Distance(7));
  EXPECT_EQ(girth(fx::path(5)), Distance::infinite());
  EXPECT_EQ(girth(fx::complete_bipartite(3, 3)), Distance(4));
  EXPECT_EQ(diameter(fx::empty(3)), Distance::infinite());
  EXPECT_EQ(diameter(fx::empty(1)), Distance(0));
  EXPECT_EQ(diameter(SimpleGraph()), Distance(0));
}

TEST(GraphAnalysis, ComponentsAndIsolatedVertices) {
  SimpleGraph g = disjoint_union(fx::cycle(4), with_isolated_vertices(fx::path(3), 2));
  EXPECT_EQ(component_count(g), 4U);
  EXPECT_EQ(isolated_vertex_count(g), 2U);
  auto comps = components(g);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1, 2, 3}));
  auto dist = bfs_distances(g, 0);
  EXPECT_EQ(dist[2], 2U);
}

TEST(GraphAnalysis, PathStarCycle) {
  EXPECT_TRUE(is_path(fx::path(2)));
  EXPECT_TRUE(is_path(fx::path(6)));
  EXPECT_FALSE(is_path(fx::path(1)));
  EXPECT_TRUE(is_star(fx::complete_bipartite(1, 5)));
  EXPECT_TRUE(is_star(fx::path(3)));
  EXPECT_FALSE(is_star(fx::path(4)));
  EXPECT_FALSE(is_star(fx::complete(1)));
  EXPECT_TRUE(is_cycle(fx::cycle(3)));
  EXPECT_FALSE(is_cycle(disjoint_union(fx::cycle(3), fx::cycle(3))));
}

TEST(GraphAnalysis, ClawWitness) {
  SimpleGraph star = fx::complete_bipartite(1, 3);
  auto claw = find_claw(star);
  ASSERT_TRUE(claw);
  EXPECT_EQ((*claw)[0], 0U);
  EXPECT_TRUE(is_claw_free(fx::complete(6)));
  EXPECT_TRUE(is_claw_free(fx::cycle(8)));
  EXPECT_FALSE(is_claw_free(fx::complete_bipartite(3, 3)));
}

TEST(GraphAnalysis, CompleteBipartiteSubgraphs) {
  SimpleGraph g = fx::complete_bipartite(4, 7);
  EXPECT_TRUE(contains_complete_bipartite_subgraph(g, 4, 7));
  EXPECT_TRUE(contains_complete_bipartite_subgraph(g, 7, 4));
  EXPECT_FALSE(contains_complete_bipartite_subgraph(g, 5, 5));
  EXPECT_TRUE(contains_complete_bipartite_subgraph(fx::complete(7), 3, 4));
  EXPECT_THROW(contains_complete_bipartite_subgraph(g, 9, 9), BoundExceeded);
  EXPECT_THROW(contains_complete_bipartite_subgraph(g, 1, 13), BoundExceeded);
  EXPECT_TRUE(contains_clique(fx::complete(5), 5));
  EXPECT_FALSE(contains_clique(fx::complete_bipartite(5, 5), 3));
}

TEST(GraphAnalysis, MultipartiteRecognition) {
  EXPECT_EQ(recognize_complete_multipartite(fx::complete_multipartite({3, 1, 2})),
            (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(recognize_complete_multipartite(fx::empty(4)), (std::vector<std::size_t>{4}));
  EXPECT_EQ(recognize_complete_multipartite(fx::complete(3)), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_FALSE(recognize_complete_multipartite(fx::path(4)));
}

TEST(GraphAnalysis, RandomGraphsAgainstBruteForce) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + rng() % 11;
    double p = 0.1 + 0.08 * static_cast<double>(rng() % 10);
    SimpleGraph g = brute::random_graph(n, p, rng);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EXPECT_EQ(diameter(g), brute_distance(brute::diameter(g)));
    EXPECT_EQ(girth(g), brute_distance(brute::girth(g)));
    EXPECT_EQ(is_claw_free(g), !brute::has_claw(g));
    EXPECT_EQ(is_bipartite(g), brute::bipartite(g));
    EXPECT_EQ(is_triangle_free(g), !brute::has_triangle(g));
    EXPECT_EQ(component_count(g), brute::component_count(g));
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 4}, {2, 3}, {3, 3}})
      EXPECT_EQ(contains_complete_bipartite_subgraph(g, a, b), brute::has_biclique(g, a, b));
  }
}
