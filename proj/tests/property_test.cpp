#include <gtest/gtest.h>

#include "cppg/genus_search.hpp"
#include "cppg/graph_analysis.hpp"
#include "cppg/graph_io.hpp"
#include "cppg/planarity.hpp"
#include "support/brute_force.hpp"
#include "support/sampling.hpp"

using namespace cppg;

namespace {

Distance from_brute(std::size_t d) { return d == brute::kInf ? Distance::infinite() : Distance(d); }

class CorpusSample : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(CorpusSample, MatchesBruteForce) {
  auto samples = sampling::corpus_graphs(25, 12, 1000 + GetParam());
  for (const auto& [spec, g] : samples) {
    SCOPED_TRACE(spec + " on " + std::to_string(g.vertex_count()) + " vertices");
    EXPECT_EQ(diameter(g), from_brute(brute::diameter(g)));
    EXPECT_EQ(girth(g), from_brute(brute::girth(g)));
    EXPECT_EQ(is_claw_free(g), !brute::has_claw(g));
    EXPECT_EQ(is_bipartite(g), brute::bipartite(g));
    GenusResult planar = orientable_genus_at_most(g, 0);
    EXPECT_EQ(planar.decision == Decision::Embeddable, is_planar(g));
    if (auto brute_planar = brute::planar_by_enumeration(g)) {
      EXPECT_EQ(is_planar(g), *brute_planar);
    }
    SimpleGraph back6 = from_graph6(to_graph6(g));
    EXPECT_EQ(back6.edges(), g.edges());
    SimpleGraph backj = from_json_text(to_json(g).dump());
    EXPECT_EQ(backj.edges(), g.edges());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      ASSERT_TRUE(backj.label(v));
      EXPECT_EQ(backj.label(v)->order, g.label(v)->order);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, CorpusSample, ::testing::Range(0, 8));

TEST(Invariants, ComplementEdgesAvoidCyclicSubgroups) {
  for (const char* text : {"D12", "Q12", "Z4xZ2", "A4", "SD(7,3,2)", "M16"}) {
    FiniteGroup grp = build_group(parse_group_spec(text));
    SimpleGraph g = complement_proper_power_graph(grp);
    auto cyc = cyclic_subgroup_bitsets(grp);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = u + 1; v < g.vertex_count(); ++v)
        EXPECT_EQ(g.adjacent(u, v), !cyc[u + 1][v + 1] && !cyc[v + 1][u + 1]) << text;
  }
}

TEST(Invariants, DiameterAtMostTwiceRadiusBound) {
  // Connected complement graphs: every vertex pair sits within the component's eccentricities.
  for (const auto& [spec, g] : sampling::corpus_graphs(30, 30, 77)) {
    if (!is_connected(g) || g.vertex_count() < 2) continue;
    std::size_t ecc0 = 0;
    for (auto d : bfs_distances(g, 0)) ecc0 = std::max<std::size_t>(ecc0, d);
    EXPECT_LE(diameter(g).value(), 2 * ecc0) << spec;
    EXPECT_GE(diameter(g).value(), ecc0) << spec;
  }
}
