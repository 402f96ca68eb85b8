#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cppg/fixtures.hpp"
#include "cppg/isomorphism.hpp"
#include "support/brute_force.hpp"

using namespace cppg;
namespace fx = cppg::fixtures;

namespace {

SimpleGraph relabel(const SimpleGraph& g, const std::vector<Vertex>& perm) {
  SimpleGraph h(g.vertex_count());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

bool is_valid_map(const SimpleGraph& a, const SimpleGraph& b, const std::vector<Vertex>& f) {
  for (Vertex u = 0; u < a.vertex_count(); ++u)
    for (Vertex v = 0; v < a.vertex_count(); ++v)
      if (u != v && a.adjacent(u, v) != b.adjacent(f[u], f[v])) return false;
  return true;
}

// Both strongly regular with parameters (16, 6, 2, 2) and not isomorphic.
SimpleGraph rook_4x4() {
  SimpleGraph g(16);
  for (Vertex u = 0; u < 16; ++u)
    for (Vertex v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4) g.add_edge(u, v);
  return g;
}

SimpleGraph shrikhande() {
  SimpleGraph g(16);
  auto id = [](int x, int y) { return static_cast<Vertex>(((x + 4) % 4) * 4 + (y + 4) % 4); };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
        Vertex u = id(x, y), v = id(x + dx, y + dy);
        if (!g.adjacent(u, v)) g.add_edge(u, v);
      }
  return g;
}

}  // namespace

TEST(Isomorphism, RelabelledRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 16;
    SimpleGraph g = brute::random_graph(n, 0.45, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph h = relabel(g, perm);
    auto f = find_isomorphism(g, h);
    ASSERT_TRUE(f) << "trial " << trial;
    EXPECT_TRUE(is_valid_map(g, h, *f));
  }
}

TEST(Isomorphism, SameDegreesDifferentGraphs) {
  EXPECT_FALSE(is_isomorphic(fx::cycle(6), disjoint_union(fx::cycle(3), fx::cycle(3))));
  EXPECT_FALSE(is_isomorphic(rook_4x4(), shrikhande()));
  EXPECT_TRUE(is_isomorphic(shrikhande(), relabel(shrikhande(), {5, 3, 8, 0, 1, 15, 2, 4, 6, 7, 9, 10, 14, 11, 12, 13})));
  EXPECT_FALSE(is_isomorphic(fx::path(4), fx::complete_bipartite(1, 3)));
}

TEST(Isomorphism, RegularGraphsNeedBacktracking) {
  // Every vertex has degree 3; refinement alone cannot tell the pieces apart.
  SimpleGraph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_TRUE(is_isomorphic(fx::complete_bipartite(3, 3), relabel(fx::complete_bipartite(3, 3), {1, 3, 5, 0, 2, 4})));
  EXPECT_FALSE(is_isomorphic(prism, fx::complete_bipartite(3, 3)));
}

TEST(Isomorphism, SizeBound) {
  EXPECT_THROW(is_isomorphic(fx::empty(17), fx::empty(17)), BoundExceeded);
  EXPECT_TRUE(is_isomorphic(fx::empty(40), fx::empty(40), IsomorphismOptions{64}));
  EXPECT_TRUE(is_isomorphic(SimpleGraph(), SimpleGraph()));
  EXPECT_FALSE(is_isomorphic(fx::empty(3), fx::empty(4)));
}
