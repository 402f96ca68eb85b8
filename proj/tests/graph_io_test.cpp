#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cppg/fixtures.hpp"
#include "cppg/graph_io.hpp"
#include "cppg/power_graph.hpp"
#include "cppg/spec_parser.hpp"
#include "support/brute_force.hpp"

using namespace cppg;
namespace fx = cppg::fixtures;

namespace {

// Bit-at-a-time reader, independent of the library's grouping.
std::vector<Edge> decode_bits(const std::string& s) {
  std::size_t n = static_cast<unsigned char>(s[0]) - 63;
  std::vector<bool> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    int b = static_cast<unsigned char>(s[i]) - 63;
    for (int k = 5; k >= 0; --k) bits.push_back((b >> k) & 1);
  }
  std::vector<Edge> edges;
  std::size_t idx = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (bits[idx++]) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool same_edges(const SimpleGraph& a, const SimpleGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

}  // namespace

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(fx::complete(3)), "Bw");
  EXPECT_EQ(to_graph6(fx::complete(1)), "@");
  EXPECT_EQ(to_graph6(SimpleGraph()), "?");
  EXPECT_EQ(to_graph6(fx::complete(4)), "C~");
  EXPECT_EQ(to_graph6(fx::path(2)), "A_");
}

TEST(Graph6, RoundTripAndIndependentDecoding) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    SimpleGraph g = brute::random_graph(rng() % 63, 0.3, rng);
    std::string s = to_graph6(g);
    EXPECT_EQ(s.size(), 1 + (g.vertex_count() * (g.vertex_count() - (g.vertex_count() > 0)) / 2 + 5) / 6);
    EXPECT_EQ(decode_bits(s), g.edges());
    EXPECT_TRUE(same_edges(from_graph6(s + "\n"), g));
  }
}

TEST(Graph6, Limits) {
  EXPECT_THROW(to_graph6(fx::empty(63)), BoundExceeded);
  EXPECT_NO_THROW(to_graph6(fx::empty(62)));
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("Bww"), ParseError);
  EXPECT_THROW(from_graph6("B"), ParseError);
  EXPECT_THROW(from_graph6("B "), ParseError);
  EXPECT_THROW(from_graph6("~"), ParseError);
}

TEST(GraphJson, RoundTripKeepsLabels) {
  GroupSpec spec = parse_group_spec("D8");
  SimpleGraph g = complement_proper_power_graph(build_group(spec));
  auto j = to_json(g);
  SimpleGraph back = from_json_text(j.dump());
  EXPECT_TRUE(same_edges(back, g));
  for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(back.label(v)->order, g.label(v)->order);
  EXPECT_EQ(to_json(back), j);
  EXPECT_EQ(j["edges"].size(), g.edge_count());
}

TEST(GraphJson, Malformed) {
  EXPECT_THROW(from_json_text("{"), ParseError);
  EXPECT_THROW(from_json_text(R"({"vertices":[{"id":1,"element_order":null}],"edges":[]})"), ParseError);
  EXPECT_THROW(from_json_text(R"({"vertices":[{"id":0,"element_order":null}],"edges":[[0,0]]})"), ParseError);
  EXPECT_THROW(from_json_text(R"({"vertices":[],"edges":[[0,1]]})"), ParseError);
  EXPECT_THROW(from_json_text(R"({"edges":[]})"), ParseError);
  SimpleGraph ok = from_json_text(R"({"vertices":[{"id":0,"element_order":null},{"id":1,"element_order":2}],"edges":[[1,0]]})");
  EXPECT_TRUE(ok.adjacent(0, 1));
  EXPECT_FALSE(ok.label(0));
}

TEST(GraphDot, KleinFourComplement) {
  SimpleGraph g = complement_proper_power_graph(build_group(parse_group_spec("Z2xZ2")));
  std::string dot = to_dot(g);
  std::size_t labelled = 0;
  for (std::size_t pos = dot.find("(o=2)"); pos != std::string::npos; pos = dot.find("(o=2)", pos + 1)) ++labelled;
  EXPECT_EQ(labelled, 3U);
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_EQ(dot.rfind("graph G {", 0), 0U);
}
