#pragma once

#include <algorithm>
#include <iterator>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cppg/simple_graph.hpp"

namespace cppg {

struct PlanarityResult {
  bool planar = true;
  /// Edges of a subdivision of K5 or K3,3 when not planar and a witness was requested.
  std::vector<Edge> kuratowski;
};

inline PlanarityResult planarity_test(const SimpleGraph& g, bool want_witness = false) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  PlanarityResult result;
  BoostGraph bg(g.vertex_count());
  int index = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, index++, bg);
  if (!want_witness) {
    result.planar = boost::boyer_myrvold_planarity_test(bg);
    return result;
  }
  std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> witness;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(witness));
  for (const auto& e : witness) {
    auto u = static_cast<Vertex>(boost::source(e, bg));
    auto v = static_cast<Vertex>(boost::target(e, bg));
    result.kuratowski.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(result.kuratowski.begin(), result.kuratowski.end());
  return result;
}

inline bool is_planar(const SimpleGraph& g) { return planarity_test(g).planar; }

/// Planarity of the graph with one extra vertex joined to every vertex.
inline bool is_outerplanar(const SimpleGraph& g) {
  SimpleGraph apex = with_isolated_vertices(g, 1);
  auto top = static_cast<Vertex>(g.vertex_count());
  for (Vertex v = 0; v < top; ++v) apex.add_edge(v, top);
  return is_planar(apex);
}

}  // namespace cppg
