#pragma once

#include <vector>

#include "cppg/errors.hpp"
#include "cppg/finite_group.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg {

/// Arc u -> v iff v is a power of u and v != u. Vertex i is element i.
struct DirectedPowerGraph {
  std::vector<std::vector<Vertex>> out;
  std::vector<VertexLabel> labels;

  std::size_t vertex_count() const { return out.size(); }
  std::size_t arc_count() const {
    std::size_t m = 0;
    for (const auto& a : out) m += a.size();
    return m;
  }
  bool has_arc(Vertex u, Vertex v) const {
    for (Vertex w : out[u])
      if (w == v) return true;
    return false;
  }
};

/// Row x is the indicator of <x> over element indices.
inline std::vector<Bitset> cyclic_subgroup_bitsets(const FiniteGroup& g) {
  std::vector<Bitset> sub(g.order(), Bitset(g.order()));
  for (auto x : g.elements())
    for (auto y : cyclic_subgroup(g, x)) sub[x.index].set(y.index);
  return sub;
}

inline DirectedPowerGraph directed_power_graph(const FiniteGroup& g) {
  auto sub = cyclic_subgroup_bitsets(g);
  DirectedPowerGraph d;
  d.out.resize(g.order());
  d.labels.resize(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    d.labels[u] = VertexLabel{ElementId{u}, static_cast<unsigned>(sub[u].count())};
    for (auto v = sub[u].find_first(); v != Bitset::npos; v = sub[u].find_next(v))
      if (v != u) d.out[u].push_back(static_cast<Vertex>(v));
  }
  return d;
}

namespace detail {

// Builds the graph on elements first..order-1 where u ~ v iff `related` matches the power relation.
inline SimpleGraph element_graph(const FiniteGroup& g, Vertex first, bool power_related) {
  auto sub = cyclic_subgroup_bitsets(g);
  std::size_t n = g.order() - first;
  SimpleGraph h(n);
  for (Vertex u = first; u < g.order(); ++u) {
    h.set_label(u - first, VertexLabel{ElementId{u}, static_cast<unsigned>(sub[u].count())});
    for (Vertex v = u + 1; v < g.order(); ++v) {
      bool related = sub[v][u] || sub[u][v];
      if (related == power_related) h.add_edge(u - first, v - first);
    }
  }
  return h;
}

inline void require_nontrivial(const FiniteGroup& g) {
  if (g.order() < 2) throw InvalidSpec("the trivial group has no non-identity elements");
}

}  // namespace detail

/// Undirected power graph on all elements, identity included as vertex 0.
inline SimpleGraph power_graph(const FiniteGroup& g) { return detail::element_graph(g, 0, true); }

/// Non-identity elements; vertex i is element i+1.
inline SimpleGraph proper_power_graph(const FiniteGroup& g) {
  detail::require_nontrivial(g);
  return detail::element_graph(g, 1, true);
}

/// Non-identity elements; u ~ v iff u is not in <v> and v is not in <u>.
inline SimpleGraph complement_proper_power_graph(const FiniteGroup& g) {
  detail::require_nontrivial(g);
  return detail::element_graph(g, 1, false);
}

}  // namespace cppg
