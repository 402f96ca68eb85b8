#pragma once

#include <map>
#include <string>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg::fixtures {

inline SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Complete multipartite graph with the given part sizes, parts numbered consecutively.
inline SimpleGraph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::size_t n = 0;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t i = 0; i < parts[p]; ++i, ++n) part_of.push_back(p);
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

inline SimpleGraph complete_bipartite(std::size_t m, std::size_t n) { return complete_multipartite({m, n}); }

/// K(k, s): k parts of size s.
inline SimpleGraph equipartite(std::size_t k, std::size_t s) {
  return complete_multipartite(std::vector<std::size_t>(k, s));
}

inline SimpleGraph cycle(std::size_t n) {
  if (n < 3) throw InvalidSpec("a cycle needs at least 3 vertices");
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

inline SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline SimpleGraph empty(std::size_t n) { return SimpleGraph(n); }

inline SimpleGraph k333() { return equipartite(3, 3); }

/// K_{3,3,3} on parts {0,1,2}, {3,4,5}, {6,7,8} plus u = 9 and u' = 10, each joined to the
/// transversal triangle 0, 3, 6. u and u' are not adjacent.
inline SimpleGraph k333_uu() {
  SimpleGraph g = with_isolated_vertices(k333(), 2);
  for (Vertex u : {9U, 10U})
    for (Vertex v : {0U, 3U, 6U}) g.add_edge(u, v);
  return g;
}

/// Named fixtures: K1..K8, Km,n (m <= n <= 7), K3,3,3, K3,3,3uu, C3..C12, P1..P12,
/// and K(k,s) for k,s <= 6.
inline std::map<std::string, SimpleGraph> fixture_graphs() {
  std::map<std::string, SimpleGraph> out;
  for (std::size_t n = 1; n <= 8; ++n) out["K" + std::to_string(n)] = complete(n);
  for (std::size_t m = 1; m <= 7; ++m)
    for (std::size_t n = m; n <= 7; ++n)
      out["K" + std::to_string(m) + "," + std::to_string(n)] = complete_bipartite(m, n);
  out["K3,3,3"] = k333();
  out["K3,3,3uu"] = k333_uu();
  for (std::size_t n = 3; n <= 12; ++n) out["C" + std::to_string(n)] = cycle(n);
  for (std::size_t n = 1; n <= 12; ++n) out["P" + std::to_string(n)] = path(n);
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t s = 1; s <= 6; ++s)
      out["K(" + std::to_string(k) + "," + std::to_string(s) + ")"] = equipartite(k, s);
  return out;
}

inline SimpleGraph fixture(const std::string& name) {
  auto all = fixture_graphs();
  auto it = all.find(name);
  if (it == all.end()) throw InvalidSpec("unknown fixture '" + name + "'");
  return it->second;
}

}  // namespace cppg::fixtures
