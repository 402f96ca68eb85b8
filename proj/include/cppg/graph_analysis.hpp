#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg {

/// A non-negative length or the infinite marker.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::size_t v) : value_(v) {}
  static constexpr Distance infinite() { return Distance(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr std::size_t value() const { return *value_; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Distance& d) { return os << d.to_string(); }

 private:
  std::optional<std::size_t> value_;
};

/// Connected components, each sorted, listed by smallest vertex.
inline std::vector<std::vector<Vertex>> components(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::size_t component_count(const SimpleGraph& g) { return components(g).size(); }

inline bool is_connected(const SimpleGraph& g) { return component_count(g) <= 1; }

inline std::size_t isolated_vertex_count(const SimpleGraph& g) { return g.isolated_vertices().size(); }

/// Hop distances from `s`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex s) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// 0 for graphs with at most one vertex, infinite when disconnected.
inline Distance diameter(const SimpleGraph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return Distance::infinite();
      best = std::max(best, d);
    }
  }
  return Distance(best);
}

/// Shortest cycle length, infinite for forests.
inline Distance girth(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, kUnreached);
    std::vector<Vertex> parent(n, s);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? Distance::infinite() : Distance(best);
}

/// Two-colouring if one exists, else empty.
inline std::optional<std::vector<int>> two_colouring(const SimpleGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

inline bool is_bipartite(const SimpleGraph& g) { return two_colouring(g).has_value(); }

inline bool is_triangle_free(const SimpleGraph& g) {
  Distance gr = girth(g);
  return gr.is_infinite() || gr.value() > 3;
}

inline bool is_complete(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// A claw as (centre, leaf, leaf, leaf), if one exists.
inline std::optional<std::array<Vertex, 4>> find_claw(const SimpleGraph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  for (Vertex v : order) {
    if (g.degree(v) < 3) break;
    const Bitset& nbr = g.row(v);
    for (auto a = nbr.find_first(); a != Bitset::npos; a = nbr.find_next(a)) {
      Bitset ca = nbr - g.row(a);
      for (auto b = ca.find_next(a); b != Bitset::npos; b = ca.find_next(b)) {
        Bitset cab = ca - g.row(b);
        auto c = cab.find_next(b);
        if (c != Bitset::npos)
          return std::array<Vertex, 4>{v, static_cast<Vertex>(a), static_cast<Vertex>(b),
                                       static_cast<Vertex>(c)};
      }
    }
  }
  return std::nullopt;
}

inline bool is_claw_free(const SimpleGraph& g) { return !find_claw(g).has_value(); }

inline bool is_path(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  return n >= 2 && g.edge_count() == n - 1 && g.max_degree() <= 2 && is_connected(g);
}

inline bool is_star(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  return n >= 2 && g.edge_count() == n - 1 && g.max_degree() == n - 1;
}

inline bool is_cycle(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

struct PropertyRecord {
  bool is_complete = false;
  bool is_bipartite = false;
  bool is_triangle_free = false;
  bool is_claw_free = false;
  bool is_path = false;
  bool is_star = false;
  bool is_cycle = false;
  std::size_t isolated_vertex_count = 0;
  std::size_t component_count = 0;
  Distance diameter;
  Distance girth;
};

inline PropertyRecord property_record(const SimpleGraph& g) {
  PropertyRecord r;
  r.is_complete = is_complete(g);
  r.is_bipartite = is_bipartite(g);
  r.girth = girth(g);
  r.is_triangle_free = r.girth.is_infinite() || r.girth.value() > 3;
  r.is_claw_free = is_claw_free(g);
  r.is_path = is_path(g);
  r.is_star = is_star(g);
  r.is_cycle = is_cycle(g);
  r.isolated_vertex_count = isolated_vertex_count(g);
  r.component_count = component_count(g);
  r.diameter = diameter(g);
  return r;
}

struct SubgraphBounds {
  std::size_t max_small = 8;
  std::size_t max_large = 12;
};

namespace detail {

inline bool extend_biclique(const SimpleGraph& g, const std::vector<Vertex>& candidates, std::size_t from,
                            std::size_t remaining, const Bitset& common, std::size_t need) {
  if (remaining == 0) return true;
  for (std::size_t i = from; i + remaining <= candidates.size(); ++i) {
    Bitset next = common & g.row(candidates[i]);
    if (next.count() < need) continue;
    if (extend_biclique(g, candidates, i + 1, remaining - 1, next, need)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff disjoint A, B with |A| = m, |B| = n and all A-B pairs adjacent exist (not necessarily induced).
/// Throws BoundExceeded when min(m,n) or max(m,n) is above `bounds`.
inline bool contains_complete_bipartite_subgraph(const SimpleGraph& g, std::size_t m, std::size_t n,
                                                 SubgraphBounds bounds = {}) {
  if (m > n) std::swap(m, n);
  if (m > bounds.max_small || n > bounds.max_large)
    throw BoundExceeded("K_{" + std::to_string(m) + "," + std::to_string(n) + "} exceeds search bounds");
  if (m + n > g.vertex_count()) return false;
  if (m == 0) return true;
  // The smaller side is enumerated; its common neighbourhood cannot contain it.
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= n) candidates.push_back(v);
  Bitset all(g.vertex_count());
  all.set();
  return detail::extend_biclique(g, candidates, 0, m, all, n);
}

namespace detail {

inline bool extend_clique(const SimpleGraph& g, const Bitset& candidates, std::size_t remaining) {
  if (remaining == 0) return true;
  if (candidates.count() < remaining) return false;
  for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
    Bitset later = candidates & g.row(static_cast<Vertex>(v));
    // Only vertices after v, so each clique is visited once.
    for (auto w = later.find_first(); w != Bitset::npos && w <= v; w = later.find_next(w)) later.reset(w);
    if (extend_clique(g, later, remaining - 1)) return true;
  }
  return false;
}

}  // namespace detail

inline bool contains_clique(const SimpleGraph& g, std::size_t t) {
  Bitset all(g.vertex_count());
  all.set();
  return detail::extend_clique(g, all, t);
}

/// Sorted part sizes when the graph is complete multipartite (the complement is a union of cliques).
/// An edgeless graph is one part; the empty graph has no parts.
inline std::optional<std::vector<std::size_t>> recognize_complete_multipartite(const SimpleGraph& g) {
  SimpleGraph co = g.complement();
  std::vector<std::size_t> parts;
  for (const auto& comp : components(co)) {
    std::size_t k = comp.size();
    std::size_t inner = 0;
    for (Vertex v : comp) inner += co.degree(v);
    if (inner != k * (k - 1)) return std::nullopt;
    parts.push_back(k);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace cppg
