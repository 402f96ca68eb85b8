#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg {

/// Rotation system with edge signatures. rotation[v] lists v's neighbours in cyclic order;
/// an edge {u, v} has signature -1 iff (min, max) is in `negative`.
struct EmbeddingScheme {
  std::vector<std::vector<Vertex>> rotation;
  std::set<Edge> negative;

  int signature(Vertex u, Vertex v) const {
    return negative.contains({std::min(u, v), std::max(u, v)}) ? -1 : 1;
  }

  friend bool operator==(const EmbeddingScheme&, const EmbeddingScheme&) = default;
};

struct Face {
  /// Vertices in traversal order; the walk returns to the first vertex.
  std::vector<Vertex> walk;
  std::size_t length() const { return walk.size(); }
};

struct FaceTrace {
  std::vector<Face> faces;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  /// Sum over components of 2 - n + m - f.
  std::size_t euler_genus = 0;
  bool orientable = true;

  std::size_t face_count() const { return faces.size(); }
  /// Orientable genus when orientable, else the crosscap count.
  std::size_t surface_genus() const { return orientable ? euler_genus / 2 : euler_genus; }
};

/// The graph whose neighbourhoods are the rotation lists. Throws MalformedScheme when the
/// rotation is not symmetric, repeats a neighbour or contains a loop.
inline SimpleGraph scheme_graph(const EmbeddingScheme& scheme) {
  std::size_t n = scheme.rotation.size();
  SimpleGraph g(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = scheme.rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedScheme("rotation at " + std::to_string(v) + " repeats a neighbour");
    for (Vertex w : sorted) {
      if (w >= n) throw MalformedScheme("rotation at " + std::to_string(v) + " names an unknown vertex");
      if (w == v) throw MalformedScheme("rotation at " + std::to_string(v) + " contains a loop");
      const auto& back = scheme.rotation[w];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw MalformedScheme("edge " + std::to_string(v) + "-" + std::to_string(w) + " appears at one end only");
      g.add_edge(v, w);
    }
  }
  for (auto [u, v] : scheme.negative)
    if (u >= n || v >= n || !g.adjacent(u, v))
      throw MalformedScheme("signature given for a non-edge " + std::to_string(u) + "-" + std::to_string(v));
  return g;
}

/// Traces the faces of a scheme. Walking along an edge multiplies the current orientation by
/// the edge signature; the next edge is the rotation successor (orientation +1) or predecessor
/// (orientation -1) of the edge we arrived on.
inline FaceTrace face_trace(const EmbeddingScheme& scheme) {
  SimpleGraph g = scheme_graph(scheme);
  std::size_t n = g.vertex_count();
  FaceTrace out;
  out.vertex_count = n;
  out.edge_count = g.edge_count();

  // position[v][w] = index of w in rotation[v].
  std::vector<std::map<Vertex, std::size_t>> position(n);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < scheme.rotation[v].size(); ++i) position[v][scheme.rotation[v][i]] = i;

  // State (tail, head, eps) as (dart index, eps); darts are (v, i) meaning v -> rotation[v][i].
  std::vector<std::size_t> dart_base(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) dart_base[v + 1] = dart_base[v] + scheme.rotation[v].size();
  std::size_t darts = dart_base[n];
  auto encode = [&](Vertex v, std::size_t i, int eps) { return 2 * (dart_base[v] + i) + (eps < 0 ? 1 : 0); };

  auto next = [&](Vertex v, std::size_t i, int eps, Vertex& nv, std::size_t& ni, int& neps) {
    Vertex w = scheme.rotation[v][i];
    neps = eps * scheme.signature(v, w);
    std::size_t back = position[w].at(v);
    std::size_t deg = scheme.rotation[w].size();
    ni = neps > 0 ? (back + 1) % deg : (back + deg - 1) % deg;
    nv = w;
  };
  auto reverse = [&](Vertex v, std::size_t i, int eps) {
    Vertex w = scheme.rotation[v][i];
    return encode(w, position[w].at(v), -eps * scheme.signature(v, w));
  };

  std::vector<long> orbit(2 * darts, -1);
  std::vector<std::vector<Vertex>> walks;
  std::vector<std::size_t> first_state;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < scheme.rotation[v].size(); ++i)
      for (int eps : {1, -1}) {
        std::size_t s = encode(v, i, eps);
        if (orbit[s] != -1) continue;
        long id = static_cast<long>(walks.size());
        walks.emplace_back();
        first_state.push_back(s);
        Vertex cv = v;
        std::size_t ci = i;
        int ce = eps;
        while (orbit[encode(cv, ci, ce)] == -1) {
          orbit[encode(cv, ci, ce)] = id;
          walks.back().push_back(cv);
          Vertex nv;
          std::size_t ni;
          int ne;
          next(cv, ci, ce, nv, ni, ne);
          cv = nv;
          ci = ni;
          ce = ne;
        }
      }

  // Each face is an orbit together with its mirror image.
  auto comps = [&] {
    std::vector<std::size_t> comp(n, static_cast<std::size_t>(-1));
    std::size_t count = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[s] != static_cast<std::size_t>(-1)) continue;
      std::vector<Vertex> queue{s};
      comp[s] = count;
      for (std::size_t h = 0; h < queue.size(); ++h)
        for (Vertex w : g.neighbors(queue[h]))
          if (comp[w] == static_cast<std::size_t>(-1)) {
            comp[w] = count;
            queue.push_back(w);
          }
      ++count;
    }
    out.component_count = count;
    return comp;
  }();

  std::vector<std::size_t> faces_in(out.component_count, 0);
  for (std::size_t id = 0; id < walks.size(); ++id) {
    std::size_t s = first_state[id];
    std::size_t dart = s / 2;
    Vertex v = static_cast<Vertex>(std::upper_bound(dart_base.begin(), dart_base.end(), dart) - dart_base.begin() - 1);
    std::size_t i = dart - dart_base[v];
    int eps = (s % 2 == 0) ? 1 : -1;
    auto mirror = static_cast<std::size_t>(orbit[reverse(v, i, eps)]);
    if (id > mirror) continue;
    out.faces.push_back(Face{walks[id]});
    ++faces_in[comps[v]];
  }

  std::vector<std::size_t> n_in(out.component_count, 0), m_in(out.component_count, 0);
  for (Vertex v = 0; v < n; ++v) {
    ++n_in[comps[v]];
    m_in[comps[v]] += g.degree(v);
  }
  for (std::size_t c = 0; c < out.component_count; ++c) {
    std::size_t f = n_in[c] == 1 && m_in[c] == 0 ? 1 : faces_in[c];
    long eg = 2 - static_cast<long>(n_in[c]) + static_cast<long>(m_in[c] / 2) - static_cast<long>(f);
    if (eg < 0) throw MalformedScheme("face count exceeds Euler bound");
    out.euler_genus += static_cast<std::size_t>(eg);
  }
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) out.faces.push_back(Face{{v}});

  // Orientable iff vertex flips can make every signature +1.
  std::vector<int> flip(n, 0);
  for (Vertex s = 0; s < n && out.orientable; ++s) {
    if (flip[s] != 0) continue;
    flip[s] = 1;
    std::vector<Vertex> queue{s};
    for (std::size_t h = 0; h < queue.size() && out.orientable; ++h) {
      Vertex u = queue[h];
      for (Vertex w : g.neighbors(u)) {
        int want = flip[u] * scheme.signature(u, w);
        if (flip[w] == 0) {
          flip[w] = want;
          queue.push_back(w);
        } else if (flip[w] != want) {
          out.orientable = false;
          break;
        }
      }
    }
  }
  return out;
}

/// face_trace after checking that the scheme's rotation lists are exactly g's neighbourhoods.
inline FaceTrace face_trace(const SimpleGraph& g, const EmbeddingScheme& scheme) {
  if (scheme.rotation.size() != g.vertex_count())
    throw MalformedScheme("scheme has " + std::to_string(scheme.rotation.size()) + " vertices, graph has " +
                          std::to_string(g.vertex_count()));
  if (!(scheme_graph(scheme).edges() == g.edges())) throw MalformedScheme("scheme does not match the graph");
  return face_trace(scheme);
}

}  // namespace cppg
