#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg {

struct IsomorphismOptions {
  std::size_t max_vertices = 16;
};

namespace detail {

// Colour refinement and individualization run on the disjoint union of both graphs, so the
// two sides share one signature dictionary and equal colours mean the same thing on each side.
class IsoSearch {
 public:
  IsoSearch(const SimpleGraph& a, const SimpleGraph& b) : n_(a.vertex_count()), adj_(2 * n_) {
    for (Vertex v = 0; v < n_; ++v) {
      adj_[v] = a.neighbors(v);
      for (Vertex w : b.neighbors(v)) adj_[n_ + v].push_back(static_cast<Vertex>(n_ + w));
    }
    a_ = &a;
    b_ = &b;
  }

  std::optional<std::vector<Vertex>> run() {
    std::vector<unsigned> colour(2 * n_, 0);
    return search(colour, 1);
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  const SimpleGraph* a_ = nullptr;
  const SimpleGraph* b_ = nullptr;

  // Returns the class count, or 0 if the sides are unbalanced.
  std::size_t refine(std::vector<unsigned>& colour, std::size_t classes) const {
    while (true) {
      std::map<std::vector<unsigned>, unsigned> dictionary;
      std::vector<std::vector<unsigned>> sig(colour.size());
      for (Vertex v = 0; v < colour.size(); ++v) {
        sig[v].push_back(colour[v]);
        std::vector<unsigned> around;
        for (Vertex w : adj_[v]) around.push_back(colour[w]);
        std::sort(around.begin(), around.end());
        sig[v].insert(sig[v].end(), around.begin(), around.end());
        dictionary.emplace(sig[v], 0);
      }
      unsigned next = 0;
      for (auto& [key, id] : dictionary) id = next++;
      for (Vertex v = 0; v < colour.size(); ++v) colour[v] = dictionary[sig[v]];
      std::vector<long> balance(dictionary.size(), 0);
      for (Vertex v = 0; v < colour.size(); ++v) balance[colour[v]] += v < n_ ? 1 : -1;
      for (long x : balance)
        if (x != 0) return 0;
      if (dictionary.size() == classes) return classes;
      classes = dictionary.size();
    }
  }

  std::optional<std::vector<Vertex>> search(std::vector<unsigned> colour, std::size_t classes) {
    classes = refine(colour, classes);
    if (classes == 0) return std::nullopt;
    if (classes == n_) {
      std::vector<Vertex> image(n_);
      std::vector<Vertex> by_colour(classes);
      for (Vertex w = 0; w < n_; ++w) by_colour[colour[n_ + w]] = w;
      for (Vertex v = 0; v < n_; ++v) image[v] = by_colour[colour[v]];
      for (Vertex v = 0; v < n_; ++v)
        for (Vertex u = v + 1; u < n_; ++u)
          if (a_->adjacent(v, u) != b_->adjacent(image[v], image[u])) return std::nullopt;
      return image;
    }
    // Smallest non-singleton class, first vertex of it on the left side.
    std::vector<std::size_t> size(classes, 0);
    for (Vertex v = 0; v < n_; ++v) ++size[colour[v]];
    unsigned target = 0;
    std::size_t best = n_ + 1;
    for (unsigned c = 0; c < classes; ++c)
      if (size[c] > 1 && size[c] < best) {
        best = size[c];
        target = c;
      }
    Vertex v = 0;
    while (colour[v] != target) ++v;
    auto fresh = static_cast<unsigned>(classes);
    for (Vertex w = 0; w < n_; ++w) {
      if (colour[n_ + w] != target) continue;
      std::vector<unsigned> trial = colour;
      trial[v] = fresh;
      trial[n_ + w] = fresh;
      if (auto found = search(trial, classes + 1)) return found;
    }
    return std::nullopt;
  }
};

}  // namespace detail

/// A vertex bijection from `a` to `b` preserving adjacency, if one exists. Labels are ignored.
/// Throws BoundExceeded above options.max_vertices.
inline std::optional<std::vector<Vertex>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                                                           IsomorphismOptions options = {}) {
  if (a.vertex_count() > options.max_vertices || b.vertex_count() > options.max_vertices)
    throw BoundExceeded("isomorphism test limited to " + std::to_string(options.max_vertices) +
                        " vertices");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.vertex_count() == 0) return std::vector<Vertex>{};
  return detail::IsoSearch(a, b).run();
}

inline bool is_isomorphic(const SimpleGraph& a, const SimpleGraph& b, IsomorphismOptions options = {}) {
  return find_isomorphism(a, b, options).has_value();
}

}  // namespace cppg
