#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cppg/finite_group.hpp"

namespace cppg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct VertexLabel {
  std::optional<ElementId> element;
  unsigned order = 0;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

/// Undirected simple graph on vertices 0..n-1 with a bitset adjacency matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : rows_(n, Bitset(n)), degree_(n, 0), labels_(n) {}

  SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  std::size_t vertex_count() const { return rows_.size(); }
  std::size_t edge_count() const { return edges_; }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (rows_[u][v]) return;
    rows_[u].set(v);
    rows_[v].set(u);
    ++degree_[u];
    ++degree_[v];
    ++edges_;
  }

  void remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (!rows_[u][v]) return;
    rows_[u].reset(v);
    rows_[v].reset(u);
    --degree_[u];
    --degree_[v];
    --edges_;
  }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u][v]; }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return degree_[v]; }

  std::size_t max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    for (auto w = rows_[v].find_first(); w != Bitset::npos; w = rows_[v].find_next(w))
      out.push_back(static_cast<Vertex>(w));
    return out;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (auto w = rows_[u].find_next(u); w != Bitset::npos; w = rows_[u].find_next(w))
        out.emplace_back(u, static_cast<Vertex>(w));
    return out;
  }

  void set_label(Vertex v, VertexLabel label) {
    check(v);
    labels_[v] = label;
  }
  const std::optional<VertexLabel>& label(Vertex v) const { return labels_[v]; }

  /// Vertices of degree zero.
  std::vector<Vertex> isolated_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
      if (degree_[v] == 0) out.push_back(v);
    return out;
  }

  /// Subgraph induced on `keep`, renumbered in the given order. Labels are carried over.
  SimpleGraph induced(const std::vector<Vertex>& keep) const {
    SimpleGraph h(keep.size());
    for (Vertex i = 0; i < keep.size(); ++i) {
      h.labels_[i] = labels_[keep[i]];
      for (Vertex j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) h.add_edge(i, j);
    }
    return h;
  }

  SimpleGraph complement() const {
    SimpleGraph h(vertex_count());
    h.labels_ = labels_;
    for (Vertex u = 0; u < vertex_count(); ++u)
      for (Vertex v = u + 1; v < vertex_count(); ++v)
        if (!adjacent(u, v)) h.add_edge(u, v);
    return h;
  }

  /// Equal vertex counts, edge sets and element-order labels.
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.rows_ != b.rows_) return false;
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
      auto oa = a.labels_[v] ? std::optional<unsigned>(a.labels_[v]->order) : std::nullopt;
      auto ob = b.labels_[v] ? std::optional<unsigned>(b.labels_[v]->order) : std::nullopt;
      if (oa != ob) return false;
    }
    return true;
  }

 private:
  void check(Vertex v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex out of range");
  }

  std::vector<Bitset> rows_;
  std::vector<std::size_t> degree_;
  std::vector<std::optional<VertexLabel>> labels_;
  std::size_t edges_ = 0;
};

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
inline SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::size_t na = a.vertex_count();
  SimpleGraph g(na + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(static_cast<Vertex>(u + na), static_cast<Vertex>(v + na));
  for (Vertex v = 0; v < na; ++v)
    if (a.label(v)) g.set_label(v, *a.label(v));
  for (Vertex v = 0; v < b.vertex_count(); ++v)
    if (b.label(v)) g.set_label(static_cast<Vertex>(v + na), *b.label(v));
  return g;
}

inline SimpleGraph with_isolated_vertices(const SimpleGraph& g, std::size_t extra) {
  return disjoint_union(g, SimpleGraph(extra));
}

}  // namespace cppg
