#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cppg/errors.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg {

inline constexpr std::size_t kGraph6MaxVertices = 62;

/// graph6 short form (n <= 62): one byte n + 63, then the upper triangle column by column
/// in 6-bit groups, each offset by 63.
inline std::string to_graph6(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  if (n > kGraph6MaxVertices) throw BoundExceeded("graph6 short form holds at most 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline SimpleGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  int head = static_cast<unsigned char>(text[0]) - 63;
  if (head < 0 || head > static_cast<int>(kGraph6MaxVertices))
    throw ParseError("graph6 vertex count byte out of range", 0);
  auto n = static_cast<std::size_t>(head);
  std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t bytes = (pairs + 5) / 6;
  if (text.size() != 1 + bytes) throw ParseError("graph6 string has the wrong length", text.size());
  SimpleGraph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) throw ParseError("graph6 byte out of range", 1 + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

/// Undirected DOT; vertices carry their element order when known.
inline std::string to_dot(const SimpleGraph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (g.label(v)) os << " [label=\"" << v << " (o=" << g.label(v)->order << ")\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// {"vertices":[{"id":i,"element_order":o|null}], "edges":[[i,j],...]} with i < j, sorted.
inline nlohmann::ordered_json to_json(const SimpleGraph& g) {
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json entry;
    entry["id"] = v;
    if (g.label(v))
      entry["element_order"] = g.label(v)->order;
    else
      entry["element_order"] = nullptr;
    vertices.push_back(entry);
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::ordered_json out;
  out["vertices"] = vertices;
  out["edges"] = edges;
  return out;
}

inline SimpleGraph from_json(const nlohmann::json& j) {
  try {
    const auto& vertices = j.at("vertices");
    SimpleGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      auto id = vertices[i].at("id").get<std::size_t>();
      if (id != i) throw ParseError("vertex ids must be 0..n-1 in order", i);
      const auto& order = vertices[i].at("element_order");
      if (!order.is_null()) g.set_label(static_cast<Vertex>(i), VertexLabel{std::nullopt, order.get<unsigned>()});
    }
    for (const auto& e : j.at("edges")) {
      auto u = e.at(0).get<Vertex>(), v = e.at(1).get<Vertex>();
      if (u >= g.vertex_count() || v >= g.vertex_count() || u == v)
        throw ParseError("bad edge", 0);
      g.add_edge(u, v);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), 0);
  }
}

inline SimpleGraph from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  return from_json(j);
}

}  // namespace cppg
