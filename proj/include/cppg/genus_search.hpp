#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cppg/embedding.hpp"
#include "cppg/errors.hpp"
#include "cppg/graph_analysis.hpp"
#include "cppg/planarity.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg {

enum class Decision { Embeddable, NotEmbeddable, BudgetExhausted };

inline std::string to_string(Decision d) {
  switch (d) {
    case Decision::Embeddable: return "embeddable";
    case Decision::NotEmbeddable: return "not-embeddable";
    case Decision::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

struct SearchBudget {
  std::uint64_t node_limit = 100'000'000;
  double seconds = 600.0;

  /// Defaults, overridden by CPPG_GENUS_BUDGET="nodes[,seconds]" when set.
  static SearchBudget from_environment() {
    SearchBudget b;
    const char* env = std::getenv("CPPG_GENUS_BUDGET");
    if (env == nullptr || *env == '\0') return b;
    std::string text(env);
    auto comma = text.find(',');
    try {
      b.node_limit = std::stoull(text.substr(0, comma));
      if (comma != std::string::npos) b.seconds = std::stod(text.substr(comma + 1));
    } catch (const std::exception&) {
      throw InvalidSpec("CPPG_GENUS_BUDGET must look like nodes[,seconds], got '" + text + "'");
    }
    return b;
  }
};

struct SearchOptions {
  SearchBudget budget = SearchBudget::from_environment();
  /// Short-circuit with the known genus values of complete and complete bipartite subgraphs.
  /// Turning this off leaves only Euler-formula bounds and the search itself.
  bool use_known_bounds = true;
};

struct GenusResult {
  Decision decision = Decision::BudgetExhausted;
  std::optional<EmbeddingScheme> witness;
  std::size_t face_count = 0;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0.0;
  /// How the decision was reached: "trivial", "planarity", "euler-bound", "biclique-bound",
  /// "clique-bound" or "search".
  std::string method;
};

namespace detail {

struct BudgetExhaustedSignal {};

class BudgetTracker {
 public:
  explicit BudgetTracker(SearchBudget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  void tick() {
    ++nodes_;
    if (nodes_ > budget_.node_limit) throw BudgetExhaustedSignal{};
    if ((nodes_ & 1023U) == 0 && elapsed() > budget_.seconds) throw BudgetExhaustedSignal{};
  }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

// Face-by-face construction of a rotation system (and signatures in signed mode).
// Faces are traced while the rotation is built; the local successor links at a vertex are
// chosen the first time a face passes through that corner. Input: connected, min degree >= 2.
class FaceSearch {
 public:
  FaceSearch(const SimpleGraph& g, bool signed_mode, std::size_t euler_target, BudgetTracker& budget)
      : g_(g), n_(g.vertex_count()), m_(g.edge_count()), signed_(signed_mode), euler_target_(euler_target),
        budget_(budget) {
    long need = static_cast<long>(m_) - static_cast<long>(n_) + 2 - static_cast<long>(euler_target);
    target_faces_ = static_cast<std::size_t>(std::max(1L, need));
    Distance gr = girth(g);
    girth_ = gr.is_infinite() ? 2 * m_ : gr.value();

    nbr_.resize(n_);
    local_.assign(n_ * n_, -1);
    eid_.assign(n_ * n_, -1);
    for (Vertex v = 0; v < n_; ++v) {
      nbr_[v] = g.neighbors(v);
      for (std::size_t i = 0; i < nbr_[v].size(); ++i) local_[v * n_ + nbr_[v][i]] = static_cast<int>(i);
    }
    for (auto [u, v] : g.edges()) {
      eid_[u * n_ + v] = eid_[v * n_ + u] = static_cast<int>(edges_.size());
      edges_.emplace_back(u, v);
    }
    succ_.resize(n_);
    pred_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      succ_[v].assign(nbr_[v].size(), -1);
      pred_[v].assign(nbr_[v].size(), -1);
    }
    sign_.assign(m_, signed_ ? 0 : 1);
    used_.assign(4 * m_, false);

    root_ = 0;
    for (Vertex v = 1; v < n_; ++v)
      if (g.degree(v) > g.degree(root_)) root_ = v;
    // Spanning tree edges are fixed to +1.
    std::vector<bool> seen(n_, false);
    std::vector<Vertex> queue{root_};
    seen[root_] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : nbr_[queue[h]])
        if (!seen[w]) {
          seen[w] = true;
          sign_[static_cast<std::size_t>(eid(queue[h], w))] = 1;
          queue.push_back(w);
        }
  }

  std::optional<EmbeddingScheme> run() {
    if (m_ == 0) return EmbeddingScheme{std::vector<std::vector<Vertex>>(n_), {}};
    std::size_t start = state(root_, nbr_[root_][0], 1);
    mark(start, true);
    bool found = trace(start, start, 1);
    return found ? witness_ : std::nullopt;
  }

 private:
  const SimpleGraph& g_;
  std::size_t n_, m_;
  bool signed_;
  std::size_t euler_target_;
  BudgetTracker& budget_;
  std::size_t target_faces_ = 1;
  std::size_t girth_ = 3;

  std::vector<std::vector<Vertex>> nbr_;
  std::vector<int> local_, eid_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> succ_, pred_;
  std::vector<int> linked_ = std::vector<int>(n_, 0);
  std::vector<int> sign_;
  std::vector<bool> used_;
  std::size_t used_count_ = 0;
  std::size_t closed_ = 0;
  Vertex root_ = 0;
  std::optional<EmbeddingScheme> witness_;

  int eid(Vertex u, Vertex v) const { return eid_[u * n_ + v]; }
  int local(Vertex v, Vertex w) const { return local_[v * n_ + w]; }

  // State (tail -> head, eps) encoded as ((edge * 2 + dir) * 2 + neg).
  std::size_t state(Vertex tail, Vertex head, int eps) const {
    auto e = static_cast<std::size_t>(eid(tail, head));
    std::size_t dir = tail == edges_[e].first ? 0 : 1;
    return (e * 2 + dir) * 2 + (eps < 0 ? 1 : 0);
  }
  Vertex tail(std::size_t s) const { return ((s / 2) % 2 == 0) ? edges_[s / 4].first : edges_[s / 4].second; }
  Vertex head(std::size_t s) const { return ((s / 2) % 2 == 0) ? edges_[s / 4].second : edges_[s / 4].first; }
  int eps(std::size_t s) const { return s % 2 == 0 ? 1 : -1; }
  std::size_t mirror(std::size_t s) const {
    return state(head(s), tail(s), -eps(s) * sign_[s / 4]);
  }

  void mark(std::size_t s, bool on) {
    std::size_t r = mirror(s);
    used_[s] = on;
    used_[r] = on;
    if (on)
      used_count_ += 2;
    else
      used_count_ -= 2;
  }

  // Would linking from -> to in the rotation at w close a cycle that omits some neighbour?
  bool closes_early(Vertex w, int from, int to) const {
    int x = to;
    while (succ_[w][static_cast<std::size_t>(x)] >= 0 && x != from) x = succ_[w][static_cast<std::size_t>(x)];
    if (x != from) return false;
    return linked_[w] + 1 != static_cast<int>(nbr_[w].size());
  }

  bool root_cut_ok(Vertex w) const {
    if (w != root_ || nbr_[w].size() < 3) return true;
    int s = succ_[w][0], p = pred_[w][0];
    return s < 0 || p < 0 || s < p;
  }

  void link(Vertex w, int from, int to) {
    succ_[w][static_cast<std::size_t>(from)] = to;
    pred_[w][static_cast<std::size_t>(to)] = from;
    ++linked_[w];
  }
  void unlink(Vertex w, int from, int to) {
    succ_[w][static_cast<std::size_t>(from)] = -1;
    pred_[w][static_cast<std::size_t>(to)] = -1;
    --linked_[w];
  }

  // Optimistic final face count with an open face of `open_len` darts (0 when none is open).
  bool bound_ok(std::size_t open_len) const {
    std::size_t darts_used = used_count_ / 2;
    std::size_t remaining = 2 * m_ - darts_used;
    std::size_t best = closed_;
    if (open_len > 0) {
      best += 1;
      std::size_t still = girth_ > open_len ? girth_ - open_len : 0;
      if (still > remaining) return false;
      remaining -= still;
    }
    best += remaining / girth_;
    return best >= target_faces_;
  }

  // Options for the next neighbour (local index at w) after arriving at w from v with orientation e.
  std::vector<int> options(Vertex v, Vertex w, int e) const {
    int i = local(w, v);
    std::vector<int> out;
    if (e > 0) {
      int j = succ_[w][static_cast<std::size_t>(i)];
      if (j >= 0) return {j};
      for (int c = 0; c < static_cast<int>(nbr_[w].size()); ++c)
        if (pred_[w][static_cast<std::size_t>(c)] < 0 && !closes_early(w, i, c)) out.push_back(c);
    } else {
      int j = pred_[w][static_cast<std::size_t>(i)];
      if (j >= 0) return {j};
      for (int c = 0; c < static_cast<int>(nbr_[w].size()); ++c)
        if (succ_[w][static_cast<std::size_t>(c)] < 0 && !closes_early(w, c, i)) out.push_back(c);
    }
    return out;
  }

  bool trace(std::size_t start, std::size_t cur, std::size_t len) {
    budget_.tick();
    Vertex v = tail(cur), w = head(cur);
    int e = eps(cur) * sign_[cur / 4];
    int i = local(w, v);
    bool forced = e > 0 ? succ_[w][static_cast<std::size_t>(i)] >= 0 : pred_[w][static_cast<std::size_t>(i)] >= 0;
    for (int j : options(v, w, e)) {
      if (!forced) {
        if (e > 0)
          link(w, i, j);
        else
          link(w, j, i);
        if (!root_cut_ok(w)) {
          if (e > 0)
            unlink(w, i, j);
          else
            unlink(w, j, i);
          continue;
        }
      }
      Vertex y = nbr_[w][static_cast<std::size_t>(j)];
      auto edge = static_cast<std::size_t>(eid(w, y));
      bool decide = sign_[edge] == 0;
      for (int sg : {1, -1}) {
        if (!decide && sg != 1) break;
        if (decide) sign_[edge] = sg;
        std::size_t next = state(w, y, e);
        bool found = false;
        if (next == start) {
          ++closed_;
          if (bound_ok(0)) found = open_next_face();
          --closed_;
        } else if (!used_[next]) {
          mark(next, true);
          if (bound_ok(len + 1)) found = trace(start, next, len + 1);
          mark(next, false);
        }
        if (decide) sign_[edge] = 0;
        if (found) return true;
      }
      if (!forced) {
        if (e > 0)
          unlink(w, i, j);
        else
          unlink(w, j, i);
      }
    }
    return false;
  }

  // Branching width of continuing from state s; signs still open count double.
  std::size_t width(std::size_t s) const {
    Vertex v = tail(s), w = head(s);
    std::size_t factor = sign_[s / 4] == 0 ? 2 : 1;
    int sg = sign_[s / 4] == 0 ? 1 : sign_[s / 4];
    return factor * options(v, w, eps(s) * sg).size();
  }

  bool open_next_face() {
    if (used_count_ == 4 * m_) return accept();
    std::size_t best = 0;
    std::size_t best_width = static_cast<std::size_t>(-1);
    for (std::size_t s = 0; s < 4 * m_; ++s) {
      if (used_[s]) continue;
      std::size_t wdt = width(s);
      if (wdt < best_width) {
        best_width = wdt;
        best = s;
        if (wdt <= 1) break;
      }
    }
    if (best_width == 0) return false;
    auto edge = best / 4;
    bool decide = sign_[edge] == 0;
    for (int sg : {1, -1}) {
      if (!decide && sg != 1) break;
      if (decide) sign_[edge] = sg;
      bool found = false;
      if (!used_[best]) {
        mark(best, true);
        found = bound_ok(1) && trace(best, best, 1);
        mark(best, false);
      }
      if (decide) sign_[edge] = 0;
      if (found) return true;
    }
    return false;
  }

  bool accept() {
    if (closed_ < target_faces_) return false;
    std::size_t eg = 2 - n_ + m_ - closed_;
    bool nonorientable = false;
    for (int sg : sign_) nonorientable |= sg < 0;
    // An orientable embedding of Euler genus exactly k is not a k-crosscap embedding.
    if (signed_ && !nonorientable && eg == euler_target_ && eg > 0) return false;
    EmbeddingScheme scheme;
    scheme.rotation.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      int x = 0;
      do {
        scheme.rotation[v].push_back(nbr_[v][static_cast<std::size_t>(x)]);
        x = succ_[v][static_cast<std::size_t>(x)];
      } while (x != 0);
    }
    for (std::size_t e = 0; e < m_; ++e)
      if (sign_[e] < 0) scheme.negative.insert(edges_[e]);
    witness_ = std::move(scheme);
    return true;
  }
};

// Rotation system of a planar graph from the Boyer-Myrvold embedding.
inline EmbeddingScheme planar_scheme(const SimpleGraph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  BoostGraph bg(g.vertex_count());
  int index = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, index++, bg);
  std::vector<std::vector<EdgeDesc>> storage(g.vertex_count());
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = embedding))
    throw Error("planar_scheme called on a non-planar graph");
  EmbeddingScheme scheme;
  scheme.rotation.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const auto& e : storage[v]) {
      auto s = static_cast<Vertex>(boost::source(e, bg));
      auto t = static_cast<Vertex>(boost::target(e, bg));
      scheme.rotation[v].push_back(s == v ? t : s);
    }
  return scheme;
}

struct Reduced {
  SimpleGraph core;
  std::vector<Vertex> original;                 // core vertex -> vertex of the component
  std::vector<std::pair<Vertex, Vertex>> leaves;  // (leaf, attachment) in removal order
};

// Repeatedly removes degree-1 vertices. Leaves do not change any genus.
inline Reduced strip_leaves(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  SimpleGraph work = g;
  std::vector<bool> gone(n, false);
  Reduced r;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v] || work.degree(v) != 1) continue;
      Vertex w = work.neighbors(v).front();
      r.leaves.emplace_back(v, w);
      work.remove_edge(v, w);
      gone[v] = true;
      changed = true;
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) r.original.push_back(v);
  if (r.original.empty()) r.original.push_back(r.leaves.back().second);
  r.core = work.induced(r.original);
  return r;
}

struct ComponentOutcome {
  Decision decision = Decision::BudgetExhausted;
  std::optional<EmbeddingScheme> witness;  // on the component's own numbering
  std::string method;
};

// Decides whether a connected graph embeds with Euler genus <= eg, in orientable mode
// (eg even) or in a k-crosscap surface (signed mode).
inline ComponentOutcome decide_component(const SimpleGraph& comp, bool signed_mode, std::size_t eg,
                                         const SearchOptions& options, BudgetTracker& budget) {
  ComponentOutcome out;
  Reduced red = strip_leaves(comp);
  const SimpleGraph& core = red.core;
  std::size_t n = core.vertex_count(), m = core.edge_count();

  auto lift = [&](const EmbeddingScheme& s) {
    EmbeddingScheme full;
    full.rotation.resize(comp.vertex_count());
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : s.rotation[v]) full.rotation[red.original[v]].push_back(red.original[w]);
    for (auto [u, v] : s.negative) {
      Vertex a = red.original[u], b = red.original[v];
      full.negative.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto it = red.leaves.rbegin(); it != red.leaves.rend(); ++it) {
      full.rotation[it->second].push_back(it->first);
      full.rotation[it->first].push_back(it->second);
    }
    return full;
  };

  if (m == 0) {
    out.decision = Decision::Embeddable;
    out.witness = lift(EmbeddingScheme{std::vector<std::vector<Vertex>>(n), {}});
    out.method = "trivial";
    return out;
  }
  if (is_planar(core)) {
    out.decision = Decision::Embeddable;
    out.witness = lift(planar_scheme(core));
    out.method = "planarity";
    return out;
  }
  auto refuse = [&](const char* method) {
    out.decision = Decision::NotEmbeddable;
    out.method = method;
    return out;
  };
  if (eg == 0) return refuse("planarity");

  Distance gr = girth(core);
  std::size_t girth_value = gr.is_infinite() ? 2 * m : gr.value();
  long need = static_cast<long>(m) - static_cast<long>(n) + 2 - static_cast<long>(eg);
  if (need > static_cast<long>(2 * m / girth_value)) return refuse("euler-bound");

  if (options.use_known_bounds) {
    // Smallest K_{a,b} and K_t whose genus exceeds the budget.
    std::vector<std::pair<std::size_t, std::size_t>> bicliques;
    std::size_t clique = 0;
    if (!signed_mode) {
      if (eg == 2) bicliques = {{3, 7}, {4, 5}}, clique = 8;
      if (eg == 4) bicliques = {{3, 11}, {4, 7}, {5, 5}}, clique = 9;
    } else {
      if (eg == 1) bicliques = {{3, 5}, {4, 4}}, clique = 7;
      if (eg == 2) bicliques = {{3, 7}, {4, 5}}, clique = 8;
    }
    for (auto [a, b] : bicliques)
      if (contains_complete_bipartite_subgraph(core, a, b)) return refuse("biclique-bound");
    if (clique > 0 && contains_clique(core, clique)) return refuse("clique-bound");
  }

  FaceSearch search(core, signed_mode, eg, budget);
  auto found = search.run();
  out.method = "search";
  if (found) {
    out.decision = Decision::Embeddable;
    out.witness = lift(*found);
  } else {
    out.decision = Decision::NotEmbeddable;
  }
  return out;
}

struct SurfaceQuery {
  bool signed_mode = false;
  std::size_t euler_genus = 0;
};

// Smallest Euler genus (step 2 orientable, 1 signed) not above `cap` at which the component embeds.
// Returns nullopt when it needs more than cap; throws BudgetExhaustedSignal when undecided.
inline std::optional<std::pair<std::size_t, ComponentOutcome>> minimal_component_genus(
    const SimpleGraph& comp, bool signed_mode, std::size_t cap, const SearchOptions& options,
    BudgetTracker& budget, std::string& method) {
  std::size_t step = signed_mode ? 1 : 2;
  for (std::size_t eg = 0; eg <= cap; eg += step) {
    ComponentOutcome o = decide_component(comp, signed_mode && eg > 0, eg, options, budget);
    method = o.method;
    if (o.decision == Decision::Embeddable) return std::make_pair(eg, std::move(o));
  }
  return std::nullopt;
}

inline GenusResult genus_query(const SimpleGraph& g, bool signed_mode, std::size_t cap,
                               const SearchOptions& options) {
  BudgetTracker budget(options.budget);
  GenusResult result;
  std::set<std::string> methods;
  auto finish = [&](Decision d) {
    result.decision = d;
    result.nodes = budget.nodes();
    result.elapsed_seconds = budget.elapsed();
    std::string joined;
    for (const auto& m : methods) joined += (joined.empty() ? "" : "+") + m;
    result.method = joined.empty() ? "trivial" : joined;
    return result;
  };

  EmbeddingScheme full;
  full.rotation.resize(g.vertex_count());
  std::size_t total = 0;
  try {
    for (const auto& comp_vertices : components(g)) {
      if (comp_vertices.size() == 1) continue;
      SimpleGraph comp = g.induced(comp_vertices);
      std::string method;
      auto found = minimal_component_genus(comp, signed_mode, cap - total, options, budget, method);
      methods.insert(method);
      if (!found) return finish(Decision::NotEmbeddable);
      total += found->first;
      const EmbeddingScheme& w = *found->second.witness;
      for (Vertex v = 0; v < comp.vertex_count(); ++v)
        for (Vertex x : w.rotation[v]) full.rotation[comp_vertices[v]].push_back(comp_vertices[x]);
      for (auto [a, b] : w.negative) {
        Vertex u = comp_vertices[a], v = comp_vertices[b];
        full.negative.insert({std::min(u, v), std::max(u, v)});
      }
    }
  } catch (const BudgetExhaustedSignal&) {
    methods.insert("search");
    return finish(Decision::BudgetExhausted);
  }
  FaceTrace trace = face_trace(g, full);
  bool fits = trace.euler_genus <= cap &&
              (!signed_mode || !trace.orientable || trace.euler_genus < cap || trace.euler_genus == 0);
  if (!fits) throw Error("witness does not verify");
  result.witness = std::move(full);
  result.face_count = trace.face_count();
  return finish(Decision::Embeddable);
}

}  // namespace detail

/// Decides whether g embeds in the orientable surface of genus gmax (0, 1 or 2).
/// Components are decided separately and their genera added.
inline GenusResult orientable_genus_at_most(const SimpleGraph& g, unsigned gmax, SearchOptions options = {}) {
  if (gmax > 2) throw BoundExceeded("orientable genus queries are limited to gmax <= 2");
  return detail::genus_query(g, false, 2 * gmax, options);
}

/// Decides whether g embeds in the non-orientable surface with kmax crosscaps (1 or 2).
/// Components are decided separately and their non-orientable genera added.
inline GenusResult euler_genus_at_most(const SimpleGraph& g, unsigned kmax, SearchOptions options = {}) {
  if (kmax < 1 || kmax > 2) throw BoundExceeded("crosscap queries are limited to kmax in {1, 2}");
  return detail::genus_query(g, true, kmax, options);
}

}  // namespace cppg
