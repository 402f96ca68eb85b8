#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/finite_group.hpp"
#include "cppg/fixtures.hpp"
#include "cppg/graph_analysis.hpp"
#include "cppg/group_spec.hpp"
#include "cppg/number_theory.hpp"
#include "cppg/simple_graph.hpp"

namespace cppg {

enum class OrientableClass { Planar, Toroidal, Higher };
enum class NonorientableClass { Planar, Projective, Higher };

inline std::string to_string(OrientableClass c) {
  switch (c) {
    case OrientableClass::Planar: return "planar";
    case OrientableClass::Toroidal: return "toroidal";
    case OrientableClass::Higher: return "genus>1";
  }
  return "?";
}

inline std::string to_string(NonorientableClass c) {
  switch (c) {
    case NonorientableClass::Planar: return "planar";
    case NonorientableClass::Projective: return "projective";
    case NonorientableClass::Higher: return "crosscap>1";
  }
  return "?";
}

struct StructurePrediction {
  std::string description;
  SimpleGraph graph;
};

/// Each field is the predicted value, or empty when no classification result applies.
struct PredictedProperties {
  std::optional<bool> complete;
  std::optional<bool> claw_free;
  std::optional<bool> bipartite;
  std::optional<bool> triangle_free;
  std::optional<std::size_t> components;
  std::optional<std::size_t> isolated;
  std::optional<Distance> diameter;
  std::optional<Distance> girth;
  std::optional<OrientableClass> orientable;
  std::optional<NonorientableClass> nonorientable;
  std::optional<bool> outerplanar;
  std::optional<bool> path;
  std::optional<bool> star;
  std::optional<bool> cycle;
  std::optional<bool> k14_free;
  std::optional<bool> k23_free;
  std::optional<StructurePrediction> structure;
};

namespace detail {

inline void flatten_factors(const GroupSpec& spec, std::vector<GroupSpec>& out) {
  if (const auto* d = std::get_if<DirectProduct>(&spec.family)) {
    for (const auto& f : d->factors) flatten_factors(f, out);
  } else {
    out.push_back(spec);
  }
}

/// Cyclic order if the family is always cyclic (trivial counts as order 1).
inline std::optional<std::uint64_t> cyclic_order_of(const GroupSpec& spec) {
  if (const auto* c = std::get_if<Cyclic>(&spec.family)) return c->n;
  if (const auto* s = std::get_if<Symmetric>(&spec.family); s && s->n <= 2) return s->n == 2 ? 2 : 1;
  if (const auto* a = std::get_if<Alternating>(&spec.family); a && a->n <= 3) return a->n == 3 ? 3 : 1;
  return std::nullopt;
}

inline std::string abelian_name(const std::vector<std::uint64_t>& cyclic_orders) {
  std::map<std::uint64_t, std::vector<unsigned>> by_prime;
  for (auto n : cyclic_orders)
    for (const auto& [p, e] : factorize(n)) by_prime[p].push_back(e);
  std::size_t rank = 0;
  for (auto& [p, es] : by_prime) {
    std::sort(es.rbegin(), es.rend());
    rank = std::max(rank, es.size());
  }
  if (rank == 0) return "Z1";
  std::vector<std::uint64_t> invariants(rank, 1);
  for (const auto& [p, es] : by_prime)
    for (std::size_t i = 0; i < es.size(); ++i) invariants[i] *= ipow(p, es[i]);
  std::string out;
  for (auto d : invariants) out += (out.empty() ? "Z" : "xZ") + std::to_string(d);
  return out;
}

inline std::string single_factor_name(const GroupSpec& spec) {
  struct Visitor {
    std::string operator()(const Cyclic& c) const { return "Z" + std::to_string(c.n); }
    std::string operator()(const Dihedral& d) const { return d.order == 6 ? "S3" : "D" + std::to_string(d.order); }
    std::string operator()(const Dicyclic& q) const { return "Q" + std::to_string(q.order); }
    std::string operator()(const Modular& m) const {
      if (m.p == 2 && m.alpha == 3) return "D8";
      return "M" + std::to_string(m.p) + "^" + std::to_string(m.alpha);
    }
    std::string operator()(const SemidirectZqZp& s) const {
      if (s.p == 2) return s.q == 3 ? "S3" : "D" + std::to_string(2 * s.q);
      return "SD(" + std::to_string(s.q) + "," + std::to_string(s.p) + ")";
    }
    std::string operator()(const Symmetric& s) const { return "S" + std::to_string(s.n); }
    std::string operator()(const Alternating& a) const { return "A" + std::to_string(a.n); }
    std::string operator()(const DirectProduct&) const { return "?"; }
    std::string operator()(const PermutationGenerators&) const { return "?"; }
  };
  return std::visit(Visitor{}, spec.family);
}

}  // namespace detail

/// Isomorphism-type name implied by the construction, e.g. "Z4xZ2", "S3", "D8".
/// Abelian products are written by invariant factors; untagged permutation groups have none.
inline std::optional<std::string> canonical_name(const GroupSpec& spec) {
  if (const auto* p = std::get_if<PermutationGenerators>(&spec.family)) {
    if (!p->tag) return std::nullopt;
    return canonical_name(*p->tag);
  }
  std::vector<GroupSpec> factors;
  detail::flatten_factors(spec, factors);
  std::vector<std::uint64_t> cyclic;
  std::vector<std::string> others;
  for (const auto& f : factors) {
    if (std::holds_alternative<PermutationGenerators>(f.family)) {
      auto inner = canonical_name(f);
      if (!inner) return std::nullopt;
      others.push_back(*inner);
    } else if (auto n = detail::cyclic_order_of(f)) {
      if (*n > 1) cyclic.push_back(*n);
    } else {
      others.push_back(detail::single_factor_name(f));
    }
  }
  if (others.empty()) return detail::abelian_name(cyclic);
  std::string out;
  for (const auto& o : others) out += (out.empty() ? "" : "x") + o;
  if (!cyclic.empty()) out += "x" + detail::abelian_name(cyclic);
  return out;
}

/// Group invariants the classification results are phrased in.
struct GroupFacts {
  std::size_t order = 0;
  bool cyclic = false;
  bool abelian = false;
  std::size_t exponent = 1;
  std::map<std::size_t, std::size_t> histogram;
  std::optional<std::string> name;

  bool elementary_abelian_2() const { return order >= 2 && exponent <= 2; }
  /// Non-cyclic 2-group with a single involution.
  bool generalized_quaternion() const {
    auto it = histogram.find(2);
    return order >= 8 && is_prime_power(order) && order % 2 == 0 && !cyclic && it != histogram.end() &&
           it->second == 1;
  }
  bool exponent_three_3_group() const { return order >= 3 && is_prime_power(order) && order % 3 == 0 && exponent == 3; }
  /// Order 2^n.3 or 2.3^m with n, m > 1 and all non-trivial elements of order 2 or 3.
  bool two_three_class() const {
    auto f = factorize(order);
    if (f.size() != 2 || f[0].prime != 2 || f[1].prime != 3) return false;
    bool shape = (f[1].exponent == 1 && f[0].exponent > 1) || (f[0].exponent == 1 && f[1].exponent > 1);
    if (!shape) return false;
    for (const auto& [d, c] : histogram)
      if (d > 3) return false;
    return true;
  }

  bool cyclic_of(std::size_t n) const { return cyclic && order == n; }
  bool cyclic_prime_power() const { return cyclic && is_prime_power(order); }
  /// Cyclic of order 2p with p an odd prime.
  bool cyclic_2p() const { return cyclic && order % 2 == 0 && order > 4 && is_prime(order / 2); }
  bool cyclic_3p() const { return cyclic && order % 3 == 0 && is_prime(order / 3); }
  /// Cyclic of order p.q^m for distinct primes p, q.
  bool cyclic_pqm() const {
    if (!cyclic) return false;
    auto f = factorize(order);
    return f.size() == 2 && (f[0].exponent == 1 || f[1].exponent == 1);
  }
  bool cyclic_pq() const {
    auto f = factorize(order);
    return cyclic && f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1;
  }

  /// Whether the group is the named one; empty when neither the construction nor the order decides.
  std::optional<bool> is_named(const std::string& target, std::size_t target_order) const {
    if (name) return *name == target;
    if (order != target_order) return false;
    return std::nullopt;
  }
};

inline GroupFacts group_facts(const GroupSpec& spec, const FiniteGroup& g) {
  GroupFacts f;
  f.order = g.order();
  f.histogram = order_histogram(g);
  for (const auto& [d, c] : f.histogram) f.exponent = std::lcm(f.exponent, d);
  f.cyclic = f.histogram.contains(f.order);
  f.abelian = true;
  for (std::uint32_t a = 0; a < g.order() && f.abelian; ++a)
    for (std::uint32_t b = a + 1; b < g.order(); ++b)
      if (g.multiply({a}, {b}) != g.multiply({b}, {a})) {
        f.abelian = false;
        break;
      }
  f.name = canonical_name(spec);
  if (const auto* p = std::get_if<PermutationGenerators>(&spec.family); p && p->tag) {
    FiniteGroup tagged = build_group(*p->tag);
    if (tagged.order() != g.order() || order_histogram(tagged) != f.histogram)
      throw InvalidSpec("permutation group does not match its tag " + to_string(*p->tag));
  }
  return f;
}

namespace detail {

using Tri = std::optional<bool>;

inline Tri tri_or(std::initializer_list<Tri> xs) {
  bool unknown = false;
  for (const auto& x : xs) {
    if (x && *x) return true;
    if (!x) unknown = true;
  }
  if (unknown) return std::nullopt;
  return false;
}

inline SimpleGraph join(const SimpleGraph& a, const SimpleGraph& b) {
  SimpleGraph g = disjoint_union(a, b);
  for (Vertex u = 0; u < a.vertex_count(); ++u)
    for (Vertex v = 0; v < b.vertex_count(); ++v) g.add_edge(u, static_cast<Vertex>(a.vertex_count() + v));
  return g;
}

inline std::optional<StructurePrediction> structure_prediction(const GroupFacts& f) {
  std::size_t n = f.order;
  if (f.cyclic_prime_power())
    return StructurePrediction{"edgeless on " + std::to_string(n - 1) + " vertices", SimpleGraph(n - 1)};
  if (f.cyclic_pq()) {
    auto fac = factorize(n);
    std::size_t p = fac[0].prime, q = fac[1].prime;
    SimpleGraph g = with_isolated_vertices(fixtures::complete_bipartite(p - 1, q - 1), (p - 1) * (q - 1));
    return StructurePrediction{"K_{" + std::to_string(p - 1) + "," + std::to_string(q - 1) + "} plus " +
                                   std::to_string((p - 1) * (q - 1)) + " isolated vertices",
                               g};
  }
  if (f.elementary_abelian_2() && n == 4) return StructurePrediction{"C3", fixtures::cycle(3)};
  if (!f.name) return std::nullopt;
  auto fac = factorize(n);
  // Z_p x Z_p.
  if (fac.size() == 1 && fac[0].exponent == 2) {
    std::size_t p = fac[0].prime;
    if (*f.name == "Z" + std::to_string(p) + "xZ" + std::to_string(p))
      return StructurePrediction{"K(" + std::to_string(p + 1) + "," + std::to_string(p - 1) + ")",
                                 fixtures::equipartite(p + 1, p - 1)};
  }
  // Z_q x| Z_p for primes p | q - 1, including the dihedral groups D_{2q}.
  if (fac.size() == 2 && fac[0].exponent == 1 && fac[1].exponent == 1) {
    std::size_t p = fac[0].prime, q = fac[1].prime;
    bool named = *f.name == "SD(" + std::to_string(q) + "," + std::to_string(p) + ")" ||
                 (p == 2 && (*f.name == "D" + std::to_string(2 * q) || (q == 3 && *f.name == "S3")));
    if (named) {
      SimpleGraph g = join(fixtures::equipartite(q, p - 1), SimpleGraph(q - 1));
      return StructurePrediction{"K(" + std::to_string(q) + "," + std::to_string(p - 1) + ") joined with " +
                                     std::to_string(q - 1) + " independent vertices",
                                 g};
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline PredictedProperties classification_oracle(const GroupFacts& f) {
  using detail::Tri;
  using detail::tri_or;
  PredictedProperties out;
  std::size_t n = f.order;
  bool single_vertex = n == 2;

  bool z2m = f.elementary_abelian_2();
  bool z2z2 = z2m && n == 4;
  bool z2cube = z2m && n == 8;
  bool quaternion = f.generalized_quaternion();
  bool q8 = quaternion && n == 8;
  Tri s3 = f.is_named("S3", 6);
  Tri z3z3 = f.is_named("Z3xZ3", 9);
  Tri z4z2 = f.is_named("Z4xZ2", 8);
  Tri d8 = f.is_named("D8", 8);

  out.complete = z2m;
  out.claw_free = tri_or({f.cyclic_prime_power() || f.cyclic_of(6), s3, z2m, q8, f.exponent_three_3_group(),
                          f.two_three_class()});
  bool c3_free = f.cyclic_prime_power() || f.cyclic_pqm();
  out.bipartite = c3_free;
  out.triangle_free = c3_free;

  if (f.cyclic) {
    out.components = is_prime_power(n) ? n - 1 : euler_phi(n) + 1;
    out.isolated = is_prime_power(n) ? n - 1 : euler_phi(n);
  } else if (quaternion) {
    out.components = 2;
    out.isolated = 1;
  } else {
    out.components = 1;
    out.isolated = 0;
  }

  if (!single_vertex) {
    if (f.cyclic || quaternion)
      out.diameter = Distance::infinite();
    else if (z2m)
      out.diameter = Distance(1);
    else
      out.diameter = Distance(2);
  }

  if (f.cyclic_prime_power() || f.cyclic_2p())
    out.girth = Distance::infinite();
  else if (f.cyclic_pqm())
    out.girth = Distance(4);
  else
    out.girth = Distance(3);

  Tri planar = tri_or({f.cyclic_prime_power(), f.cyclic_of(12), f.cyclic_2p(), f.cyclic_3p(), z2z2, q8, s3});
  Tri toroidal = tri_or({f.cyclic_of(18), f.cyclic_of(20), f.cyclic_of(28), z3z3, z2cube, z4z2, d8});
  Tri projective = tri_or({f.cyclic_of(20), z4z2, d8});
  if (planar && *planar) {
    out.orientable = OrientableClass::Planar;
    out.nonorientable = NonorientableClass::Planar;
  } else if (planar) {
    if (toroidal) out.orientable = *toroidal ? OrientableClass::Toroidal : OrientableClass::Higher;
    if (projective) out.nonorientable = *projective ? NonorientableClass::Projective : NonorientableClass::Higher;
  }

  bool outer = f.cyclic_prime_power() || z2z2 || f.cyclic_2p();
  out.outerplanar = outer;
  out.k23_free = outer;
  out.k14_free = f.cyclic_prime_power() || f.cyclic_of(6) || z2z2;
  out.path = false;
  out.star = false;
  out.cycle = z2z2;
  out.structure = detail::structure_prediction(f);
  return out;
}

inline PredictedProperties classification_oracle(const GroupSpec& spec, const FiniteGroup& g) {
  return classification_oracle(group_facts(spec, g));
}

/// Implications every prediction must satisfy on a graph with `vertices` vertices.
inline std::vector<std::string> consistency_violations(const PredictedProperties& p, std::size_t vertices) {
  std::vector<std::string> bad;
  auto require = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  if (p.complete && *p.complete && vertices >= 3) {
    require(!p.girth || *p.girth == Distance(3), "complete graph must have girth 3");
    require(!p.diameter || *p.diameter == Distance(1), "complete graph must have diameter 1");
    require(!p.claw_free || *p.claw_free, "complete graph is claw-free");
    require(!p.bipartite || !*p.bipartite, "complete graph on 3+ vertices is not bipartite");
  }
  if (p.bipartite && p.triangle_free) require(*p.bipartite == *p.triangle_free, "bipartite and triangle-free disagree");
  if (p.bipartite && *p.bipartite && p.girth) require(*p.girth != Distance(3), "bipartite graph has no triangles");
  if (p.components && *p.components >= 2 && p.diameter)
    require(p.diameter->is_infinite(), "disconnected graph needs infinite diameter");
  if (p.isolated && p.components && vertices >= 2 && *p.isolated > 0)
    require(*p.components >= 2, "isolated vertex implies disconnected");
  if (p.isolated && p.components) require(*p.components >= *p.isolated, "more isolated vertices than components");
  if (p.orientable && p.nonorientable)
    require((*p.orientable == OrientableClass::Planar) == (*p.nonorientable == NonorientableClass::Planar),
            "planarity predicted inconsistently");
  if (p.outerplanar && *p.outerplanar && p.orientable)
    require(*p.orientable == OrientableClass::Planar, "outerplanar graph is planar");
  if (p.outerplanar && p.k23_free) require(*p.outerplanar == *p.k23_free, "outerplanar and K2,3-free disagree");
  if (p.cycle && *p.cycle) {
    require(!p.components || *p.components == 1, "cycle is connected");
    require(!p.girth || *p.girth == Distance(vertices), "cycle girth equals its length");
  }
  if (p.structure) require(p.structure->graph.vertex_count() == vertices, "predicted structure has wrong size");
  return bad;
}

}  // namespace cppg
