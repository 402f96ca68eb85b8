#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/group_spec.hpp"
#include "cppg/number_theory.hpp"

namespace cppg {

/// Dense element index in [0, |G|). The identity is always index 0.
struct ElementId {
  std::uint32_t index = 0;
  auto operator<=>(const ElementId&) const = default;
};

inline constexpr std::size_t kDefaultOrderCap = 2000;
inline constexpr std::size_t kTableCacheLimit = 512;

/// Points are 0-based in one-line form; composition applies the left factor first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {}

  static Permutation identity(std::size_t degree) {
    std::vector<std::uint16_t> v(degree);
    for (std::size_t i = 0; i < degree; ++i) v[i] = static_cast<std::uint16_t>(i);
    return Permutation(std::move(v));
  }

  /// Cycles use 1-based points as written by users.
  static Permutation from_cycles(const CycleWord& word, std::size_t degree) {
    Permutation p = identity(degree);
    // Cycles are composed left to right, matching the product order of the word.
    for (const auto& cycle : word) {
      Permutation c = identity(degree);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        c.images_[cycle[i] - 1] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()] - 1);
      p = p * c;
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  /// (x * y)(i) = y(x(i)).
  friend Permutation operator*(const Permutation& x, const Permutation& y) {
    std::vector<std::uint16_t> r(x.images_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = y.images_[x.images_[i]];
    return Permutation(std::move(r));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

/// Breadth-first product closure of a generating set, identity first.
/// Throws CapExceeded once more than `cap` elements have been produced.
inline std::vector<Permutation> permutation_closure(const std::vector<Permutation>& generators,
                                                    std::size_t degree, std::size_t cap) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{elements[0], 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = elements[head] * g;
      if (seen.contains(next)) continue;
      if (elements.size() >= cap)
        throw CapExceeded("permutation closure exceeds order cap " + std::to_string(cap));
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

class FiniteGroup {
 public:
  using Multiply = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

  FiniteGroup(GroupSpec spec, std::size_t order, Multiply multiply)
      : spec_(std::move(spec)), order_(order), multiply_(std::move(multiply)) {
    if (order_ <= kTableCacheLimit) {
      table_.resize(order_ * order_);
      for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = 0; b < order_; ++b) table_[a * order_ + b] = multiply_(a, b);
    }
  }

  std::size_t order() const { return order_; }
  ElementId identity() const { return ElementId{0}; }
  const GroupSpec& spec() const { return spec_; }

  ElementId multiply(ElementId a, ElementId b) const {
    if (!table_.empty()) return ElementId{table_[a.index * order_ + b.index]};
    return ElementId{multiply_(a.index, b.index)};
  }

  std::vector<ElementId> elements() const {
    std::vector<ElementId> out(order_);
    for (std::uint32_t i = 0; i < order_; ++i) out[i] = ElementId{i};
    return out;
  }

 private:
  GroupSpec spec_;
  std::size_t order_;
  Multiply multiply_;
  std::vector<std::uint32_t> table_;
};

namespace detail {

inline FiniteGroup::Multiply cyclic_multiply(std::uint32_t n) {
  return [n](std::uint32_t a, std::uint32_t b) { return (a + b) % n; };
}

// Elements a^i b^j are stored at index i + rotations * j.
inline FiniteGroup::Multiply dihedral_multiply(std::uint32_t n) {
  return [n](std::uint32_t x, std::uint32_t y) {
    std::uint32_t i = x % n, j = x / n, k = y % n, l = y / n;
    std::uint32_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
    return rot + n * ((j + l) % 2);
  };
}

inline FiniteGroup::Multiply dicyclic_multiply(std::uint32_t half) {
  // half = 2n; a has order 2n and b^2 = a^n.
  std::uint32_t n = half / 2;
  return [half, n](std::uint32_t x, std::uint32_t y) {
    std::uint32_t i = x % half, j = x / half, k = y % half, l = y / half;
    std::uint32_t rot = j == 0 ? (i + k) % half : (i + half - k) % half;
    std::uint32_t bpow = j + l;
    if (bpow == 2) {
      rot = (rot + n) % half;
      bpow = 0;
    }
    return rot + half * bpow;
  };
}

inline FiniteGroup::Multiply modular_multiply(std::uint32_t p, std::uint32_t alpha) {
  std::uint32_t a_order = static_cast<std::uint32_t>(ipow(p, alpha - 1));
  std::uint32_t r = static_cast<std::uint32_t>(ipow(p, alpha - 2) + 1) % a_order;
  std::vector<std::uint32_t> rpow(p);
  for (std::uint32_t j = 0; j < p; ++j) rpow[j] = static_cast<std::uint32_t>(power_mod(r, j, a_order));
  return [a_order, p, rpow](std::uint32_t x, std::uint32_t y) {
    std::uint32_t i = x % a_order, j = x / a_order, k = y % a_order, l = y / a_order;
    std::uint64_t rot = (i + static_cast<std::uint64_t>(k) * rpow[j]) % a_order;
    return static_cast<std::uint32_t>(rot) + a_order * ((j + l) % p);
  };
}

inline FiniteGroup::Multiply semidirect_multiply(std::uint32_t q, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> kpow(p);
  for (std::uint32_t b = 0; b < p; ++b) kpow[b] = static_cast<std::uint32_t>(power_mod(k, b, q));
  return [q, p, kpow](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a = x % q, b = x / q, c = y % q, d = y / q;
    return (a + kpow[b] * c) % q + q * ((b + d) % p);
  };
}

inline FiniteGroup permutation_group(GroupSpec spec, const std::vector<CycleWord>& words,
                                     std::size_t cap) {
  std::size_t degree = 1;
  for (const auto& w : words)
    for (const auto& c : w)
      for (unsigned x : c) degree = std::max<std::size_t>(degree, x);
  std::vector<Permutation> gens;
  for (const auto& w : words) gens.push_back(Permutation::from_cycles(w, degree));
  auto elements = std::make_shared<std::vector<Permutation>>(permutation_closure(gens, degree, cap));
  auto index = std::make_shared<std::unordered_map<Permutation, std::uint32_t, PermutationHash>>();
  for (std::uint32_t i = 0; i < elements->size(); ++i) index->emplace((*elements)[i], i);
  std::size_t order = elements->size();
  return FiniteGroup(std::move(spec), order, [elements, index](std::uint32_t a, std::uint32_t b) {
    return index->at((*elements)[a] * (*elements)[b]);
  });
}

inline std::vector<CycleWord> symmetric_generators(unsigned n) {
  if (n < 2) return {};
  CycleWord transposition{{1, 2}};
  Cycle full(n);
  for (unsigned i = 0; i < n; ++i) full[i] = i + 1;
  return {transposition, CycleWord{full}};
}

inline std::vector<CycleWord> alternating_generators(unsigned n) {
  std::vector<CycleWord> gens;
  for (unsigned k = 3; k <= n; ++k) gens.push_back(CycleWord{{1, 2, k}});
  return gens;
}

}  // namespace detail

/// Builds the group named by `spec`. Throws InvalidSpec or CapExceeded.
inline FiniteGroup build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap) {
  validate(spec);
  std::uint64_t nominal = nominal_order(spec);
  if (nominal > order_cap)
    throw CapExceeded(to_string(spec) + " has order " + std::to_string(nominal) + " above cap " +
                      std::to_string(order_cap));

  struct Visitor {
    const GroupSpec& spec;
    std::size_t cap;

    FiniteGroup operator()(const Cyclic& c) const {
      return FiniteGroup(spec, c.n, detail::cyclic_multiply(c.n));
    }
    FiniteGroup operator()(const Dihedral& d) const {
      return FiniteGroup(spec, d.order, detail::dihedral_multiply(d.order / 2));
    }
    FiniteGroup operator()(const Dicyclic& q) const {
      return FiniteGroup(spec, q.order, detail::dicyclic_multiply(q.order / 2));
    }
    FiniteGroup operator()(const Modular& m) const {
      return FiniteGroup(spec, ipow(m.p, m.alpha), detail::modular_multiply(m.p, m.alpha));
    }
    FiniteGroup operator()(const SemidirectZqZp& s) const {
      return FiniteGroup(spec, std::size_t{s.q} * s.p, detail::semidirect_multiply(s.q, s.p, s.k % s.q));
    }
    FiniteGroup operator()(const Symmetric& s) const {
      return detail::permutation_group(spec, detail::symmetric_generators(s.n), cap);
    }
    FiniteGroup operator()(const Alternating& a) const {
      return detail::permutation_group(spec, detail::alternating_generators(a.n), cap);
    }
    FiniteGroup operator()(const DirectProduct& d) const {
      // Mixed radix: the first factor varies fastest, so the all-identity tuple is index 0.
      auto factors = std::make_shared<std::vector<FiniteGroup>>();
      std::size_t order = 1;
      for (const auto& f : d.factors) {
        factors->push_back(build_group(f, cap));
        order *= factors->back().order();
        if (order > cap) throw CapExceeded("direct product exceeds order cap " + std::to_string(cap));
      }
      return FiniteGroup(spec, order, [factors](std::uint32_t x, std::uint32_t y) {
        std::uint32_t result = 0, radix = 1;
        for (const auto& g : *factors) {
          auto n = static_cast<std::uint32_t>(g.order());
          std::uint32_t prod = g.multiply(ElementId{x % n}, ElementId{y % n}).index;
          result += prod * radix;
          radix *= n;
          x /= n;
          y /= n;
        }
        return result;
      });
    }
    FiniteGroup operator()(const PermutationGenerators& p) const {
      return detail::permutation_group(spec, p.generators, cap);
    }
  };
  return std::visit(Visitor{spec, order_cap}, spec.family);
}

/// Smallest m >= 1 with x^m = e.
inline std::size_t element_order(const FiniteGroup& g, ElementId x) {
  std::size_t m = 1;
  ElementId power = x;
  while (power != g.identity()) {
    power = g.multiply(power, x);
    ++m;
  }
  return m;
}

/// {x^m : m >= 0}, listed as x, x^2, ..., e.
inline std::vector<ElementId> cyclic_subgroup(const FiniteGroup& g, ElementId x) {
  std::vector<ElementId> out{x};
  while (out.back() != g.identity()) out.push_back(g.multiply(out.back(), x));
  return out;
}

/// Element order -> number of elements of that order.
inline std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> hist;
  for (auto x : g.elements()) ++hist[element_order(g, x)];
  return hist;
}

/// Number of distinct cyclic subgroups of order d.
inline std::size_t count_cyclic_subgroups_of_order(const FiniteGroup& g, std::size_t d) {
  auto hist = order_histogram(g);
  auto it = hist.find(d);
  if (it == hist.end()) return 0;
  return it->second / euler_phi(d);
}

inline std::size_t group_exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (const auto& [d, count] : order_histogram(g)) e = std::lcm(e, d);
  return e;
}

}  // namespace cppg
