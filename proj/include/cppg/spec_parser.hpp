#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/group_spec.hpp"
#include "cppg/number_theory.hpp"

namespace cppg {

namespace detail {

// spec    := perm | product
// product := factor ('x' factor)*
// factor  := atom ('^' int)?
// atom    := 'Z' int | 'D' int | 'Q' int | 'M' int ('^' int)? | 'S' int | 'A' int
//          | 'SD' '(' int ',' int ',' int ')' | '(' product ')'
// perm    := 'perm' ('[' spec ']')? ':' gen (';' gen)*
// gen     := '(' ')' | cycle+
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return spec;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_with(std::string_view word) {
    skip_space();
    return text_.substr(pos_).substr(0, word.size()) == word;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned parse_int() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > std::numeric_limits<unsigned>::max()) fail("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  GroupSpec parse_spec() {
    if (starts_with("perm")) return parse_perm();
    return parse_product();
  }

  GroupSpec parse_product() {
    std::vector<GroupSpec> factors;
    append_factor(factors);
    while (peek() == 'x' || peek() == 'X') {
      ++pos_;
      append_factor(factors);
    }
    if (factors.size() == 1) return factors.front();
    return DirectProduct{std::move(factors)};
  }

  void append_factor(std::vector<GroupSpec>& out) {
    GroupSpec atom = parse_atom();
    unsigned times = 1;
    if (peek() == '^') {
      ++pos_;
      times = parse_int();
      if (times < 1) fail("direct power must be at least 1");
    }
    for (unsigned i = 0; i < times; ++i) out.push_back(atom);
  }

  GroupSpec parse_atom() {
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      GroupSpec inner = parse_product();
      expect(')');
      return inner;
    }
    if (starts_with("SD")) {
      pos_ += 2;
      expect('(');
      unsigned q = parse_int();
      expect(',');
      unsigned p = parse_int();
      expect(',');
      unsigned k = parse_int();
      expect(')');
      return SemidirectZqZp{q, p, k};
    }
    if (c == '\0') fail("expected a group");
    ++pos_;
    switch (c) {
      case 'Z': return Cyclic{parse_int()};
      case 'D': return Dihedral{parse_int()};
      case 'Q': return Dicyclic{parse_int()};
      case 'S': return Symmetric{parse_int()};
      case 'A': return Alternating{parse_int()};
      case 'M': {
        unsigned base = parse_int();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          return Modular{base, parse_int()};
        }
        auto f = factorize(base);
        if (f.size() != 1) {
          pos_ = start;
          fail("M needs a prime power order");
        }
        return Modular{static_cast<unsigned>(f[0].prime), f[0].exponent};
      }
      default:
        pos_ = start;
        fail("unknown group family '" + std::string(1, c) + "'");
    }
  }

  GroupSpec parse_perm() {
    pos_ += 4;
    PermutationGenerators perm;
    if (peek() == '[') {
      ++pos_;
      perm.tag = std::make_shared<const GroupSpec>(parse_spec());
      expect(']');
    }
    expect(':');
    perm.generators.push_back(parse_generator());
    while (peek() == ';') {
      ++pos_;
      perm.generators.push_back(parse_generator());
    }
    return perm;
  }

  CycleWord parse_generator() {
    CycleWord word;
    if (peek() != '(') fail("expected '(' to start a cycle");
    while (peek() == '(') {
      ++pos_;
      Cycle cycle;
      while (peek() != ')') {
        if (peek() == ',') ++pos_;
        cycle.push_back(parse_int());
      }
      ++pos_;
      if (!cycle.empty()) word.push_back(std::move(cycle));
    }
    return word;
  }
};

}  // namespace detail

/// Parses the group mini-language, e.g. "Z12", "Z4xZ2", "Z2^3", "M3^3", "SD(7,3,2)",
/// "perm:(1 2 3);(1 2)". Throws ParseError on syntax errors and InvalidSpec on bad parameters.
inline GroupSpec parse_group_spec(std::string_view text) {
  GroupSpec spec = detail::SpecParser(text).parse_all();
  validate(spec);
  return spec;
}

}  // namespace cppg
