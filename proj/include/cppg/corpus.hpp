#pragma once

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cppg/errors.hpp"
#include "cppg/number_theory.hpp"

namespace cppg::corpus {

/// Manifest text: one group spec per line; blank lines and '#' comments are skipped.
inline std::vector<std::string> parse_manifest(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

inline std::vector<std::string> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest " + path);
  return parse_manifest(in);
}

inline std::string product_of_cyclics(const std::vector<std::uint64_t>& orders) {
  std::string out;
  for (auto n : orders) out += (out.empty() ? "Z" : "xZ") + std::to_string(n);
  return out;
}

/// Invariant-factor lists of the non-cyclic abelian groups of the given order.
inline std::vector<std::vector<std::uint64_t>> noncyclic_abelian(std::uint64_t order) {
  // Partitions of each prime's exponent, combined into invariant factors.
  std::function<void(unsigned, unsigned, std::vector<unsigned>&, std::vector<std::vector<unsigned>>&)> partitions =
      [&](unsigned left, unsigned cap, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
        if (left == 0) {
          out.push_back(cur);
          return;
        }
        for (unsigned part = std::min(left, cap); part >= 1; --part) {
          cur.push_back(part);
          partitions(left - part, part, cur, out);
          cur.pop_back();
        }
      };
  std::vector<std::vector<std::uint64_t>> groups{{}};
  for (const auto& [p, e] : factorize(order)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& g : groups)
      for (const auto& part : parts) {
        std::vector<std::uint64_t> inv = g;
        if (inv.size() < part.size()) inv.resize(part.size(), 1);
        for (std::size_t i = 0; i < part.size(); ++i) inv[i] *= ipow(p, part[i]);
        next.push_back(inv);
      }
    groups = std::move(next);
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& g : groups)
    if (g.size() >= 2) out.push_back(g);
  return out;
}

inline const char* kHeisenberg27 = "perm:(1 2 3)(4 5 6)(7 8 9);(2 5 8)(3 9 6)";
inline const char* kGeneralizedDihedral18 = "perm:(1 2 3)(4 5 6)(7 8 9);(1 4 7)(2 5 8)(3 6 9);(2 3)(4 7)(5 9)(6 8)";

/// Cyclic groups Z2..Z200 and the generalized quaternion groups Q8..Q64.
inline std::vector<std::string> formulas() {
  std::vector<std::string> out;
  for (unsigned n = 2; n <= 200; ++n) out.push_back("Z" + std::to_string(n));
  for (unsigned q : {8U, 16U, 32U, 64U}) out.push_back("Q" + std::to_string(q));
  return out;
}

/// Groups whose complement graphs have a closed-form structure.
inline std::vector<std::string> structure() {
  std::vector<std::string> out;
  for (unsigned n = 2; n <= 128; ++n)
    if (is_prime_power(n)) out.push_back("Z" + std::to_string(n));
  for (unsigned p : {2U, 3U, 5U, 7U}) out.push_back("Z" + std::to_string(p) + "xZ" + std::to_string(p));
  for (const char* s : {"SD(3,2,2)", "SD(5,2,4)", "SD(7,2,6)", "SD(7,3,2)", "D6", "D10", "D14", "S3"}) out.push_back(s);
  for (unsigned n : {6U, 10U, 14U, 15U, 21U, 35U}) out.push_back("Z" + std::to_string(n));
  out.push_back("Z2xZ2");
  return out;
}

/// Named groups of order at most 64 plus every cyclic group up to order 100.
inline std::vector<std::string> named() {
  std::vector<std::string> out;
  for (unsigned n = 2; n <= 100; ++n) out.push_back("Z" + std::to_string(n));
  for (unsigned n = 6; n <= 64; n += 2) out.push_back("D" + std::to_string(n));
  for (unsigned n = 8; n <= 64; n += 4) out.push_back("Q" + std::to_string(n));
  for (const char* s : {"M8", "M16", "M32", "M64", "M27"}) out.push_back(s);
  for (unsigned q = 3; q <= 32; ++q) {
    if (!is_prime(q)) continue;
    for (unsigned p = 2; p * q <= 64; ++p) {
      if (!is_prime(p) || (q - 1) % p != 0) continue;
      unsigned k = 2;
      while (multiplicative_order(k, q) != p) ++k;
      out.push_back("SD(" + std::to_string(q) + "," + std::to_string(p) + "," + std::to_string(k) + ")");
    }
  }
  for (const char* s : {"S3", "S4", "A4", "A5"}) out.push_back(s);
  for (std::uint64_t n = 4; n <= 64; ++n)
    for (const auto& inv : noncyclic_abelian(n)) out.push_back(product_of_cyclics(inv));
  for (const char* s : {"S3xZ2", "S3xZ3", "S3xS3", "D8xZ2", "Q8xZ2", "A4xZ2", "S3xZ2xZ2", "D10xZ2", "SD(7,3,2)xZ2"})
    out.push_back(s);
  out.push_back(kHeisenberg27);
  out.push_back(kGeneralizedDihedral18);
  out.push_back("perm[S3]:(1 2 3);(1 2)");
  out.push_back("perm[D8]:(1 2 3 4);(1 3)");
  return out;
}

}  // namespace cppg::corpus
