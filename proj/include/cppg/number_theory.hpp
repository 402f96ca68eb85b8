#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace cppg {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization in increasing prime order; factorize(1) is empty.
inline std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// True for p^a with a >= 1. One is not a prime power.
inline bool is_prime_power(std::uint64_t n) { return factorize(n).size() == 1; }

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

inline std::size_t distinct_prime_count(std::uint64_t n) { return factorize(n).size(); }

inline std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

/// Multiplicative order of k modulo q, or 0 when gcd(k, q) != 1.
inline std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t q) {
  if (q == 1) return 1;
  if (std::gcd(k, q) != 1) return 0;
  std::uint64_t x = k % q;
  std::uint64_t ord = 1;
  while (x != 1) {
    x = x * k % q;
    ++ord;
  }
  return ord;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Divisors of n in increasing order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace cppg
