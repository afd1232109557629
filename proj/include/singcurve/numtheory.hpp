#pragma once

// Small exact number-theory utilities shared by every module: integer roots,
// deterministic 64-bit primality, prime-power decomposition, the Moebius
// function. All square roots in the bound formulas go through isqrt_u64 so
// floor(2*sqrt(q)) can never be off by one.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "singcurve/errors.hpp"

namespace singcurve {

inline uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

// floor(n^(1/k)) by binary search; exact for all u64.
inline uint64_t iroot_u64(uint64_t n, unsigned k) {
  if (k == 0) throw validation_error("iroot: zeroth root");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt_u64(n);
  auto pow_le = [&](uint64_t base) {
    // true iff base^k <= n, computed without overflow
    uint64_t acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (base != 0 && acc > n / base) return false;
      acc *= base;
    }
    return acc <= n;
  };
  uint64_t lo = 1, hi = 2;
  while (pow_le(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (lo + 1 < hi) {
    uint64_t mid = lo + (hi - lo) / 2;
    if (pow_le(mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

// base^exp if it stays <= limit, nullopt otherwise.
inline std::optional<uint64_t> checked_pow_u64(uint64_t base, unsigned exp, uint64_t limit) {
  uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
    if (acc > limit) return std::nullopt;
  }
  return acc;
}

namespace detail {
inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace detail

// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct PrimePower {
  uint64_t p = 0;
  unsigned k = 0;
};

inline std::optional<PrimePower> try_prime_power(uint64_t q) {
  if (q < 2) return std::nullopt;
  for (unsigned k = 63; k >= 2; --k) {
    uint64_t r = iroot_u64(q, k);
    if (r < 2) continue;
    if (checked_pow_u64(r, k, q) == q && is_prime_u64(r)) return PrimePower{r, k};
  }
  if (is_prime_u64(q)) return PrimePower{q, 1};
  return std::nullopt;
}

inline PrimePower prime_power_decompose(uint64_t q) {
  auto pp = try_prime_power(q);
  if (!pp) throw validation_error("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

inline bool is_perfect_square_u64(uint64_t n) {
  uint64_t s = isqrt_u64(n);
  return s * s == n;
}

inline int mobius(uint64_t n) {
  if (n == 0) throw validation_error("mobius(0)");
  int m = 1;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

inline std::vector<uint64_t> divisors(uint64_t n) {
  if (n == 0) throw validation_error("divisors(0)");
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
  return small;
}

}  // namespace singcurve
