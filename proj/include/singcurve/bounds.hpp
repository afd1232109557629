#pragma once

// Closed-form bounds for curves over F_q of geometric genus g and arithmetic
// genus pi, with m = floor(2 sqrt(q)):
//
//   (A)  #X(F_q) <= q + 1 + g m + (pi - g)        for every curve
//   (B)  #X(F_q) <= N_q(g) + (pi - g)             via the normalization
//
// plus the exact ranges in which (B) is attained for g in {0, 1}, the cap on
// pi for curves attaining (A), and the zeta function forced by maximality.
// Every division in these formulas is checked to be exact; N_q(g) for g >= 2
// is never guessed and must be supplied externally.

#include <cstdint>
#include <optional>
#include <string>

#include "singcurve/bigint.hpp"
#include "singcurve/errors.hpp"
#include "singcurve/numtheory.hpp"
#include "singcurve/zeta.hpp"

namespace singcurve {

// m = floor(2 sqrt(q)), exact via isqrt(4q).
inline uint64_t weil_m(uint64_t q) {
  prime_power_decompose(q);
  if (q > (uint64_t(1) << 62)) throw bound_error("q too large for weil_m");
  return isqrt_u64(4 * q);
}

struct GenusProfile {
  uint64_t q = 0;
  uint64_t g = 0;
  uint64_t pi = 0;

  static GenusProfile make(uint64_t q, uint64_t g, uint64_t pi) {
    prime_power_decompose(q);
    if (pi < g)
      throw validation_error("arithmetic genus " + std::to_string(pi) +
                             " below geometric genus " + std::to_string(g));
    return GenusProfile{q, g, pi};
  }
};

inline BigInt bound_A(const GenusProfile& pr) {
  return BigInt(pr.q) + BigInt(1) + BigInt(pr.g) * BigInt(weil_m(pr.q)) + BigInt(pr.pi - pr.g);
}

// True iff N_q(1) = q + 1 + m: p does not divide m, or q is a square, or q = p.
inline bool genus1_count_is_full(uint64_t q) {
  PrimePower pp = prime_power_decompose(q);
  uint64_t m = weil_m(q);
  return (m % pp.p != 0) || is_perfect_square_u64(q) || pp.k == 1;
}

// N_q(g) for g in {0, 1}; unknown (and an error) beyond that.
inline uint64_t nq(uint64_t q, uint64_t g) {
  prime_power_decompose(q);
  if (g == 0) return q + 1;
  if (g == 1) return genus1_count_is_full(q) ? q + 1 + weil_m(q) : q + weil_m(q);
  throw validation_error("N_q(g) is unknown for g = " + std::to_string(g) +
                         "; supply it externally");
}

inline std::optional<BigInt> try_nq(uint64_t q, uint64_t g) {
  if (g > 1) return std::nullopt;
  return BigInt(nq(q, g));
}

// Largest arithmetic genus for which bound (B) is attained, g in {0, 1}.
inline BigInt delta_optimal_pi_max(uint64_t q, uint64_t g) {
  prime_power_decompose(q);
  const BigInt qq(q);
  if (g == 0) return (qq * qq - qq).divexact(2, "delta-optimal pi cap, g = 0");
  if (g == 1) {
    const BigInt m(weil_m(q));
    BigInt numer = qq * qq + qq;
    if (genus1_count_is_full(q))
      numer -= m * (m + BigInt(1));
    else
      numer += m * (BigInt(1) - m);
    return BigInt(1) + numer.divexact(2, "delta-optimal pi cap, g = 1");
  }
  throw validation_error("delta-optimal range needs B_2 of an optimal genus-" + std::to_string(g) +
                         " curve; unknown for g >= 2");
}

inline std::optional<BigInt> try_delta_optimal_pi_max(uint64_t q, uint64_t g) {
  if (g > 1) return std::nullopt;
  return delta_optimal_pi_max(q, g);
}

// Cap on pi for curves attaining bound (A):
// pi <= g + (q^2 + (2g-1) q - g m (m+1)) / 2. May be below g (empty range).
inline BigInt maximal_pi_max(uint64_t q, uint64_t g) {
  prime_power_decompose(q);
  const BigInt qq(q), gg(g), m(weil_m(q));
  BigInt numer = qq * qq + (BigInt(2) * gg - BigInt(1)) * qq - gg * m * (m + BigInt(1));
  return gg + numer.divexact(2, "maximal pi cap");
}

// Ihara: a smooth maximal curve over a square q has g <= (q - sqrt(q)) / 2.
inline bool ihara_genus_check(uint64_t q, uint64_t g) {
  prime_power_decompose(q);
  if (!is_perfect_square_u64(q))
    throw validation_error("Ihara genus check needs a square q, got " + std::to_string(q));
  uint64_t s = isqrt_u64(q);
  return BigInt(g) <= BigInt(q - s).divexact(2, "Ihara genus cap");
}

// Zeta function forced on a maximal curve:
// numerator (1 + mT + qT^2)^g (1 + T)^{pi-g} over (1-T)(1-qT).
struct MaximalZeta {
  uint64_t q = 0;
  uint64_t g = 0;
  uint64_t pi = 0;
  BigPoly numer;
};

inline MaximalZeta maximal_zeta(uint64_t q, uint64_t g, uint64_t pi,
                                uint64_t expansion_cap = 4096) {
  prime_power_decompose(q);
  if (pi < g) throw validation_error("pi < g");
  if (is_perfect_square_u64(q) && !ihara_genus_check(q, g))
    throw validation_error("no maximal curve: genus " + std::to_string(g) +
                           " exceeds the Ihara cap for q = " + std::to_string(q));
  if (BigInt(pi) > maximal_pi_max(q, g))
    throw validation_error("pi = " + std::to_string(pi) + " exceeds the maximal-curve cap " +
                           maximal_pi_max(q, g).str());
  if (pi - g > expansion_cap)
    throw bound_error("numerator expansion of degree " + std::to_string(2 * g + pi - g) +
                      " exceeds the cap " + std::to_string(expansion_cap));
  const uint64_t m = weil_m(q);
  BigPoly quad{BigInt(1), BigInt(m), BigInt(q)};
  BigPoly numer = poly_mul(poly_pow(quad, g), poly_one_plus_t_pow(pi - g));
  return MaximalZeta{q, g, pi, std::move(numer)};
}

}  // namespace singcurve
