#pragma once

// Zeta functions of smooth curves over F_q, represented by the integer
// numerator P(T) = 1 + a_1 T + ... + a_{2g} T^{2g}. Inverse roots are never
// extracted: point counts come from the Newton recurrence over Z,
//
//   S_n = -n a_n - sum_{j=1}^{n-1} a_j S_{n-j}   (a_j = 0 beyond degree)
//   N_n = q^n + 1 - S_n
//
// and the closed-point census from Moebius inversion of N_n = sum_{d|n} d B_d.
// Nonnegative, integral B_d is the plausibility test a numerator must pass;
// it is a necessary condition for coming from an actual curve.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "singcurve/bigint.hpp"
#include "singcurve/errors.hpp"
#include "singcurve/numtheory.hpp"

namespace singcurve {

using BigPoly = std::vector<BigInt>;  // ascending coefficients

inline BigPoly poly_trim(BigPoly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  if (p.empty()) p.push_back(BigInt(0));
  return p;
}

inline unsigned poly_degree(const BigPoly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<unsigned>(i);
  return 0;
}

inline BigPoly poly_mul(const BigPoly& a, const BigPoly& b) {
  BigPoly r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return poly_trim(std::move(r));
}

inline BigPoly poly_pow(const BigPoly& base, uint64_t e) {
  BigPoly r{BigInt(1)};
  BigPoly b = base;
  while (e != 0) {
    if (e & 1) r = poly_mul(r, b);
    if (e >>= 1) b = poly_mul(b, b);
  }
  return r;
}

// (1 + T)^n via the binomial recurrence, exact.
inline BigPoly poly_one_plus_t_pow(uint64_t n) {
  BigPoly r(n + 1, BigInt(0));
  BigInt c(1);
  for (uint64_t i = 0; i <= n; ++i) {
    r[i] = c;
    if (i < n) c = (c * BigInt(n - i)).divexact(static_cast<uint32_t>(i + 1), "binomial");
  }
  return r;
}

// Exact division; requires divisor leading coefficient +-1 and zero remainder.
inline BigPoly poly_divexact(const BigPoly& num0, const BigPoly& den0) {
  BigPoly num = poly_trim(num0), den = poly_trim(den0);
  if (den.size() == 1 && den[0].is_zero()) throw validation_error("polynomial division by zero");
  const BigInt& lead = den.back();
  const bool lead_pos = lead == BigInt(1);
  if (!lead_pos && lead != BigInt(-1))
    throw validation_error("polynomial division needs unit leading coefficient");
  if (num.size() < den.size()) {
    if (poly_degree(num) == 0 && num[0].is_zero()) return BigPoly{BigInt(0)};
    throw validation_error("polynomial division is not exact");
  }
  BigPoly q(num.size() - den.size() + 1, BigInt(0));
  for (size_t i = q.size(); i-- > 0;) {
    BigInt coef = num[i + den.size() - 1];
    if (!lead_pos) coef = -coef;
    q[i] = coef;
    if (coef.is_zero()) continue;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= coef * den[j];
  }
  for (const auto& c : num)
    if (!c.is_zero()) throw validation_error("polynomial division is not exact");
  return poly_trim(std::move(q));
}

// Power sums S_1..S_h of the inverse roots of a polynomial with constant
// term 1, by the Newton recurrence over Z.
inline std::vector<BigInt> power_sums(const BigPoly& numer, unsigned horizon) {
  if (numer.empty() || numer[0] != BigInt(1))
    throw validation_error("numerator must have constant term 1");
  const unsigned d = poly_degree(numer);
  std::vector<BigInt> s(horizon + 1, BigInt(0));
  for (unsigned n = 1; n <= horizon; ++n) {
    BigInt acc = n <= d ? BigInt(-static_cast<long long>(n)) * numer[n] : BigInt(0);
    for (unsigned j = 1; j < n && j <= d; ++j) acc -= numer[j] * s[n - j];
    s[n] = acc;
  }
  s.erase(s.begin());
  return s;
}

// N_1..N_h for the rational function numer / ((1-T)(1-qT)).
inline std::vector<BigInt> point_counts_from_numerator(uint64_t q, const BigPoly& numer,
                                                       unsigned horizon) {
  std::vector<BigInt> s = power_sums(numer, horizon);
  std::vector<BigInt> n(horizon);
  for (unsigned i = 0; i < horizon; ++i) n[i] = BigInt::pow_u64(q, i + 1) + BigInt(1) - s[i];
  return n;
}

// B_1..B_h from N_1..N_h: B_d = (1/d) sum_{e|d} mu(d/e) N_e. Throws if some
// B_d is negative or fractional (the numerator cannot come from a curve).
inline std::vector<BigInt> census_from_counts(std::span<const BigInt> counts) {
  std::vector<BigInt> b(counts.size());
  for (unsigned d = 1; d <= counts.size(); ++d) {
    BigInt acc(0);
    for (uint64_t e : divisors(d)) {
      int mu = mobius(d / e);
      if (mu == 1)
        acc += counts[e - 1];
      else if (mu == -1)
        acc -= counts[e - 1];
    }
    b[d - 1] = acc.divexact(d, "closed-point census");
    if (b[d - 1].is_negative())
      throw validation_error("negative closed-point count B_" + std::to_string(d) + " = " +
                             b[d - 1].str() + "; numerator does not come from a curve");
  }
  return b;
}

class SmoothZeta {
 public:
  // Validates: odd length, a_0 = 1, functional equation a_{2g-i} = q^{g-i} a_i,
  // and B_d >= 0 for d up to the validation horizon.
  static SmoothZeta from_numerator(uint64_t q, BigPoly coeffs, unsigned validation_horizon = 8) {
    prime_power_decompose(q);
    if (coeffs.empty() || coeffs.size() % 2 == 0)
      throw validation_error("numerator must have odd length 2g+1, got " +
                             std::to_string(coeffs.size()));
    if (coeffs[0] != BigInt(1)) throw validation_error("numerator constant term must be 1");
    const unsigned g = static_cast<unsigned>((coeffs.size() - 1) / 2);
    for (unsigned i = 0; i <= g; ++i) {
      if (coeffs[2 * g - i] != BigInt::pow_u64(q, g - i) * coeffs[i])
        throw validation_error("functional equation fails: a_" + std::to_string(2 * g - i) +
                               " != q^" + std::to_string(g - i) + " a_" + std::to_string(i));
    }
    SmoothZeta z;
    z.q_ = q;
    z.g_ = g;
    z.numer_ = std::move(coeffs);
    if (validation_horizon > 0) z.census(validation_horizon);  // throws on negative B_d
    return z;
  }

  static SmoothZeta projective_line(uint64_t q) { return from_numerator(q, {BigInt(1)}); }

  // Genus-1 numerator [1, n1-q-1, q]; n1 must lie in the Hasse range.
  static SmoothZeta elliptic_from_count(uint64_t q, int64_t n1) {
    prime_power_decompose(q);
    if (q > (uint64_t(1) << 62)) throw bound_error("q too large for the Hasse range check");
    const int64_t m = static_cast<int64_t>(isqrt_u64(4 * q));
    const int64_t t = n1 - static_cast<int64_t>(q) - 1;
    if (t < -m || t > m)
      throw validation_error("point count " + std::to_string(n1) + " outside the Hasse range [" +
                             std::to_string(static_cast<int64_t>(q) + 1 - m) + ", " +
                             std::to_string(static_cast<int64_t>(q) + 1 + m) + "]");
    return from_numerator(q, {BigInt(1), BigInt(t), BigInt(static_cast<long long>(q))});
  }

  uint64_t q() const { return q_; }
  unsigned genus() const { return g_; }
  const BigPoly& numerator() const { return numer_; }

  BigInt point_count(unsigned n) const {
    if (n == 0) throw validation_error("point count needs n >= 1");
    return point_counts_from_numerator(q_, numer_, n).back();
  }
  std::vector<BigInt> point_counts(unsigned horizon) const {
    return point_counts_from_numerator(q_, numer_, horizon);
  }
  // B_1..B_horizon
  std::vector<BigInt> census(unsigned horizon) const {
    auto counts = point_counts(horizon);
    return census_from_counts(counts);
  }

 private:
  SmoothZeta() = default;
  uint64_t q_ = 0;
  unsigned g_ = 0;
  BigPoly numer_;
};

}  // namespace singcurve
