#pragma once

// Brute-force ground truth. Everything in here counts points by exhaustive
// enumeration over small fields and is deliberately independent of the zeta
// machinery it is used to check. Enumeration order is deterministic, so any
// disjoint partition of the loops reproduces the same aggregates.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "singcurve/errors.hpp"
#include "singcurve/ff.hpp"
#include "singcurve/numtheory.hpp"

namespace singcurve {

namespace detail {
inline void require_work(uint64_t q, unsigned exponent, uint64_t work_bound, const char* what) {
  auto w = checked_pow_u64(q, exponent, work_bound);
  if (!w)
    throw bound_error(std::string(what) + ": estimated work " + std::to_string(q) + "^" +
                      std::to_string(exponent) + " exceeds the bound " +
                      std::to_string(work_bound));
}
}  // namespace detail

// Long Weierstrass form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, so
// characteristics 2 and 3 need no special casing.
struct WeierstrassCurve {
  FieldElement a1, a2, a3, a4, a6;

  const FieldCtx& ctx() const { return a1.ctx(); }

  // Standard b-quantity discriminant, valid in every characteristic.
  FieldElement discriminant() const {
    const FieldCtx& F = ctx();
    FieldElement b2 = a1 * a1 + F.scalar(4) * a2;
    FieldElement b4 = F.scalar(2) * a4 + a1 * a3;
    FieldElement b6 = a3 * a3 + F.scalar(4) * a6;
    FieldElement b8 = a1 * a1 * a6 + F.scalar(4) * a2 * a6 - a1 * a3 * a4 + a2 * (a3 * a3) -
                      a4 * a4;
    return -(b2 * b2 * b8) - F.scalar(8) * (b4 * b4 * b4) - F.scalar(27) * (b6 * b6) +
           F.scalar(9) * (b2 * b4 * b6);
  }

  static WeierstrassCurve make(const FieldCtx& F, FieldElement a1, FieldElement a2,
                               FieldElement a3, FieldElement a4, FieldElement a6) {
    WeierstrassCurve c{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)};
    if (&c.ctx() != &F) throw validation_error("field context mismatch");
    if (c.discriminant().is_zero()) throw validation_error("singular Weierstrass curve");
    return c;
  }
};

// Projective points over F_{q^n}: full (x, y) enumeration in the extension
// plus the point at infinity. Coefficients are lifted through the prime
// field tower.
inline uint64_t weierstrass_count(const WeierstrassCurve& c, unsigned n,
                                  uint64_t work_bound = limits::kOracleWorkMax) {
  if (n == 0) throw validation_error("extension degree n must be >= 1");
  const FieldCtx& F = c.ctx();
  if (c.discriminant().is_zero()) throw validation_error("singular Weierstrass curve");
  detail::require_work(F.order(), 2 * n, work_bound, "weierstrass_count");

  const FieldCtx& E = FieldCtx::get(F.p(), F.k() * n);
  SubfieldEmbedding emb(F, E);
  FieldElement a1 = emb.map(c.a1), a2 = emb.map(c.a2), a3 = emb.map(c.a3), a4 = emb.map(c.a4),
               a6 = emb.map(c.a6);

  const uint64_t N = E.order();
  std::vector<FieldElement> elems;
  elems.reserve(N);
  for (uint64_t i = 0; i < N; ++i) elems.push_back(E.element_at(i));
  std::vector<FieldElement> squares;
  squares.reserve(N);
  for (uint64_t i = 0; i < N; ++i) squares.push_back(elems[i] * elems[i]);

  uint64_t count = 1;  // point at infinity
  for (uint64_t xi = 0; xi < N; ++xi) {
    const FieldElement& x = elems[xi];
    FieldElement rhs = ((x + a2) * x + a4) * x + a6;
    FieldElement lin = a1 * x + a3;
    for (uint64_t yi = 0; yi < N; ++yi) {
      if (squares[yi] + lin * elems[yi] == rhs) ++count;
    }
  }
  return count;
}

struct ScanBucket {
  uint64_t curves = 0;
  std::vector<WeierstrassCurve> representatives;  // first few found, scan order
};

struct EllipticScan {
  uint64_t q = 0;
  std::map<uint64_t, ScanBucket> by_count;

  uint64_t max_count() const {
    if (by_count.empty()) throw validation_error("empty scan");
    return by_count.rbegin()->first;
  }
};

// Every smooth long-Weierstrass curve over F_q, counted over F_q. Index
// tables keep the q^5 * q^2 loop cheap.
inline EllipticScan scan_weierstrass(uint64_t q, uint64_t work_bound = limits::kOracleWorkMax,
                                     unsigned reps_per_count = 2) {
  detail::require_work(q, 7, work_bound, "scan_weierstrass");
  const FieldCtx& F = FieldCtx::for_order(q);
  const unsigned Q = static_cast<unsigned>(q);

  std::vector<uint32_t> add(Q * Q), mul(Q * Q);
  for (unsigned i = 0; i < Q; ++i) {
    FieldElement a = F.element_at(i);
    for (unsigned j = 0; j < Q; ++j) {
      FieldElement b = F.element_at(j);
      add[i * Q + j] = static_cast<uint32_t>(F.index_of(a + b));
      mul[i * Q + j] = static_cast<uint32_t>(F.index_of(a * b));
    }
  }
  std::vector<uint32_t> neg(Q);
  for (unsigned i = 0; i < Q; ++i) neg[i] = static_cast<uint32_t>(F.index_of(-F.element_at(i)));
  auto cst = [&](int64_t v) { return static_cast<uint32_t>(F.index_of(F.scalar(v))); };
  const uint32_t k2 = cst(2), k4 = cst(4), k8 = cst(8), k9 = cst(9), k27 = cst(27);
  auto A = [&](uint32_t x, uint32_t y) { return add[x * Q + y]; };
  auto M = [&](uint32_t x, uint32_t y) { return mul[x * Q + y]; };

  EllipticScan scan;
  scan.q = q;
  for (uint32_t a1 = 0; a1 < Q; ++a1)
    for (uint32_t a2 = 0; a2 < Q; ++a2)
      for (uint32_t a3 = 0; a3 < Q; ++a3)
        for (uint32_t a4 = 0; a4 < Q; ++a4)
          for (uint32_t a6 = 0; a6 < Q; ++a6) {
            const uint32_t b2 = A(M(a1, a1), M(k4, a2));
            const uint32_t b4 = A(M(k2, a4), M(a1, a3));
            const uint32_t b6 = A(M(a3, a3), M(k4, a6));
            uint32_t b8 = A(M(M(a1, a1), a6), M(k4, M(a2, a6)));
            b8 = A(b8, neg[M(M(a1, a3), a4)]);
            b8 = A(b8, M(a2, M(a3, a3)));
            b8 = A(b8, neg[M(a4, a4)]);
            uint32_t disc = neg[M(M(b2, b2), b8)];
            disc = A(disc, neg[M(k8, M(b4, M(b4, b4)))]);
            disc = A(disc, neg[M(k27, M(b6, b6))]);
            disc = A(disc, M(k9, M(b2, M(b4, b6))));
            if (disc == 0) continue;

            uint64_t count = 1;
            for (uint32_t x = 0; x < Q; ++x) {
              const uint32_t rhs = A(M(A(M(A(x, a2), x), a4), x), a6);
              const uint32_t lin = A(M(a1, x), a3);
              for (uint32_t y = 0; y < Q; ++y)
                if (A(M(y, y), M(lin, y)) == rhs) ++count;
            }
            ScanBucket& bucket = scan.by_count[count];
            bucket.curves += 1;
            if (bucket.representatives.size() < reps_per_count)
              bucket.representatives.push_back(
                  WeierstrassCurve{F.element_at(a1), F.element_at(a2), F.element_at(a3),
                                   F.element_at(a4), F.element_at(a6)});
          }
  return scan;
}

// Rational points over F_{q^n} of the image of P^1 under
// (s : t) -> (s^{q+1} : s^q t + s t^q : t^{q+1}).
//
// Parameters are enumerated over F_{q^L}, L = lcm(n, 2): every F_{q^n}-point
// of the image comes from a parameter of degree d | n (points the map leaves
// alone) or d = 2 (points it glues), and both kinds live inside F_{q^L}.
// Images are deduplicated on normalized triples (first nonzero coordinate
// scaled to 1) and kept when fixed coordinate-wise by x -> x^{q^n}.
inline uint64_t curve_b_count(uint64_t q, unsigned n,
                              uint64_t work_bound = limits::kOracleWorkMax) {
  if (n == 0) throw validation_error("extension degree n must be >= 1");
  prime_power_decompose(q);
  const unsigned L = static_cast<unsigned>(std::lcm<uint64_t>(n, 2));
  detail::require_work(q, 2 * L, work_bound, "curve_b_count");
  const FieldCtx& F = FieldCtx::for_order(q);
  const FieldCtx& E = FieldCtx::get(F.p(), F.k() * L);
  const uint64_t qn = *checked_pow_u64(q, n, UINT64_MAX);

  auto frobenius_fixed_triple = [&](const std::array<FieldElement, 3>& t) {
    for (const auto& c : t)
      if (c.pow(qn) != c) return false;
    return true;
  };
  auto normalize = [&](std::array<FieldElement, 3> t) {
    for (const auto& c : t) {
      if (!c.is_zero()) {
        FieldElement s = c.inv();
        for (auto& v : t) v = v * s;
        break;
      }
    }
    return t;
  };

  std::set<std::array<uint64_t, 3>> points;
  auto insert = [&](std::array<FieldElement, 3> t) {
    t = normalize(std::move(t));
    if (!frobenius_fixed_triple(t)) return;
    points.insert({E.index_of(t[0]), E.index_of(t[1]), E.index_of(t[2])});
  };

  // (s : 1) for s in F_{q^L}, then (1 : 0)
  for (uint64_t i = 0; i < E.order(); ++i) {
    FieldElement s = E.element_at(i);
    FieldElement sq = s.pow(q);
    insert({sq * s, sq + s, E.one()});
  }
  insert({E.one(), E.zero(), E.zero()});
  return points.size();
}

// Homogeneous plane curve as an explicit monomial list.
struct PlaneCurve {
  unsigned degree = 0;
  // (i, j, k, coefficient) with i + j + k = degree
  std::vector<std::tuple<unsigned, unsigned, unsigned, FieldElement>> monomials;

  const FieldCtx& ctx() const {
    if (monomials.empty()) throw validation_error("plane curve with no monomials");
    return std::get<3>(monomials.front()).ctx();
  }

  static PlaneCurve make(unsigned degree,
                         std::vector<std::tuple<unsigned, unsigned, unsigned, FieldElement>> ms) {
    PlaneCurve c{degree, std::move(ms)};
    bool nonzero = false;
    for (const auto& [i, j, k, coef] : c.monomials) {
      if (i + j + k != degree)
        throw validation_error("monomial degree mismatch: " + std::to_string(i) + "+" +
                               std::to_string(j) + "+" + std::to_string(k) +
                               " != " + std::to_string(degree));
      if (&coef.ctx() != &c.ctx()) throw validation_error("field context mismatch");
      nonzero = nonzero || !coef.is_zero();
    }
    if (!nonzero) throw validation_error("zero polynomial does not define a curve");
    return c;
  }
};

// Projective solutions over F_{q^n}: chart z = 1, then z = 0 with y = 1,
// then the single point (1 : 0 : 0).
inline uint64_t plane_curve_count(const PlaneCurve& c, unsigned n,
                                  uint64_t work_bound = limits::kOracleWorkMax) {
  if (n == 0) throw validation_error("extension degree n must be >= 1");
  const FieldCtx& F = c.ctx();
  detail::require_work(F.order(), 2 * n, work_bound, "plane_curve_count");
  const FieldCtx& E = FieldCtx::get(F.p(), F.k() * n);
  SubfieldEmbedding emb(F, E);

  std::vector<std::tuple<unsigned, unsigned, unsigned, FieldElement>> ms;
  ms.reserve(c.monomials.size());
  for (const auto& [i, j, k, coef] : c.monomials) ms.emplace_back(i, j, k, emb.map(coef));

  const uint64_t N = E.order();
  std::vector<FieldElement> elems;
  elems.reserve(N);
  for (uint64_t i = 0; i < N; ++i) elems.push_back(E.element_at(i));

  auto pow_row = [&](const FieldElement& v) {
    std::vector<FieldElement> row(c.degree + 1, E.one());
    for (unsigned e = 1; e <= c.degree; ++e) row[e] = row[e - 1] * v;
    return row;
  };
  auto vanishes = [&](const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys,
                      const std::vector<FieldElement>& zs) {
    FieldElement acc = E.zero();
    for (const auto& [i, j, k, coef] : ms) acc = acc + coef * xs[i] * ys[j] * zs[k];
    return acc.is_zero();
  };

  const auto one_row = pow_row(E.one());
  const auto zero_row = pow_row(E.zero());
  uint64_t count = 0;
  for (uint64_t xi = 0; xi < N; ++xi) {
    const auto xrow = pow_row(elems[xi]);
    for (uint64_t yi = 0; yi < N; ++yi)
      if (vanishes(xrow, pow_row(elems[yi]), one_row)) ++count;
  }
  for (uint64_t xi = 0; xi < N; ++xi)
    if (vanishes(pow_row(elems[xi]), one_row, zero_row)) ++count;
  if (vanishes(one_row, zero_row, zero_row)) ++count;
  return count;
}

// Closed points of degree d on P^1 over F_q: the q + 1 rational points for
// d = 1, else the monic irreducibles of degree d in one affine chart.
inline uint64_t closed_points_p1_brute(uint64_t q, unsigned d,
                                       uint64_t work_bound = limits::kOracleWorkMax) {
  if (d == 0) throw validation_error("degree must be >= 1");
  prime_power_decompose(q);
  if (d == 1) return q + 1;
  detail::require_work(q, d, work_bound, "closed_points_p1_brute");
  return monic_irreducibles(FieldCtx::for_order(q), d, work_bound).size();
}

}  // namespace singcurve
