#pragma once

// Command cores behind the CLI verbs. Each returns a plain result struct so
// the same computation can be driven from the tool, the tests, and the
// acceptance suite; formatting stays in the front end.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singcurve/bounds.hpp"
#include "singcurve/errors.hpp"
#include "singcurve/gluing.hpp"
#include "singcurve/oracle.hpp"
#include "singcurve/zeta.hpp"

namespace singcurve {

struct BaseDescriptor {
  enum class Kind { p1, zeta_numerator, elliptic_from_count };
  Kind kind = Kind::p1;
  BigPoly coeffs;   // zeta_numerator
  int64_t n1 = 0;   // elliptic_from_count
};

inline SmoothZeta resolve_base(uint64_t q, const BaseDescriptor& base) {
  switch (base.kind) {
    case BaseDescriptor::Kind::p1:
      return SmoothZeta::projective_line(q);
    case BaseDescriptor::Kind::zeta_numerator:
      return SmoothZeta::from_numerator(q, base.coeffs);
    case BaseDescriptor::Kind::elliptic_from_count:
      return SmoothZeta::elliptic_from_count(q, base.n1);
  }
  throw validation_error("unknown base descriptor");
}

struct GlueSpec {
  uint64_t q = 0;
  BaseDescriptor base;
  std::vector<SingularityPrescription> singularities;
  unsigned horizon = 6;
  std::optional<BigInt> external_nqg;
};

inline CurveReport run_glue(const GlueSpec& spec) {
  SingularCurveModel m{resolve_base(spec.q, spec.base), spec.singularities};
  ValidatedModel vm = ValidatedModel::validate(std::move(m));
  return report(vm, spec.horizon, spec.external_nqg);
}

// ---------------------------------------------------------------------------

struct BoundsReport {
  uint64_t q = 0, g = 0, pi = 0;
  uint64_t m = 0;
  BigInt bound_a;
  std::optional<BigInt> nqg;                   // known for g <= 1 or supplied
  std::optional<BigInt> bound_b;               // nqg + pi - g
  std::optional<BigInt> delta_optimal_pi_max;  // known for g <= 1
  BigInt maximal_pi_cap;
  TriState bound_b_attainable = TriState::unknown;
  std::optional<bool> ihara_ok;  // square q only
};

inline BoundsReport cmd_bounds(uint64_t q, uint64_t g, uint64_t pi,
                               std::optional<BigInt> external_nqg = std::nullopt) {
  GenusProfile pr = GenusProfile::make(q, g, pi);
  BoundsReport r;
  r.q = q;
  r.g = g;
  r.pi = pi;
  r.m = weil_m(q);
  r.bound_a = bound_A(pr);
  r.nqg = external_nqg ? external_nqg : try_nq(q, g);
  if (r.nqg) {
    r.bound_b = *r.nqg + BigInt(pi - g);
    if (*r.bound_b > r.bound_a)
      throw validation_error("supplied N_q(g) = " + r.nqg->str() + " exceeds the Weil bound " +
                             (r.bound_a - BigInt(pi - g)).str());
  }
  r.delta_optimal_pi_max = try_delta_optimal_pi_max(q, g);
  if (r.delta_optimal_pi_max)
    r.bound_b_attainable =
        BigInt(pi) <= *r.delta_optimal_pi_max ? TriState::yes : TriState::no;
  r.maximal_pi_cap = maximal_pi_max(q, g);
  if (is_perfect_square_u64(q)) r.ihara_ok = ihara_genus_check(q, g);
  return r;
}

// ---------------------------------------------------------------------------

struct VerifyBResult {
  uint64_t q = 0;
  unsigned n = 0;
  uint64_t brute = 0;   // image enumeration
  BigInt predicted;     // P^1 glued at every degree-2 point
  bool pass = false;
};

inline VerifyBResult cmd_verify_b(uint64_t q, unsigned n,
                                  uint64_t work_bound = limits::kOracleWorkMax) {
  VerifyBResult r;
  r.q = q;
  r.n = n;
  r.brute = curve_b_count(q, n, work_bound);
  SmoothZeta p1 = SmoothZeta::projective_line(q);
  uint64_t b2 = ((q * q - q) / 2);
  ValidatedModel model = construct_principal(p1, {{2u, b2}});
  r.predicted = model.rational_points(n);
  r.pass = BigInt(r.brute) == r.predicted;
  return r;
}

// ---------------------------------------------------------------------------

struct ScanEllipticReport {
  uint64_t q = 0;
  std::map<uint64_t, uint64_t> histogram;  // N_1 -> number of smooth curves
  uint64_t observed_max = 0;
  uint64_t expected_max = 0;  // nq(q, 1)
  bool pass = false;
  uint64_t optimal_n2 = 0;  // brute count of an optimal curve over F_{q^2}
  BigInt optimal_b2;        // (N_2 - N_1) / 2 of that curve
};

inline ScanEllipticReport cmd_scan_elliptic(uint64_t q,
                                            uint64_t work_bound = limits::kOracleWorkMax) {
  EllipticScan scan = scan_weierstrass(q, work_bound);
  ScanEllipticReport r;
  r.q = q;
  for (const auto& [n1, bucket] : scan.by_count) r.histogram[n1] = bucket.curves;
  r.observed_max = scan.max_count();
  r.expected_max = nq(q, 1);
  r.pass = r.observed_max == r.expected_max;
  const WeierstrassCurve& rep = scan.by_count.rbegin()->second.representatives.front();
  r.optimal_n2 = weierstrass_count(rep, 2, work_bound);
  r.optimal_b2 = (BigInt(r.optimal_n2) - BigInt(r.observed_max)).divexact(2, "B_2 of optimal curve");
  return r;
}

// ---------------------------------------------------------------------------

struct CensusRow {
  unsigned d = 0;
  BigInt b_d;
  std::optional<uint64_t> brute;  // P^1 base only, when bounds allow
};

struct CensusReport {
  uint64_t q = 0;
  unsigned d_max = 0;
  std::vector<CensusRow> rows;
  std::optional<std::string> note;
};

inline CensusReport cmd_census(uint64_t q, unsigned d_max, const BaseDescriptor& base,
                               uint64_t work_bound = limits::kOracleWorkMax) {
  if (d_max < 1 || d_max > limits::kMaxHorizon)
    throw validation_error("d_max must be in [1, " + std::to_string(limits::kMaxHorizon) + "]");
  SmoothZeta z = resolve_base(q, base);
  CensusReport r;
  r.q = q;
  r.d_max = d_max;
  auto census = z.census(d_max);
  for (unsigned d = 1; d <= d_max; ++d) {
    CensusRow row;
    row.d = d;
    row.b_d = census[d - 1];
    if (base.kind == BaseDescriptor::Kind::p1 &&
        checked_pow_u64(q, d, work_bound).has_value()) {
      row.brute = closed_points_p1_brute(q, d, work_bound);
    }
    r.rows.push_back(std::move(row));
  }
  // For an elliptic base, adjudicate B_2 against a brute-force count of a
  // matching Weierstrass curve whenever the scan is affordable.
  if (base.kind == BaseDescriptor::Kind::elliptic_from_count && d_max >= 2 &&
      checked_pow_u64(q, 7, work_bound).has_value()) {
    EllipticScan scan = scan_weierstrass(q, work_bound);
    auto it = scan.by_count.find(static_cast<uint64_t>(base.n1));
    if (it == scan.by_count.end()) {
      r.note = "no smooth Weierstrass curve over F_" + std::to_string(q) + " has " +
               std::to_string(base.n1) + " rational points; B_2 is from Moebius inversion only";
    } else {
      uint64_t n2 = weierstrass_count(it->second.representatives.front(), 2, work_bound);
      BigInt b2 = (BigInt(n2) - BigInt(static_cast<uint64_t>(base.n1)))
                      .divexact(2, "brute-force B_2");
      r.note = "brute-force check: a Weierstrass curve with N_1 = " + std::to_string(base.n1) +
               " has N_2 = " + std::to_string(n2) + ", so B_2 = " + b2.str() +
               (b2 == census[1] ? " (agrees with the census)" : " (DISAGREES with the census)");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

struct ZetaInspect {
  uint64_t q = 0;
  BigPoly numer;
  unsigned horizon = 0;
  std::vector<BigInt> counts;  // N_1..N_horizon
  std::vector<BigInt> census;  // B_1..B_horizon
};

inline ZetaInspect cmd_zeta(uint64_t q, BigPoly coeffs, unsigned horizon = 6) {
  if (horizon < 1 || horizon > limits::kMaxHorizon)
    throw validation_error("horizon must be in [1, " + std::to_string(limits::kMaxHorizon) + "]");
  SmoothZeta z = SmoothZeta::from_numerator(q, std::move(coeffs));
  ZetaInspect r;
  r.q = q;
  r.numer = z.numerator();
  r.horizon = horizon;
  r.counts = z.point_counts(horizon);
  r.census = z.census(horizon);
  return r;
}

}  // namespace singcurve
