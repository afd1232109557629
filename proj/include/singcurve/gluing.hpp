#pragma once

// Numerical model of gluing closed points of a smooth curve into rational
// singular points. A singularity is prescribed by its branches: pairs
// (degree d of a closed point on the normalization, multiplicity n in the
// conductor). Everything the construction determines (degree of
// singularity, arithmetic genus, point counts over every extension, the
// extra zeta factor) is a function of these invariants alone; no local
// ring is ever built symbolically.
//
// Rules, all checked:
//   delta_P = sum n_i d_i - 1 >= 1    (a zero-delta prescription is a no-op
//                                      on a smooth point and is rejected)
//   budget: across all singularities, at most B_d(base) branches of degree d
//   N'_n   = N_n(base) - sum_{branches, d | n} d + #singularities
//   factor = prod_P ( prod_branches (1 - T^d) ) / (1 - T)
//
// The glued points are rational, so they count once over every extension;
// a branch of degree d feeds N_n(base) only when d | n.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singcurve/bigint.hpp"
#include "singcurve/bounds.hpp"
#include "singcurve/errors.hpp"
#include "singcurve/zeta.hpp"

namespace singcurve {

namespace limits {
inline constexpr unsigned kMaxBranchDegree = 64;
inline constexpr unsigned kMaxHorizon = 64;
}  // namespace limits

struct BranchSpec {
  unsigned degree = 0;        // degree of the glued closed point
  unsigned multiplicity = 1;  // exponent of its maximal ideal in the conductor
};

struct SingularityPrescription {
  std::vector<BranchSpec> branches;

  // sum n_i d_i - 1
  uint64_t degree_of_singularity() const {
    if (branches.empty()) throw validation_error("singularity prescription with no branches");
    uint64_t s = 0;
    for (const auto& b : branches) {
      if (b.degree < 1 || b.multiplicity < 1)
        throw validation_error("branch degree and multiplicity must be >= 1");
      s += static_cast<uint64_t>(b.degree) * b.multiplicity;
    }
    return s - 1;
  }
};

inline uint64_t delta_of(const SingularityPrescription& p) { return p.degree_of_singularity(); }

struct SingularCurveModel {
  SmoothZeta base;
  std::vector<SingularityPrescription> singularities;
};

// A model whose prescriptions passed the closed-point budget. All derived
// quantities live here; they assume (and only ever see) a checked model.
class ValidatedModel {
 public:
  static ValidatedModel validate(SingularCurveModel m) {
    unsigned max_degree = 0;
    std::map<unsigned, uint64_t> branches_by_degree;
    for (const auto& pres : m.singularities) {
      if (pres.branches.empty())
        throw validation_error("singularity prescription with no branches");
      for (const auto& b : pres.branches) {
        if (b.degree < 1 || b.multiplicity < 1)
          throw validation_error("branch degree and multiplicity must be >= 1");
        if (b.degree > limits::kMaxBranchDegree)
          throw bound_error("branch degree " + std::to_string(b.degree) + " exceeds the cap " +
                            std::to_string(limits::kMaxBranchDegree));
        branches_by_degree[b.degree] += 1;
        if (b.degree > max_degree) max_degree = b.degree;
      }
      if (pres.degree_of_singularity() == 0)
        throw validation_error(
            "prescription with degree of singularity 0 (single rational branch, multiplicity 1) "
            "is a smooth no-op; remove it");
    }
    if (max_degree > 0) {
      auto census = m.base.census(max_degree);
      for (const auto& [d, used] : branches_by_degree) {
        if (BigInt(used) > census[d - 1])
          throw validation_error("closed-point budget exceeded at degree " + std::to_string(d) +
                                 ": prescriptions use " + std::to_string(used) +
                                 ", base curve has B_" + std::to_string(d) + " = " +
                                 census[d - 1].str());
      }
    }
    return ValidatedModel(std::move(m));
  }

  const SingularCurveModel& model() const { return m_; }
  const SmoothZeta& base() const { return m_.base; }
  const std::vector<SingularityPrescription>& singularities() const { return m_.singularities; }

  // pi - g
  uint64_t total_delta() const {
    uint64_t s = 0;
    for (const auto& p : m_.singularities) s += p.degree_of_singularity();
    return s;
  }
  uint64_t arithmetic_genus() const { return m_.base.genus() + total_delta(); }

  // Number of geometric points of the normalization lying over the singular
  // locus minus the singular points themselves; equals deg zeta_factor().
  uint64_t geometric_points_removed() const {
    uint64_t s = 0;
    for (const auto& p : m_.singularities) {
      for (const auto& b : p.branches) s += b.degree;
      s -= 1;
    }
    return s;
  }

  BigInt rational_points(unsigned n) const {
    if (n == 0) throw validation_error("point count needs n >= 1");
    BigInt count = m_.base.point_count(n);
    for (const auto& p : m_.singularities) {
      for (const auto& b : p.branches)
        if (n % b.degree == 0) count -= BigInt(b.degree);
      count += BigInt(1);
    }
    return count;
  }

  // prod_P ( prod_{branches} (1 - T^{d_i}) ) / (1 - T); depends only on the
  // branch degrees, never on multiplicities.
  BigPoly zeta_factor() const {
    BigPoly one_minus_t{BigInt(1), BigInt(-1)};
    BigPoly factor{BigInt(1)};
    for (const auto& p : m_.singularities) {
      BigPoly num{BigInt(1)};
      for (const auto& b : p.branches) {
        BigPoly cyc(b.degree + 1, BigInt(0));
        cyc[0] = BigInt(1);
        cyc[b.degree] = BigInt(-1);
        num = poly_mul(num, cyc);
      }
      factor = poly_mul(factor, poly_divexact(num, one_minus_t));
    }
    return factor;
  }

  // Full zeta numerator of the singular curve over (1-T)(1-qT).
  BigPoly full_numerator() const { return poly_mul(m_.base.numerator(), zeta_factor()); }

 private:
  explicit ValidatedModel(SingularCurveModel m) : m_(std::move(m)) {}
  SingularCurveModel m_;
};

// Glue a_i distinct degree-i points (i >= 2), each alone with multiplicity 1:
// the arithmetic genus grows by (i-1) per point and N'_1 by 1 per point.
inline ValidatedModel construct_principal(const SmoothZeta& base,
                                          const std::map<unsigned, uint64_t>& glued_by_degree) {
  SingularCurveModel m{base, {}};
  for (const auto& [degree, count] : glued_by_degree) {
    if (degree < 2)
      throw validation_error("construct_principal glues points of degree >= 2, got " +
                             std::to_string(degree));
    for (uint64_t i = 0; i < count; ++i)
      m.singularities.push_back(SingularityPrescription{{BranchSpec{degree, 1}}});
  }
  return ValidatedModel::validate(std::move(m));
}

enum class TriState { yes, no, unknown };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "unknown";
  }
}

struct CurveReport {
  uint64_t q = 0;
  uint64_t geometric_genus = 0;
  uint64_t arithmetic_genus = 0;
  uint64_t delta = 0;    // pi - g
  uint64_t delta_x = 0;  // degree of the extra zeta factor
  unsigned horizon = 0;
  std::vector<BigInt> point_counts;  // N'_1 .. N'_horizon
  BigPoly zeta_factor;
  BigInt bound_a;
  std::optional<BigInt> nqg;      // N_q(g) used, when known
  std::optional<BigInt> bound_b;  // N_q(g) + pi - g, when known
  TriState is_delta_optimal = TriState::unknown;
  bool is_maximal = false;
};

inline CurveReport report(const ValidatedModel& vm, unsigned horizon = 6,
                          std::optional<BigInt> external_nqg = std::nullopt) {
  if (horizon < 1 || horizon > limits::kMaxHorizon)
    throw validation_error("horizon must be in [1, " + std::to_string(limits::kMaxHorizon) + "]");
  CurveReport r;
  r.q = vm.base().q();
  r.geometric_genus = vm.base().genus();
  r.delta = vm.total_delta();
  r.arithmetic_genus = vm.arithmetic_genus();
  r.delta_x = vm.geometric_points_removed();
  r.horizon = horizon;
  r.point_counts.reserve(horizon);
  for (unsigned n = 1; n <= horizon; ++n) r.point_counts.push_back(vm.rational_points(n));
  r.zeta_factor = vm.zeta_factor();

  GenusProfile pr = GenusProfile::make(r.q, r.geometric_genus, r.arithmetic_genus);
  r.bound_a = bound_A(pr);
  if (r.point_counts[0] > r.bound_a)
    throw validation_error("N'_1 = " + r.point_counts[0].str() + " exceeds the Weil bound " +
                           r.bound_a.str() + "; the base numerator does not come from a curve");
  r.is_maximal = r.point_counts[0] == r.bound_a;

  r.nqg = external_nqg ? external_nqg : try_nq(r.q, r.geometric_genus);
  if (r.nqg) {
    r.bound_b = *r.nqg + BigInt(r.delta);
    r.is_delta_optimal = r.point_counts[0] == *r.bound_b ? TriState::yes : TriState::no;
  } else {
    r.is_delta_optimal = TriState::unknown;
  }
  return r;
}

}  // namespace singcurve
