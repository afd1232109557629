#include "doctest.h"
#include "model_gen.hpp"
#include "singcurve/gluing.hpp"

using namespace singcurve;

namespace {
SingularityPrescription pres(std::initializer_list<BranchSpec> bs) {
  return SingularityPrescription{bs};
}
BigPoly ints(std::initializer_list<long long> v) {
  BigPoly p;
  for (long long x : v) p.emplace_back(x);
  return p;
}
}  // namespace

TEST_CASE("degree of singularity") {
  CHECK(delta_of(pres({{2, 1}})) == 1);
  CHECK(delta_of(pres({{1, 1}, {1, 1}})) == 1);  // node
  CHECK(delta_of(pres({{1, 3}})) == 2);          // cusp-like
  CHECK(delta_of(pres({{2, 1}, {3, 1}})) == 4);
  CHECK_THROWS_AS(delta_of(SingularityPrescription{}), validation_error);
  CHECK_THROWS_AS(delta_of(pres({{0, 1}})), validation_error);
}

TEST_CASE("budget validation against the base census") {
  auto p1_2 = SmoothZeta::projective_line(2);
  CHECK_NOTHROW(ValidatedModel::validate({p1_2, {pres({{2, 1}})}}));
  // only one degree-2 point exists on P^1 over F_2
  CHECK_THROWS_AS(ValidatedModel::validate({p1_2, {pres({{2, 1}}), pres({{2, 1}})}}),
                  validation_error);

  auto p1_4 = SmoothZeta::projective_line(4);
  std::vector<SingularityPrescription> six(6, pres({{2, 1}}));
  CHECK_NOTHROW(ValidatedModel::validate({p1_4, six}));
  std::vector<SingularityPrescription> seven(7, pres({{2, 1}}));
  CHECK_THROWS_AS(ValidatedModel::validate({p1_4, seven}), validation_error);

  // a single rational branch with multiplicity 1 is a smooth no-op
  CHECK_THROWS_AS(ValidatedModel::validate({p1_2, {pres({{1, 1}})}}), validation_error);
  CHECK_THROWS_AS(ValidatedModel::validate({p1_2, {SingularityPrescription{}}}),
                  validation_error);
  // multiplicities do not consume extra points, degrees do
  CHECK_NOTHROW(ValidatedModel::validate({p1_2, {pres({{2, 3}})}}));
  // a degree-2 branch with high multiplicity still needs the one degree-2 point
  CHECK_THROWS_AS(ValidatedModel::validate({p1_2, {pres({{2, 1}, {2, 2}})}}), validation_error);
}

TEST_CASE("arithmetic genus") {
  auto p1_2 = SmoothZeta::projective_line(2);
  CHECK(ValidatedModel::validate({p1_2, {}}).arithmetic_genus() == 0);
  CHECK(ValidatedModel::validate({p1_2, {pres({{2, 1}})}}).arithmetic_genus() == 1);
  auto e4 = SmoothZeta::elliptic_from_count(2, 4);
  CHECK(ValidatedModel::validate({e4, {pres({{1, 3}})}}).arithmetic_genus() == 3);
}

TEST_CASE("rational points over extensions") {
  auto vm = ValidatedModel::validate({SmoothZeta::projective_line(2), {pres({{2, 1}})}});
  CHECK(vm.rational_points(1) == BigInt(4));  // 3 - 0 + 1
  CHECK(vm.rational_points(2) == BigInt(4));  // 5 - 2 + 1

  auto vm3 = ValidatedModel::validate(
      {SmoothZeta::projective_line(3), {pres({{2, 1}}), pres({{2, 1}})}});
  CHECK(vm3.rational_points(1) == BigInt(6));  // 4 + 2

  // node: two rational points merge into one over every extension
  auto node = ValidatedModel::validate({SmoothZeta::projective_line(2), {pres({{1, 1}, {1, 1}})}});
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(node.rational_points(n) == BigInt::pow_u64(2, n) + BigInt(1) - BigInt(1));

  // cusp: counts unchanged, genus raised
  auto cusp = ValidatedModel::validate({SmoothZeta::projective_line(2), {pres({{1, 3}})}});
  for (unsigned n = 1; n <= 6; ++n)
    CHECK(cusp.rational_points(n) == BigInt::pow_u64(2, n) + BigInt(1));
  CHECK(cusp.arithmetic_genus() == 2);

  // a degree-4 branch feeds the count only when 4 | n
  auto deg4 = ValidatedModel::validate({SmoothZeta::projective_line(2), {pres({{4, 1}})}});
  CHECK(deg4.rational_points(1) == BigInt(4));    // 3 + 1
  CHECK(deg4.rational_points(2) == BigInt(6));    // 5 + 1
  CHECK(deg4.rational_points(4) == BigInt(14));   // 17 - 4 + 1
  CHECK(deg4.rational_points(8) == BigInt(254));  // 257 - 4 + 1
  CHECK(deg4.zeta_factor() == ints({1, 1, 1, 1}));
}

TEST_CASE("singular zeta factor") {
  auto p1_2 = SmoothZeta::projective_line(2);
  CHECK(ValidatedModel::validate({p1_2, {pres({{2, 1}})}}).zeta_factor() == ints({1, 1}));
  CHECK(ValidatedModel::validate({p1_2, {pres({{1, 1}, {1, 1}})}}).zeta_factor() ==
        ints({1, -1}));
  CHECK(ValidatedModel::validate({p1_2, {pres({{1, 3}})}}).zeta_factor() == ints({1}));
  // (1-T^2)(1-T^3)/(1-T) = (1+T)(1-T^3)
  CHECK(ValidatedModel::validate({p1_2, {pres({{2, 1}, {3, 1}})}}).zeta_factor() ==
        ints({1, 1, 0, -1, -1}));
  // multiplicities never enter the factor
  CHECK(ValidatedModel::validate({p1_2, {pres({{2, 3}})}}).zeta_factor() == ints({1, 1}));
}

TEST_CASE("construct_principal") {
  auto vm = construct_principal(SmoothZeta::projective_line(3), {{2u, 2ull}});
  CHECK(vm.arithmetic_genus() == 2);
  CHECK(vm.rational_points(1) == BigInt(6));

  auto vm2 = construct_principal(SmoothZeta::elliptic_from_count(2, 4), {{2u, 2ull}});
  CHECK(vm2.arithmetic_genus() == 3);
  CHECK(vm2.rational_points(1) == BigInt(6));

  auto smooth = construct_principal(SmoothZeta::projective_line(5), {});
  CHECK(smooth.arithmetic_genus() == 0);
  CHECK(smooth.rational_points(1) == BigInt(6));
  CHECK(smooth.zeta_factor() == ints({1}));

  // several degrees at once: pi = sum (i-1) a_i, N'_1 = N_1 + sum a_i
  auto mixed = construct_principal(SmoothZeta::projective_line(3), {{2u, 1ull}, {3u, 2ull}});
  CHECK(mixed.arithmetic_genus() == 5);
  CHECK(mixed.rational_points(1) == BigInt(7));

  CHECK_THROWS_AS(construct_principal(SmoothZeta::projective_line(2), {{1u, 1ull}}),
                  validation_error);
  CHECK_THROWS_AS(construct_principal(SmoothZeta::projective_line(2), {{2u, 2ull}}),
                  validation_error);
}

TEST_CASE("report flags") {
  // P^1/F_2 glued at its degree-2 point attains bound (A)
  auto r = report(ValidatedModel::validate({SmoothZeta::projective_line(2), {pres({{2, 1}})}}));
  CHECK(r.bound_a == BigInt(4));
  CHECK(r.is_maximal);
  CHECK(r.is_delta_optimal == TriState::yes);
  CHECK(r.delta == 1);
  CHECK(r.delta_x == 1);
  CHECK(r.point_counts[0] == BigInt(4));

  // non-optimal base: 6 points but bound (B) is 7
  auto r2 = report(construct_principal(SmoothZeta::elliptic_from_count(2, 4), {{2u, 2ull}}));
  CHECK(r2.point_counts[0] == BigInt(6));
  CHECK(r2.bound_b == BigInt(7));
  CHECK(r2.is_delta_optimal == TriState::no);
  CHECK_FALSE(r2.is_maximal);

  // a maximal genus-1 base over F_4 has no degree-2 points at all
  CHECK_THROWS_AS(
      ValidatedModel::validate({SmoothZeta::elliptic_from_count(4, 9), {pres({{2, 1}})}}),
      validation_error);

  // genus >= 2: delta-optimality is unknown without an external N_q(g)
  auto g2 = SmoothZeta::from_numerator(2, ints({1, 3, 5, 6, 4}));  // N_1 = 6 = N_2(2)
  auto r3 = report(ValidatedModel::validate({g2, {}}));
  CHECK(r3.is_delta_optimal == TriState::unknown);
  CHECK_FALSE(r3.nqg.has_value());
  auto r4 = report(ValidatedModel::validate({g2, {}}), 6, BigInt(6));
  CHECK(r4.is_delta_optimal == TriState::yes);
  CHECK(r4.bound_b == BigInt(6));

  CHECK_THROWS_AS(report(ValidatedModel::validate({g2, {}}), 0), validation_error);
  CHECK_THROWS_AS(report(ValidatedModel::validate({g2, {}}), 65), validation_error);
}

TEST_CASE("report rejects a base that violates the Weil count bound") {
  // [1, 5, 5] over F_5 passes the census plausibility test (all B_d >= 0 on
  // the default horizon) but pretends N_1 = 11 > q + 1 + m = 10.
  auto bad = SmoothZeta::from_numerator(5, ints({1, 5, 5}));
  CHECK(bad.point_count(1) == BigInt(11));
  CHECK_THROWS_AS(report(ValidatedModel::validate({bad, {}})), validation_error);
}

TEST_CASE("zeta factor and direct counting agree (Eq. vs construction)") {
  std::vector<SmoothZeta> bases;
  bases.push_back(SmoothZeta::projective_line(2));
  bases.push_back(SmoothZeta::projective_line(4));
  bases.push_back(SmoothZeta::elliptic_from_count(2, 4));
  bases.push_back(SmoothZeta::elliptic_from_count(4, 9));
  bases.push_back(SmoothZeta::from_numerator(2, ints({1, 3, 5, 6, 4})));  // genus 2
  testing::ModelGen gen(1234);
  for (const auto& base : bases) {
    for (int i = 0; i < 25; ++i) {
      auto vm = gen.next(base);
      auto counts = point_counts_from_numerator(base.q(), vm.full_numerator(), 6);
      for (unsigned n = 1; n <= 6; ++n) CHECK(counts[n - 1] == vm.rational_points(n));
    }
  }
}

TEST_CASE("factor degree law and root-of-unity divisibility") {
  testing::ModelGen gen(99);
  auto base = SmoothZeta::projective_line(4);
  for (int i = 0; i < 50; ++i) {
    auto vm = gen.next(base);
    auto factor = vm.zeta_factor();
    CHECK(poly_degree(factor) == vm.geometric_points_removed());
    CHECK(BigInt(vm.geometric_points_removed()) <= BigInt(vm.total_delta()));

    bool all_mult_one = true;
    BigPoly branch_product{BigInt(1)};
    size_t npres = vm.singularities().size();
    for (const auto& p : vm.singularities())
      for (const auto& b : p.branches) {
        all_mult_one = all_mult_one && b.multiplicity == 1;
        BigPoly cyc(b.degree + 1, BigInt(0));
        cyc[0] = BigInt(1);
        cyc[b.degree] = BigInt(-1);
        branch_product = poly_mul(branch_product, cyc);
      }
    CHECK((vm.geometric_points_removed() == vm.total_delta()) == all_mult_one);
    // factor * (1-T)^s == prod (1 - T^{d_i}): inverse roots are roots of unity
    BigPoly lhs = poly_mul(factor, poly_pow(BigPoly{BigInt(1), BigInt(-1)}, npres));
    CHECK(lhs == branch_product);
  }
}

TEST_CASE("degree-2-only gluings give factor (1+T)^(pi-g)") {
  for (uint64_t q : {3, 4, 5}) {
    auto base = SmoothZeta::projective_line(q);
    uint64_t b2 = (q * q - q) / 2;
    for (uint64_t a2 = 1; a2 <= b2 && a2 <= 5; ++a2) {
      auto vm = construct_principal(base, {{2u, a2}});
      CHECK(vm.zeta_factor() == poly_one_plus_t_pow(a2));
      CHECK(vm.arithmetic_genus() == a2);
    }
  }
}

TEST_CASE("monotone bound: N'_1 never exceeds bound (A)") {
  testing::ModelGen gen(5150);
  for (auto base : {SmoothZeta::projective_line(3), SmoothZeta::elliptic_from_count(3, 7),
                    SmoothZeta::elliptic_from_count(5, 5)}) {
    for (int i = 0; i < 30; ++i) {
      auto vm = gen.next(base);
      auto r = report(vm);
      CHECK(r.point_counts[0] <= r.bound_a);
      CHECK(BigInt(r.delta_x) <= BigInt(r.delta));
    }
  }
}
