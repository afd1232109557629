#include "doctest.h"
#include "singcurve/bounds.hpp"
#include "singcurve/commands.hpp"

using namespace singcurve;

TEST_CASE("weil_m") {
  CHECK(weil_m(2) == 2);
  CHECK(weil_m(3) == 3);
  CHECK(weil_m(4) == 4);
  CHECK(weil_m(5) == 4);
  CHECK(weil_m(7) == 5);
  CHECK(weil_m(8) == 5);
  CHECK(weil_m(9) == 6);
  CHECK(weil_m(16) == 8);
  CHECK(weil_m(27) == 10);
  CHECK(weil_m(128) == 22);
  CHECK_THROWS_AS(weil_m(6), validation_error);
  CHECK_THROWS_AS(weil_m(1), validation_error);
}

TEST_CASE("bound (A)") {
  CHECK(bound_A(GenusProfile::make(2, 0, 1)) == BigInt(4));
  CHECK(bound_A(GenusProfile::make(2, 1, 1)) == BigInt(5));
  CHECK(bound_A(GenusProfile::make(2, 0, 0)) == BigInt(3));
  CHECK(bound_A(GenusProfile::make(2, 1, 3)) == BigInt(7));
  CHECK_THROWS_AS(GenusProfile::make(2, 2, 1), validation_error);  // pi < g
}

TEST_CASE("N_q(g) for g <= 1 via Waterhouse") {
  CHECK(nq(2, 0) == 3);
  CHECK(nq(9, 0) == 10);
  CHECK(nq(2, 1) == 5);
  CHECK(nq(3, 1) == 7);
  CHECK(nq(4, 1) == 9);    // square
  CHECK(nq(5, 1) == 10);   // p does not divide m
  CHECK(nq(7, 1) == 13);
  CHECK(nq(8, 1) == 14);
  CHECK(nq(9, 1) == 16);
  CHECK(nq(128, 1) == 150);  // defective case: q + m
  CHECK(nq(32, 1) == 44);
  CHECK_THROWS_AS(nq(2, 2), validation_error);
  CHECK_FALSE(try_nq(2, 2).has_value());
  CHECK(try_nq(2, 1) == BigInt(5));
}

TEST_CASE("delta-optimal pi caps") {
  CHECK(delta_optimal_pi_max(2, 0) == BigInt(1));
  CHECK(delta_optimal_pi_max(3, 0) == BigInt(3));
  CHECK(delta_optimal_pi_max(4, 0) == BigInt(6));
  CHECK(delta_optimal_pi_max(2, 1) == BigInt(1));
  CHECK(delta_optimal_pi_max(3, 1) == BigInt(1));
  CHECK(delta_optimal_pi_max(4, 1) == BigInt(1));
  CHECK(delta_optimal_pi_max(5, 1) == BigInt(6));
  CHECK(delta_optimal_pi_max(7, 1) == BigInt(14));
  CHECK(delta_optimal_pi_max(8, 1) == BigInt(22));
  CHECK(delta_optimal_pi_max(9, 1) == BigInt(25));
  CHECK(delta_optimal_pi_max(128, 1) == BigInt(8026));  // q + m case
  CHECK_THROWS_AS(delta_optimal_pi_max(2, 2), validation_error);

  // cap - g equals B_2 of the zeta numerator of an optimal curve
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 128}) {
    CHECK(delta_optimal_pi_max(q, 0) ==
          SmoothZeta::projective_line(q).census(2)[1]);
    auto opt = SmoothZeta::elliptic_from_count(q, static_cast<int64_t>(nq(q, 1)));
    CHECK(delta_optimal_pi_max(q, 1) == BigInt(1) + opt.census(2)[1]);
  }
}

TEST_CASE("maximal pi cap") {
  CHECK(maximal_pi_max(2, 0) == BigInt(1));
  CHECK(maximal_pi_max(2, 1) == BigInt(1));
  CHECK(maximal_pi_max(4, 1) == BigInt(1));
  CHECK(maximal_pi_max(2, 2) == BigInt(1));   // below g: no maximal curve at all
  CHECK(maximal_pi_max(3, 2) == BigInt(-1));
  CHECK(maximal_pi_max(9, 3) == BigInt(3));
  CHECK(maximal_pi_max(9, 1) == BigInt(25));

  // agrees with g + B_2 of (1 + mT + qT^2)^g, computed from raw point counts
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64}) {
    uint64_t m = weil_m(q);
    for (uint64_t g = 0; g <= 4; ++g) {
      BigPoly numer = poly_pow(BigPoly{BigInt(1), BigInt(m), BigInt(q)}, g);
      auto counts = point_counts_from_numerator(q, numer, 2);
      BigInt b2 = (counts[1] - counts[0]).divexact(2, "B_2");
      CHECK(maximal_pi_max(q, g) == BigInt(g) + b2);
    }
  }
}

TEST_CASE("Ihara genus check") {
  CHECK(ihara_genus_check(4, 1));
  CHECK_FALSE(ihara_genus_check(4, 2));
  CHECK(ihara_genus_check(9, 3));
  CHECK_FALSE(ihara_genus_check(9, 4));
  CHECK(ihara_genus_check(64, 28));
  CHECK_FALSE(ihara_genus_check(64, 29));
  CHECK_THROWS_AS(ihara_genus_check(2, 1), validation_error);
  CHECK_THROWS_AS(ihara_genus_check(8, 1), validation_error);
}

TEST_CASE("maximal zeta numerators") {
  auto z = maximal_zeta(2, 0, 1);
  CHECK(z.numer == BigPoly{BigInt(1), BigInt(1)});
  CHECK(point_counts_from_numerator(2, z.numer, 1)[0] == BigInt(4));

  z = maximal_zeta(2, 1, 1);
  CHECK(z.numer == BigPoly{BigInt(1), BigInt(2), BigInt(2)});
  CHECK(point_counts_from_numerator(2, z.numer, 1)[0] == BigInt(5));

  z = maximal_zeta(4, 0, 6);
  CHECK(z.numer == poly_one_plus_t_pow(6));
  CHECK(point_counts_from_numerator(4, z.numer, 1)[0] == BigInt(11));

  CHECK_THROWS_AS(maximal_zeta(2, 0, 2), validation_error);  // pi above the cap
  CHECK_THROWS_AS(maximal_zeta(4, 2, 2), validation_error);  // Ihara
  CHECK_THROWS_AS(maximal_zeta(2, 2, 2), validation_error);  // cap 1 < g
  CHECK_THROWS_AS(maximal_zeta(2, 1, 0), validation_error);  // pi < g
}

TEST_CASE("consistency of (A) and (B)") {
  for (uint64_t q : {2, 3, 4, 5, 7, 8, 9, 128}) {
    for (uint64_t g : {0, 1}) {
      for (uint64_t pi = g; pi <= g + 3; ++pi) {
        BigInt b = BigInt(nq(q, g)) + BigInt(pi - g);
        BigInt a = bound_A(GenusProfile::make(q, g, pi));
        CHECK(b <= a);
        bool full = nq(q, g) == q + 1 + g * weil_m(q);
        CHECK((b == a) == full);
      }
    }
  }
}

TEST_CASE("cmd_bounds assembles the report") {
  auto r = cmd_bounds(2, 1, 3);
  CHECK(r.m == 2);
  CHECK(r.bound_a == BigInt(7));
  CHECK(r.nqg == BigInt(5));
  CHECK(r.bound_b == BigInt(7));
  CHECK(r.delta_optimal_pi_max == BigInt(1));
  CHECK(r.bound_b_attainable == TriState::no);  // pi = 3 > 1, N_2(1,3) < 7

  auto r2 = cmd_bounds(2, 0, 1);
  CHECK(r2.bound_a == BigInt(4));
  CHECK(r2.bound_b_attainable == TriState::yes);

  auto r3 = cmd_bounds(4, 1, 1);
  CHECK(r3.nqg == BigInt(9));
  CHECK(r3.ihara_ok.has_value());
  CHECK(*r3.ihara_ok);

  auto r4 = cmd_bounds(2, 2, 4);
  CHECK_FALSE(r4.nqg.has_value());
  CHECK_FALSE(r4.bound_b.has_value());
  CHECK(r4.bound_b_attainable == TriState::unknown);

  auto r5 = cmd_bounds(2, 2, 4, BigInt(6));  // external N_2(2) = 6
  CHECK(r5.bound_b == BigInt(8));
  CHECK_THROWS_AS(cmd_bounds(2, 2, 4, BigInt(100)), validation_error);  // above Weil
  CHECK_THROWS_AS(cmd_bounds(2, 1, 0), validation_error);               // pi < g
}
