#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eispq/periods.hpp"

using namespace eispq;

TEST_CASE("period basics") {
  Level lv(3, 5);
  for (long n : {3L, 5L, 15L}) {
    EisensteinLabel N = eisenstein_label(lv, n);
    CHECK(period(mat_T(), N, lv) == n - 1);
    CHECK(period(mat_identity(), N, lv) == 0);
  }
  EisensteinLabel N15 = eisenstein_label(lv, 15);
  CHECK(period(Mat2{1, 0, 15, 1}, N15, lv) == 14);
  CHECK_THROWS_AS(period(mat_S(), N15, lv), NotInSubgroup);
}

TEST_CASE("period is a homomorphism with μ-divisible image") {
  for (auto [p, q] : {std::pair<long, long>{3, 5}, {3, 7}, {5, 7}}) {
    Level lv(p, q);
    std::mt19937_64 rng(1000 + lv.pq);
    for (long n : {lv.p, lv.q, lv.pq}) {
      EisensteinLabel N = eisenstein_label(lv, n);
      Int mu = gcd(Int(n - 1), Int(12));
      for (int i = 0; i < 60; i++) {
        Mat2 g1 = random_gamma0_element(lv, 6, rng);
        Mat2 g2 = random_gamma0_element(lv, 6, rng);
        Int v1 = period(g1, N, lv), v2 = period(g2, N, lv);
        CHECK(period(mul(g1, g2), N, lv) == v1 + v2);
        CHECK(v1 % mu == 0);
        // γ^2 doubles the period
        CHECK(period(mul(g1, g1), N, lv) == 2 * v1);
      }
    }
  }
}

TEST_CASE("conjugation identity (d, c/N; Nb, a)") {
  Level lv(3, 5);
  std::mt19937_64 rng(77);
  for (long n : {3L, 5L, 15L}) {
    EisensteinLabel N = eisenstein_label(lv, n);
    for (int i = 0; i < 40; i++) {
      Mat2 g = random_gamma0_element(lv, 7, rng);
      Mat2 conj{g.d, g.c / n, n * g.b, g.a};
      CHECK(period(g, N, lv) == period(conj, N, lv));
    }
  }
}

TEST_CASE("p_value basics") {
  Level lv(3, 5);
  EisensteinLabel N15 = eisenstein_label(lv, 15);
  CHECK(p_value(mat_identity(), N15, lv) == 0);
  CHECK_THROWS_AS(p_value(Mat2{1, 0, 15, 1}, N15, lv), NotInSubgroup);
  CHECK_THROWS_AS(p_value_closed(mat_identity(), N15, lv), DegenerateTrace);
}

TEST_CASE("p_value is half-integral on the exceptional pair") {
  // 12 P_N is a winding number, but 12 does not divide it in general: the
  // numeric period oracle pins π values (γ1: -28, hγ1h⁻¹: -50 at N=15) and
  // the difference quotient lands in (1/2)Z \\ Z. Only P(γ1) - P(γ2) is
  // integral, which is all the coefficient formulas use.
  Level lv(3, 5);
  ExceptionalPair e = build_exceptional_pair(5, 1, lv);
  EisensteinLabel N15 = eisenstein_label(lv, 15);
  CHECK(p_value(e.gamma1, N15, lv) == make_rat(-1, 2));
  CHECK(p_value(e.gamma2, N15, lv) == make_rat(-3, 2));
  CHECK(p_value(e.gamma1, N15, lv) - p_value(e.gamma2, N15, lv) == 1);
  EisensteinLabel N3 = eisenstein_label(lv, 3);
  CHECK(p_value(e.gamma1, N3, lv) == make_rat(-3, 2));
  CHECK(p_value(e.gamma2, N3, lv) == make_rat(-1, 2));
  EisensteinLabel N5 = eisenstein_label(lv, 5);
  CHECK(p_value(e.gamma1, N5, lv) == -1);
  CHECK(p_value(e.gamma2, N5, lv) == -1);
}

TEST_CASE("p_value additivity") {
  Level lv(3, 5);
  std::mt19937_64 rng(31);
  EisensteinLabel N = eisenstein_label(lv, 15);
  for (int i = 0; i < 40; i++) {
    Mat2 g1 = random_gamma_intersection_element(lv, 6, rng);
    Mat2 g2 = random_gamma_intersection_element(lv, 6, rng);
    CHECK(p_value(mul(g1, g2), N, lv) ==
          p_value(g1, N, lv) + p_value(g2, N, lv));
  }
}

TEST_CASE("closed form agrees with the definition") {
  for (auto [p, q] : {std::pair<long, long>{3, 5}, {3, 7}, {5, 7}}) {
    Level lv(p, q);
    std::mt19937_64 rng(500 + lv.pq);
    std::uniform_int_distribution<int> word(3, 8);
    for (long n : {lv.p, lv.q, lv.pq}) {
      EisensteinLabel N = eisenstein_label(lv, n);
      int done = 0;
      while (done < 40) {
        Mat2 g = random_gamma_intersection_element(lv, word(rng), rng);
        if (t_of(g) == 0) continue;
        done++;
        Rat v = p_value(g, N, lv);
        CHECK(p_value_closed(g, N, lv) == v);
        CHECK(is_integer(Rat(2) * v));  // P lands in (1/2)Z
      }
    }
  }
}

TEST_CASE("closed form on the exceptional pair, and sign flip on inverses") {
  Level lv(3, 5);
  ExceptionalPair e = build_exceptional_pair(5, 1, lv);
  for (long n : {3L, 5L, 15L}) {
    EisensteinLabel N = eisenstein_label(lv, n);
    for (const Mat2& g : {e.gamma1, e.gamma2}) {
      Rat direct = p_value(g, N, lv);
      CHECK(p_value_closed(g, N, lv) == direct);
      CHECK(p_value(inverse(g), N, lv) == -direct);
    }
  }
}
