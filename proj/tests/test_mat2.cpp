#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eispq/mat2.hpp"
#include "eispq/p1.hpp"

using namespace eispq;

TEST_CASE("membership") {
  Level lv(3, 5);
  CHECK(in_gamma0(Mat2{1, 0, 15, 1}, 15));
  CHECK_FALSE(in_gamma0(Mat2{1, 0, 5, 1}, 15));
  CHECK_FALSE(in_gamma2(mat_T()));
  CHECK(in_gamma2(Mat2{1, 2, 0, 1}));
  CHECK(in_gamma_intersection(Mat2{181, -26, -1260, 181}, lv));
  CHECK_FALSE(in_gamma_intersection(Mat2{1, 0, 15, 1}, lv));
}

TEST_CASE("h conjugation") {
  CHECK(h_conjugate(mat_identity()) == mat_identity());
  Mat2 g{181, -26, -1260, 181};
  Mat2 hg = h_conjugate(g);
  CHECK(hg == Mat2{-1079, 617, -2520, 1441});
  CHECK(det(hg) == 1);
  CHECK(h_conjugate(Mat2{1, -2, 0, 1}) == Mat2{1, -1, 0, 1});
  CHECK_THROWS_AS(h_conjugate(mat_T()), NotConjugable);
}

TEST_CASE("h conjugation is a homomorphism on Γ(2)") {
  Level lv(3, 5);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; i++) {
    Mat2 g1 = random_gamma_intersection_element(lv, 6, rng);
    Mat2 g2 = random_gamma_intersection_element(lv, 6, rng);
    CHECK(h_conjugate(mul(g1, g2)) == mul(h_conjugate(g1), h_conjugate(g2)));
  }
}

TEST_CASE("exceptional pair at pq = 15, x = 5, k = 1") {
  Level lv(3, 5);
  ExceptionalPair e = build_exceptional_pair(5, 1, lv);
  CHECK(e.s_k == 1);
  CHECK(e.s == 3);
  CHECK(e.l == 13);
  CHECK(e.l * 7 - 2 * e.s * 15 == 1);
  CHECK(e.gamma1 == Mat2{181, -26, -1260, 181});
  CHECK(moebius_apply(e.gamma1, make_rat(1, 7)) == make_rat(-1, 7));

  CHECK(e.s_prime == 4);
  CHECK(e.l_prime == 5);
  CHECK(e.l_prime * 5 - 2 * e.s_prime * 3 == 1);
  CHECK(e.gamma2 == Mat2{49, -10, -240, 49});
  CHECK(moebius_apply(e.gamma2, make_rat(1, 5)) == make_rat(-1, 5));
}

TEST_CASE("exceptional pair x = 3, k = 1 is not instantiable") {
  Level lv(3, 5);
  try {
    build_exceptional_pair(3, 1, lv);
    CHECK(false);
  } catch (const NotInstantiable& e) {
    CHECK(e.offending_gcd == 5);
  }
}

TEST_CASE("s(γ) and t(γ) match their closed forms") {
  for (auto [p, q] : {std::pair<long, long>{3, 5}, {3, 7}, {5, 7}}) {
    Level lv(p, q);
    for (long x : {lv.p, lv.q})
      for (long k = 1; k < lv.pq / x; k++) {
        ExceptionalPair e;
        try {
          e = build_exceptional_pair(x, k, lv);
        } catch (const NotInstantiable&) {
          continue;
        }
        CHECK(s_of(e.gamma1) == 1 - 4 * e.s * lv.pq * (1 + e.s_k * x));
        CHECK(t_of(e.gamma1) == -2 * (e.l - 2 * e.s * (e.s_k * x + 2) * lv.pq));
        // s(γ2) = 1 - 4 s' pq (s_k - 1/x), as an exact rational identity
        Rat s2 = 1 - 4 * Rat(e.s_prime) * lv.pq * (Rat(e.s_k) - make_rat(1, x));
        CHECK(Rat(s_of(e.gamma2)) == s2);
        CHECK(t_of(e.gamma2) == -2 * (e.l_prime - 2 * e.s_prime * e.s_k * lv.pq));
        CHECK(det(e.gamma1) == 1);
        CHECK(det(e.gamma2) == 1);
        CHECK(in_gamma_intersection(e.gamma1, lv));
        CHECK(in_gamma_intersection(e.gamma2, lv));
      }
  }
}

TEST_CASE("shifted witnesses still produce valid pairs") {
  Level lv(3, 5);
  for (int shift : {1, 2}) {
    ExceptionalPair e = build_exceptional_pair(5, 1, lv, shift);
    CHECK(det(e.gamma1) == 1);
    CHECK(in_gamma_intersection(e.gamma1, lv));
    CHECK(moebius_apply(e.gamma1, make_rat(1, 7)) == make_rat(-1, 7));
    CHECK(moebius_apply(e.gamma2, make_rat(1, 5)) == make_rat(-1, 5));
  }
}

TEST_CASE("random group elements land in their groups") {
  Level lv(3, 5);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; i++) {
    Mat2 g = random_gamma0_element(lv, 8, rng);
    CHECK(in_gamma0(g, lv.pq));
    Mat2 h = random_gamma_intersection_element(lv, 8, rng);
    CHECK(in_gamma_intersection(h, lv));
  }
}

TEST_CASE("determinant is preserved by products and inverses") {
  std::mt19937_64 rng(3);
  Level lv(3, 7);
  for (int i = 0; i < 50; i++) {
    Mat2 g = random_gamma0_element(lv, 10, rng);
    CHECK(det(g) == 1);
    CHECK(mul(g, inverse(g)) == mat_identity());
  }
}
