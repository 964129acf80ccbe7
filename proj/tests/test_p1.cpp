#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "eispq/p1.hpp"

using namespace eispq;

TEST_CASE("level validation") {
  CHECK_NOTHROW(Level(3, 5));
  CHECK_THROWS_AS(Level(3, 3), DegenerateInput);
  CHECK_THROWS_AS(Level(2, 5), DegenerateInput);
  CHECK_THROWS_AS(Level(9, 5), DegenerateInput);
  CHECK_THROWS_AS(Level(3, 15), DegenerateInput);
  Level swapped(7, 3);
  CHECK(swapped.p == 3);
  CHECK(swapped.q == 7);
  CHECK(swapped.pq == 21);
}

TEST_CASE("normalize identifies unit multiples") {
  Level lv(3, 5);
  CHECK(normalize(6, 10, lv) == normalize(3, 5, lv));
  CHECK(normalize(0, 7, lv) == P1Point{0, 1});
  CHECK(normalize(2, 5, lv) == normalize(1, 10, lv));
  CHECK_THROWS_AS(normalize(3, 6, lv), NotProjectivePoint);
  CHECK_THROWS_AS(normalize(0, 0, lv), NotProjectivePoint);
}

TEST_CASE("normalize is idempotent and unit-invariant") {
  Level lv(3, 5);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(0, 14);
  int done = 0;
  while (done < 1000) {
    long c = d(rng), dd = d(rng);
    if (std::gcd(std::gcd(c, dd), lv.pq) != 1) continue;
    done++;
    P1Point g = normalize(c, dd, lv);
    CHECK(normalize(g.c, g.d, lv) == g);
    for (long u : {2L, 4L, 7L, 8L, 11L, 13L, 14L})
      CHECK(normalize(u * c, u * dd, lv) == g);
  }
}

TEST_CASE("enumerate has pq + p + q + 1 points") {
  Level lv15(3, 5);
  auto pts15 = enumerate_p1(lv15);
  CHECK(pts15.size() == 24);
  Level lv21(3, 7);
  CHECK(enumerate_p1(lv21).size() == 32);

  // contains (1,0), (0,1), and exactly one class for (p,q) and (q,p)
  auto has = [&](P1Point g) {
    for (const auto& x : pts15)
      if (x == g) return true;
    return false;
  };
  CHECK(has(normalize(1, 0, lv15)));
  CHECK(has(normalize(0, 1, lv15)));
  CHECK(has(normalize(3, 5, lv15)));
  CHECK(has(normalize(5, 3, lv15)));
  int pq_class = 0;
  for (const auto& x : pts15)
    if (x == normalize(3, 5, lv15)) pq_class++;
  CHECK(pq_class == 1);
  // (p, q) = (tp, q) = (p, t'q) for units t, t'
  CHECK(normalize(6, 5, lv15) == normalize(3, 5, lv15));
  CHECK(normalize(3, 10, lv15) == normalize(3, 5, lv15));

  // all distinct by construction
  std::set<P1Point> dedup(pts15.begin(), pts15.end());
  CHECK(dedup.size() == pts15.size());
}

TEST_CASE("act is a right action") {
  Level lv(3, 5);
  Mat2 S = mat_S(), T = mat_T(), R = mat_R();
  CHECK(act(P1Point{1, 0}, S, lv) == normalize(0, -1, lv));
  CHECK(act(P1Point{0, 1}, T, lv) == P1Point{0, 1});
  P1Point g = normalize(1, 1, lv);
  CHECK(act(act(act(g, R, lv), R, lv), R, lv) == g);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(0, 14);
  auto pts = enumerate_p1(lv);
  for (const P1Point& x : pts) {
    CHECK(act(x, mat_identity(), lv) == x);
    Mat2 m1 = mul(T, S), m2 = mul(S, mul(T, T));
    CHECK(act(act(x, m1, lv), m2, lv) == act(x, mul(m1, m2), lv));
  }
}

TEST_CASE("lift_to_sl2") {
  Level lv(3, 5);
  for (const P1Point& g : enumerate_p1(lv)) {
    Mat2 m = lift_to_sl2(g, lv);
    CHECK(det(m) == 1);
    CHECK(normalize(m.c, m.d, lv) == g);
  }
}

TEST_CASE("gamma0 coset representatives") {
  for (auto [p, q] : {std::pair<long, long>{3, 5}, {3, 7}, {5, 7}}) {
    Level lv(p, q);
    auto reps = coset_reps_gamma0(lv);
    CHECK((long)reps.size() == lv.pq + lv.p + lv.q + 1);
    std::set<P1Point> classes;
    for (const Mat2& m : reps) {
      CHECK(det(m) == 1);
      classes.insert(normalize(m.c, m.d, lv));
    }
    CHECK(classes.size() == reps.size());
  }
  Level lv(3, 5);
  CHECK(alpha_rep(2) == Mat2{0, -1, 1, 2});
  CHECK(normalize(alpha_rep(2).c, alpha_rep(2).d, lv) == normalize(1, 2, lv));
  CHECK(beta_rep(1, lv) == Mat2{-1, -1, 3, 2});
  CHECK(normalize(3, 2, lv) == normalize(beta_rep(1, lv).c, beta_rep(1, lv).d, lv));
}

TEST_CASE("gamma(2) coset representatives") {
  for (auto [p, q] : {std::pair<long, long>{3, 5}, {3, 7}, {5, 7}}) {
    Level lv(p, q);
    auto reps = coset_reps_gamma2cap(lv);
    CHECK((long)reps.size() == lv.pq + lv.p + lv.q + 1);
    std::set<P1Point> classes;
    for (const Mat2& m : reps) {
      CHECK(det(m) == 1);
      CHECK(in_gamma2(m));
      classes.insert(normalize(m.c, m.d, lv));
    }
    CHECK(classes.size() == reps.size());
  }
  Level lv(3, 5);
  CHECK(alpha_prime_rep(1, lv) == Mat2{225, 14, 16, 1});
  CHECK(alpha_prime_rep(15, lv) == Mat2{15, 14, 16, 15});
}

TEST_CASE("twist s(k)") {
  Level lv(3, 5);
  CHECK(twist_s(1, lv) == 0);
  CHECK_THROWS_AS(twist_s(5, lv), NotAUnit);

  // (kp, -1) = (p, s(k)p - 1) for all units k mod q
  for (long k = 1; k < lv.q; k++) {
    long s = twist_s(k, lv);
    CHECK(normalize(k * lv.p, -1, lv) == normalize(lv.p, s * lv.p - 1, lv));
  }
  // image misses exactly m with lq + mp ≡ 1 (mod pq)
  auto [l, m] = bezout_lm(lv);
  CHECK(l == 2);
  CHECK(m == 2);
  std::set<long> image;
  for (long k = 1; k < lv.q; k++) image.insert(twist_s(k, lv));
  CHECK(image.size() == (size_t)(lv.q - 1));
  CHECK(image.count(m) == 0);
}

TEST_CASE("twist identity at other levels") {
  for (auto [p, q] : {std::pair<long, long>{3, 7}, {5, 7}, {3, 11}}) {
    Level lv(p, q);
    auto [l, m] = bezout_lm(lv);
    CHECK((l * lv.q + m * lv.p) % lv.pq == 1);
    std::set<long> image;
    for (long k = 1; k < lv.q; k++) {
      long s = twist_s(k, lv);
      CHECK(normalize(k * lv.p, -1, lv) == normalize(lv.p, s * lv.p - 1, lv));
      image.insert(s);
    }
    CHECK(image.count(m) == 0);
    CHECK(image.size() == (size_t)(lv.q - 1));
  }
}
