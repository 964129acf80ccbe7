#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "eispq/boundary.hpp"
#include "eispq/eisenstein.hpp"
#include "eispq/homology.hpp"

using namespace eispq;

TEST_CASE("genus oracle") {
  CHECK(genus_gamma0(Level(3, 5)) == 1);
  CHECK(genus_gamma0(Level(3, 7)) == 1);
  CHECK(genus_gamma0(Level(3, 11)) == 3);
  CHECK(genus_gamma0(Level(5, 7)) == 3);
  CHECK(cusp_count_gamma0(Level(3, 5)) == 4);
}

TEST_CASE("presentation dimension equals 2g + cusps - 1") {
  for (auto [p, q] :
       {std::pair<long, long>{3, 5}, {3, 7}, {3, 11}, {5, 7}}) {
    Level lv(p, q);
    ManinPresentation pres = build_presentation(lv);
    CHECK(pres.dimension() == expected_dimension(lv));
  }
  CHECK(build_presentation(Level(3, 5)).dimension() == 5);
  CHECK(build_presentation(Level(3, 7)).dimension() == 5);
  CHECK(build_presentation(Level(5, 7)).dimension() == 9);
}

TEST_CASE("relations reduce to zero and reduce is linear") {
  Level lv(3, 5);
  ManinPresentation pres = build_presentation(lv);
  auto pts = enumerate_p1(lv);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
  auto is_zero = [](const std::vector<Rat>& v) {
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  };
  for (int i = 0; i < 30; i++) {
    P1Point g = pts[pick(rng)];
    SymbolSum two(lv);
    two.add(g, Rat(1));
    two.add(act(g, mat_S(), lv), Rat(1));
    CHECK(is_zero(reduce(two, pres)));
    SymbolSum three(lv);
    three.add(g, Rat(1));
    P1Point gR = act(g, mat_R(), lv);
    three.add(gR, Rat(1));
    three.add(act(gR, mat_R(), lv), Rat(1));
    CHECK(is_zero(reduce(three, pres)));
  }
  // linearity
  SymbolSum x(lv), y(lv);
  x.add(pts[2], Rat(3));
  y.add(pts[5], make_rat(7, 2));
  auto rx = reduce(x, pres), ry = reduce(y, pres),
       rxy = reduce(x + y, pres);
  for (long j = 0; j < pres.dimension(); j++)
    CHECK(rxy[j] == rx[j] + ry[j]);

  Level other(3, 7);
  SymbolSum z(other);
  z.add(normalize(1, 2, other), Rat(1));
  CHECK_THROWS_AS(reduce(z, pres), LevelMismatch);
}

TEST_CASE("reduce commutes with the boundary map") {
  Level lv(3, 5);
  ManinPresentation pres = build_presentation(lv);
  // boundary of a class = Σ coords * boundary of basis symbols
  auto boundary_via_basis = [&](const SymbolSum& x) {
    std::vector<Rat> coords = reduce(x, pres);
    CuspDivisor out;
    for (long j = 0; j < pres.dimension(); j++) {
      SymbolSum b(lv);
      b.add(pres.basis[j], Rat(1));
      out = out + coords[j] * boundary_symbol_sum(b);
    }
    return out;
  };
  for (long n : {3L, 15L}) {
    SymbolSum e = eisenstein_element(eisenstein_label(lv, n), lv);
    CHECK(boundary_via_basis(e) == boundary_symbol_sum(e));
  }
  SymbolSum w = winding_element(lv);
  CHECK(boundary_via_basis(w) == boundary_symbol_sum(w));
}

TEST_CASE("winding element") {
  Level lv(3, 5);
  SymbolSum w = winding_element(lv);
  // {0, 1/x} = ξ of the class with bottom row (x, 1): lift check
  Mat2 m = lift_to_sl2(normalize(7, 1, lv), lv);
  Rat zero = moebius_apply(m, Rat(0));
  CHECK(zero.get_num() % 15 != 0);  // lands in the 0-cusp class
  // support is contained in the unit classes (x, 1)
  for (const auto& [g, c] : w.coeffs) {
    CHECK(std::gcd(g.c, lv.pq) * std::gcd(g.d, lv.pq) == 1);
    (void)c;
  }
  CHECK(boundary_symbol_sum(w) == CuspDivisor{});
  // ν = gcd(pq-1, 12) and the integer multiple (pq-1)/ν
  CHECK(std::gcd(lv.pq - 1, 12L) == 2);
  CHECK((lv.pq - 1) / std::gcd(lv.pq - 1, 12L) == 7);
}

TEST_CASE("winding boundary vanishes at all desk levels") {
  for (auto [p, q] :
       {std::pair<long, long>{3, 5}, {3, 7}, {3, 11}, {5, 7}}) {
    Level lv(p, q);
    CHECK(boundary_symbol_sum(winding_element(lv)) == CuspDivisor{});
  }
}

TEST_CASE("exact winding multiple of e_pq") {
  // Genus-one levels: the winding sum is an exact rational multiple of the
  // canonical zero-boundary representative of e_pq, namely 4(p-1)(q-1).
  // The level-15 value 32 independently matches the numeric cusp-form
  // pairing of the oracle suite.
  CHECK(winding_multiple(Level(3, 5)) == 32);
  CHECK(winding_multiple(Level(3, 7)) == 48);
  // Genus three: the two classes are not proportional, so no constant
  // exists at all; frozen as a structural fact.
  CHECK_THROWS_AS(winding_multiple(Level(3, 11)), MathError);
  CHECK_THROWS_AS(winding_multiple(Level(5, 7)), MathError);
}
