#pragma once

#include <cstdint>
#include <random>

#include "eispq/arith.hpp"
#include "eispq/level.hpp"

namespace eispq {

struct Mat2 {
  Int a, b, c, d;

  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

Int det(const Mat2& m);
Mat2 mul(const Mat2& x, const Mat2& y);
Mat2 inverse(const Mat2& m);  // for det 1
Mat2 mat_identity();
Mat2 mat_T();  // (1 1; 0 1)
Mat2 mat_S();  // (0 -1; 1 0)
Mat2 mat_R();  // ST = (0 -1; 1 1)

// Moebius action on a finite rational; the caller keeps c*x + d != 0.
Rat moebius_apply(const Mat2& m, const Rat& x);

// s(γ) = a + c and t(γ) = b + d - a - c, the parameters of the closed
// Dedekind-sum form of P_N.
Int s_of(const Mat2& m);
Int t_of(const Mat2& m);

bool in_gamma0(const Mat2& m, long N);
bool in_gamma2(const Mat2& m);
bool in_gamma_intersection(const Mat2& m, const Level& level);

// h γ h^{-1} for h = (1 1; 0 2): (a+c, (b+d-a-c)/2; 2c, d-c).
Mat2 h_conjugate(const Mat2& m);

// The pair γ1, γ2 negating 1/(s_k x + 2) and 1/(s_k x), with their Bezout
// witnesses. x is p or q; s_k = k + (δ_k - 1) pq is the odd lift of k.
struct ExceptionalPair {
  Mat2 gamma1, gamma2;
  long x = 0;
  long k = 0;
  Int s_k;
  Int s, l;            // l(s_k x + 2) - 2 s pq = 1
  Int s_prime, l_prime;  // l' s_k x - 2 s' (pq/x) = 1
};

// witness_shift > 0 replaces (s,l) and (s',l') by later solutions of the same
// congruences; the resulting integrals must not change (tested).
ExceptionalPair build_exceptional_pair(long x, long k, const Level& level,
                                       int witness_shift = 0);

Mat2 random_gamma0_element(const Level& level, int word_length,
                           std::mt19937_64& rng);
// Words in (1,2;0,1) and (1,0;2pq,1): stays inside Γ0(pq) ∩ Γ(2).
Mat2 random_gamma_intersection_element(const Level& level, int word_length,
                                       std::mt19937_64& rng);

}  // namespace eispq
