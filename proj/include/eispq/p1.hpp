#pragma once

#include <compare>
#include <vector>

#include "eispq/level.hpp"
#include "eispq/mat2.hpp"

namespace eispq {

// Canonical representative of a class (c : d) in P^1(Z/pqZ): the
// lexicographically least unit multiple with 0 <= c, d < pq.
struct P1Point {
  long c = 0, d = 0;

  auto operator<=>(const P1Point&) const = default;
};

P1Point normalize(long c, long d, const Level& level);
P1Point normalize(const Int& c, const Int& d, const Level& level);

// All pq + p + q + 1 points, sorted.
std::vector<P1Point> enumerate_p1(const Level& level);

// Right action (c, d) -> (c, d) M; requires det(m) = 1.
P1Point act(const P1Point& g, const Mat2& m, const Level& level);

// Some determinant-1 lift of the class, for endpoint computations.
Mat2 lift_to_sl2(const P1Point& g, const Level& level);

// Coset representatives of Γ0(pq)\SL2(Z): I, α_k = (0 -1; 1 k) for
// 0 <= k < pq, β_r = (-1 -r; p rp-1) for 0 <= r < q, and
// γ_s = (-1 -s; q sq-1) for 0 <= s < p.
std::vector<Mat2> coset_reps_gamma0(const Level& level);

// Representatives of Γ\Γ(2) for Γ = Γ0(pq) ∩ Γ(2): I, α'_k for 1 <= k <= pq,
// β'_r for 0 <= r < q, γ'_s for 0 <= s < p; all lie in Γ(2) and their bottom
// rows cover P^1(Z/pqZ) exactly once.
std::vector<Mat2> coset_reps_gamma2cap(const Level& level);

Mat2 alpha_rep(long k);                              // α_k
Mat2 beta_rep(long r, const Level& level);           // β_r
Mat2 gamma_rep(long s, const Level& level);          // γ_s
Mat2 alpha_prime_rep(long k, const Level& level);    // α'_k, 1 <= k <= pq
Mat2 beta_prime_rep(long r, const Level& level);     // β'_r
Mat2 gamma_prime_rep(long s, const Level& level);    // γ'_s

// The Δ-family member whose bottom row represents g.
Mat2 gamma2cap_rep_of(const P1Point& g, const Level& level);

// s(k) with (kp, -1) = (p, s(k)p - 1) in P^1(Z/pqZ), for gcd(k, q) = 1.
long twist_s(long k, const Level& level);

// The unique (l, m) with lq + mp ≡ 1 (mod pq), 1 <= l <= p-1, 1 <= m <= q-1.
std::pair<long, long> bezout_lm(const Level& level);

}  // namespace eispq
