#include "eispq/p1.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace eispq {

namespace {

long mod_pq(const Int& x, long pq) {
  Int r = x % pq;
  if (r < 0) r += pq;
  return r.get_si();
}

long mod_pq(long x, long pq) {
  long r = x % pq;
  if (r < 0) r += pq;
  return r;
}

}  // namespace

P1Point normalize(long c, long d, const Level& level) {
  const long pq = level.pq;
  c = mod_pq(c, pq);
  d = mod_pq(d, pq);
  if (std::gcd(std::gcd(c, d), pq) != 1)
    throw NotProjectivePoint("normalize: gcd(c, d, pq) > 1");
  long best_c = -1, best_d = -1;
  for (long u = 1; u < pq; u++) {
    if (std::gcd(u, pq) != 1) continue;
    long uc = (u * c) % pq;
    long ud = (u * d) % pq;
    if (best_c < 0 || uc < best_c || (uc == best_c && ud < best_d)) {
      best_c = uc;
      best_d = ud;
    }
  }
  return P1Point{best_c, best_d};
}

P1Point normalize(const Int& c, const Int& d, const Level& level) {
  return normalize(mod_pq(c, level.pq), mod_pq(d, level.pq), level);
}

std::vector<P1Point> enumerate_p1(const Level& level) {
  // Canonical c is one of 0, 1, p, q; sweep d and dedupe.
  std::set<P1Point> points;
  for (long c : {0L, 1L, level.p, level.q})
    for (long d = 0; d < level.pq; d++) {
      if (std::gcd(std::gcd(c, d), level.pq) != 1) continue;
      points.insert(normalize(c, d, level));
    }
  return std::vector<P1Point>(points.begin(), points.end());
}

P1Point act(const P1Point& g, const Mat2& m, const Level& level) {
  Int c = g.c * m.a + g.d * m.c;
  Int d = g.c * m.b + g.d * m.d;
  return normalize(c, d, level);
}

Mat2 lift_to_sl2(const P1Point& g, const Level& level) {
  if (g.c < 0 || g.c >= level.pq || g.d < 0 || g.d >= level.pq)
    throw NotProjectivePoint("lift_to_sl2: entries not reduced mod pq");
  // Canonical representatives have coprime integer entries (c in {0,1,p,q}
  // and d prime to c), so a Bezout solve lifts directly.
  Egcd e = egcd(Int(g.c), Int(g.d));
  if (e.g != 1) throw NotProjectivePoint("lift_to_sl2: entries not coprime");
  // d*v + c*u = 1 -> det (v, -u; c, d) = v d + u c = 1
  Mat2 m{e.v, -e.u, Int(g.c), Int(g.d)};
  if (det(m) != 1) throw MathError("lift_to_sl2: determinant check failed");
  return m;
}

std::vector<Mat2> coset_reps_gamma0(const Level& level) {
  std::vector<Mat2> reps;
  reps.push_back(mat_identity());
  for (long k = 0; k < level.pq; k++) reps.push_back(alpha_rep(k));
  for (long r = 0; r < level.q; r++) reps.push_back(beta_rep(r, level));
  for (long s = 0; s < level.p; s++) reps.push_back(gamma_rep(s, level));
  return reps;
}

std::vector<Mat2> coset_reps_gamma2cap(const Level& level) {
  std::vector<Mat2> reps;
  reps.push_back(mat_identity());
  for (long k = 1; k <= level.pq; k++)
    reps.push_back(alpha_prime_rep(k, level));
  for (long r = 0; r < level.q; r++) reps.push_back(beta_prime_rep(r, level));
  for (long s = 0; s < level.p; s++) reps.push_back(gamma_prime_rep(s, level));
  return reps;
}

Mat2 alpha_rep(long k) { return Mat2{0, -1, 1, k}; }

Mat2 beta_rep(long r, const Level& level) {
  return Mat2{-1, -r, level.p, r * level.p - 1};
}

Mat2 gamma_rep(long s, const Level& level) {
  return Mat2{-1, -s, level.q, s * level.q - 1};
}

Mat2 alpha_prime_rep(long k, const Level& level) {
  const long pq = level.pq;
  if (k == pq) return Mat2{pq, pq - 1, pq + 1, pq};
  Int s_k = (k % 2 != 0) ? Int(k) : Int(k) - pq;
  return Mat2{s_k * pq * pq, s_k * pq - 1, s_k * pq + 1, s_k};
}

Mat2 beta_prime_rep(long r, const Level& level) {
  Int rr = (r % 2 != 0) ? Int(r) + level.q : Int(r);
  Int cc = Int(level.p) + level.pq;
  return Mat2{-1, -rr, cc, rr * cc - 1};
}

Mat2 gamma_prime_rep(long s, const Level& level) {
  Int ss = (s % 2 != 0) ? Int(s) + level.pq : Int(s);
  Int cc = Int(level.q) + level.pq;
  return Mat2{-1, -ss, cc, ss * cc - 1};
}

Mat2 gamma2cap_rep_of(const P1Point& g, const Level& level) {
  for (const Mat2& m : coset_reps_gamma2cap(level))
    if (normalize(m.c, m.d, level) == g) return m;
  throw NotProjectivePoint("gamma2cap_rep_of: no representative found");
}

long twist_s(long k, const Level& level) {
  const long p = level.p, q = level.q;
  if (mod_pq(k, q) == 0) throw NotAUnit("twist_s: k ≡ 0 (mod q)");
  Egcd e = egcd(Int(mod_pq(k, q)), Int(q));
  long k_inv = mod_pq(e.u, q);
  // x ≡ -1 (mod p), x ≡ -k^{-1} (mod q); then x = s(k) p - 1.
  Int x = crt(Int(p - 1), Int(p), Int(mod_pq(-k_inv, q)), Int(q));
  return mod_pq((x + 1) / p, q);
}

std::pair<long, long> bezout_lm(const Level& level) {
  Egcd e = egcd(Int(level.q), Int(level.p));
  long l = mod_pq(e.u, level.p);
  long m = mod_pq(e.v, level.q);
  // lq + mp ≡ 1 (mod pq) since it holds mod p and mod q separately.
  return {l, m};
}

}  // namespace eispq
