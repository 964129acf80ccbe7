#include "eispq/arith.hpp"

namespace eispq {

Egcd egcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw DegenerateInput("egcd(0, 0)");
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division; signs fixed at the end
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_u - q * u;
    old_u = u;
    u = tmp;
    tmp = old_v - q * v;
    old_v = v;
    v = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return Egcd{old_r, old_u, old_v};
}

Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Egcd e = egcd(m1, m2);
  if (e.g != 1) throw NotCoprime("crt: moduli not coprime");
  Int m = m1 * m2;
  // x = r1 + m1 * u * (r2 - r1)  with  m1*u ≡ 1 (mod m2)
  Int x = r1 + m1 * e.u * (r2 - r1);
  x %= m;
  if (x < 0) x += m;
  return x;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DegenerateInput("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Rat bernoulli1(const Rat& x) {
  Rat frac = x - Rat(floor_rat(x));
  if (frac == 0) return Rat(0);
  return frac - make_rat(1, 2);
}

Rat dedekind_sum(const Int& u, const Int& v) {
  if (v < 1) throw DegenerateInput("dedekind_sum: v < 1");
  // B1(t/v) = (2t - v)/(2v) for 0 < t < v, so
  //   S(u,v) = [ sum_t (2t - v)(2(tu mod v) - v) over t with v ∤ tu ] / (4v^2)
  Int acc = 0;
  Int m = u % v;
  if (m < 0) m += v;
  Int tu = 0;
  for (Int t = 1; t < v; ++t) {
    tu += m;
    if (tu >= v) tu -= v;
    if (tu == 0) continue;
    acc += (2 * t - v) * (2 * tu - v);
  }
  return make_rat(acc, 4 * v * v);
}

Rat dedekind_sum_fast(const Int& u, const Int& v) {
  if (v < 1) throw DegenerateInput("dedekind_sum_fast: v < 1");
  {
    Int g = gcd(u, v);
    if (g != 1) throw NotCoprime("dedekind_sum_fast: gcd(u, v) != 1");
  }
  // Descend with S(u,v) = -1/4 + (u^2 + v^2 + 1)/(12uv) - S(v,u), S(u mod v, v) = S(u,v).
  Int a = u % v;
  if (a < 0) a += v;
  Int b = v;
  Rat acc(0);
  int sign = 1;
  while (a != 0) {
    acc += sign * (make_rat(a * a + b * b + 1, 12 * a * b) - make_rat(1, 4));
    Int r = b % a;
    b = a;
    a = r;
    sign = -sign;
  }
  return acc;  // S(0, b) = 0 terminates the descent
}

Rat dedekind_sum_any(const Int& u, const Int& v) {
  if (v < 1) throw DegenerateInput("dedekind_sum_any: v < 1");
  Int g = gcd(u, v);  // = v when u == 0
  return dedekind_sum_fast(u / g, v / g);
}

}  // namespace eispq
