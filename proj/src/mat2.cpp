#include "eispq/mat2.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace eispq {

Int det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Mat2 mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
              x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 inverse(const Mat2& m) { return Mat2{m.d, -m.b, -m.c, m.a}; }

Mat2 mat_identity() { return Mat2{1, 0, 0, 1}; }
Mat2 mat_T() { return Mat2{1, 1, 0, 1}; }
Mat2 mat_S() { return Mat2{0, -1, 1, 0}; }
Mat2 mat_R() { return Mat2{0, -1, 1, 1}; }

Rat moebius_apply(const Mat2& m, const Rat& x) {
  Rat num = m.a * x + m.b;
  Rat den = m.c * x + m.d;
  if (den == 0) throw DegenerateInput("moebius_apply: pole");
  return num / den;
}

Int s_of(const Mat2& m) { return m.a + m.c; }
Int t_of(const Mat2& m) { return m.b + m.d - m.a - m.c; }

bool in_gamma0(const Mat2& m, long N) {
  return det(m) == 1 && m.c % N == 0;
}

bool in_gamma2(const Mat2& m) {
  return det(m) == 1 && m.a % 2 != 0 && m.d % 2 != 0 && m.b % 2 == 0 &&
         m.c % 2 == 0;
}

bool in_gamma_intersection(const Mat2& m, const Level& level) {
  return in_gamma0(m, level.pq) && in_gamma2(m);
}

Mat2 h_conjugate(const Mat2& m) {
  Int t = t_of(m);
  if (t % 2 != 0) throw NotConjugable("h_conjugate: b+d-a-c is odd");
  return Mat2{m.a + m.c, t / 2, 2 * m.c, m.d - m.c};
}

namespace {

// Odd lift of k: k itself when odd, k - pq otherwise.
Int odd_lift(long k, const Level& level) {
  return (k % 2 != 0) ? Int(k) : Int(k) - level.pq;
}

// Least non-negative l with l*a ≡ 1 (mod m); throws NotInstantiable when
// gcd(a, m) > 1.
Int modular_inverse_or_fail(const Int& a, const Int& m, const char* what) {
  Egcd e = egcd(a, m);
  if (e.g != 1)
    throw NotInstantiable(std::string(what) + ": gcd = " + e.g.get_str(),
                          e.g.get_si());
  Int l = e.u % m;
  if (l < 0) l += m;
  return l;
}

}  // namespace

ExceptionalPair build_exceptional_pair(long x, long k, const Level& level,
                                       int witness_shift) {
  if (x != level.p && x != level.q)
    throw DegenerateInput("build_exceptional_pair: x must be p or q");
  const long pq = level.pq;
  const long cx = pq / x;

  ExceptionalPair out;
  out.x = x;
  out.k = k;
  out.s_k = odd_lift(k, level);

  const Int w1 = out.s_k * x + 2;  // fixed denominator of γ1
  const Int w2 = out.s_k * x;     // fixed denominator of γ2

  // l (s_k x + 2) - 2 s pq = 1
  out.l = modular_inverse_or_fail(w1, Int(2) * pq, "gamma1 not instantiable");
  out.l += Int(2) * pq * witness_shift;
  out.s = (out.l * w1 - 1) / (Int(2) * pq);

  // l' s_k x - 2 s' (pq/x) = 1
  out.l_prime =
      modular_inverse_or_fail(w2, Int(2) * cx, "gamma2 not instantiable");
  out.l_prime += Int(2) * cx * witness_shift;
  out.s_prime = (out.l_prime * w2 - 1) / (Int(2) * cx);

  out.gamma1 = Mat2{1 + 4 * out.s * pq, -2 * out.l, -4 * out.s * w1 * pq,
                    1 + 4 * out.s * pq};
  out.gamma2 = Mat2{1 + 4 * out.s_prime * cx, -2 * out.l_prime,
                    -4 * out.s_prime * out.s_k * pq, 1 + 4 * out.s_prime * cx};

  // Everything the construction promises, checked before the pair escapes.
  if (det(out.gamma1) != 1 || det(out.gamma2) != 1)
    throw MathError("exceptional pair: determinant check failed");
  if (!in_gamma_intersection(out.gamma1, level) ||
      !in_gamma_intersection(out.gamma2, level))
    throw MathError("exceptional pair: not in Γ0(pq) ∩ Γ(2)");
  Rat f1 = make_rat(1, w1);
  Rat f2 = make_rat(1, w2);
  if (moebius_apply(out.gamma1, f1) != -f1 ||
      moebius_apply(out.gamma2, f2) != -f2)
    throw MathError("exceptional pair: fixed-point negation failed");
  return out;
}

namespace {

Mat2 random_word(std::initializer_list<Mat2> gens, int word_length,
                 std::mt19937_64& rng) {
  std::vector<Mat2> moves;
  for (const Mat2& g : gens) {
    moves.push_back(g);
    moves.push_back(inverse(g));
  }
  std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
  Mat2 m = mat_identity();
  for (int i = 0; i < word_length; i++) m = mul(m, moves[pick(rng)]);
  return m;
}

}  // namespace

Mat2 random_gamma0_element(const Level& level, int word_length,
                           std::mt19937_64& rng) {
  return random_word({mat_T(), Mat2{1, 0, level.pq, 1}}, word_length, rng);
}

Mat2 random_gamma_intersection_element(const Level& level, int word_length,
                                       std::mt19937_64& rng) {
  return random_word({Mat2{1, 2, 0, 1}, Mat2{1, 0, 2 * level.pq, 1}},
                     word_length, rng);
}

}  // namespace eispq
