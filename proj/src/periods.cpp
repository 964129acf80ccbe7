#include "eispq/periods.hpp"

namespace eispq {

namespace {

Int as_integer(const Rat& x, const char* what) {
  if (!is_integer(x)) throw MathError(std::string(what) + ": not an integer");
  return x.get_num();
}

}  // namespace

Int period(const Mat2& g, EisensteinLabel N, const Level& level) {
  eisenstein_label(level, N.N);
  if (det(g) != 1 || g.c % N.N != 0)
    throw NotInSubgroup("period: matrix not in Γ0(N)");
  if (g.c == 0) {
    Rat v = make_rat(g.b, g.d) * (N.N - 1);
    return as_integer(v, "period (c = 0)");
  }
  Int abs_c = abs(g.c);
  int sign_c = g.c > 0 ? 1 : -1;
  Rat v = make_rat(g.a + g.d, g.c) * (N.N - 1) +
          Rat(12 * sign_c) * (dedekind_sum_fast(g.d, abs_c) -
                              dedekind_sum_fast(g.d, abs_c / N.N));
  return as_integer(v, "period");
}

Rat p_value(const Mat2& g, EisensteinLabel N, const Level& level) {
  if (!in_gamma2(g) || g.c % N.N != 0)
    throw NotInSubgroup("p_value: matrix not in Γ(2) ∩ Γ0(N)");
  Int num = 2 * period(g, N, level) - period(h_conjugate(g), N, level);
  Rat v = make_rat(num, 12);
  // The numerator is a winding number divisible by 6, so P lands in (1/2)Z.
  if (v.get_den() > 2) throw MathError("p_value: denominator exceeds 2");
  return v;
}

Rat p_value_closed(const Mat2& g, EisensteinLabel N, const Level& level) {
  eisenstein_label(level, N.N);
  if (!in_gamma2(g) || g.c % N.N != 0)
    throw NotInSubgroup("p_value_closed: matrix not in Γ(2) ∩ Γ0(N)");
  Int s = s_of(g);
  Int t = t_of(g);
  if (t == 0) throw DegenerateTrace("p_value_closed: t(γ) = 0");
  if (t % 2 != 0) throw NotConjugable("p_value_closed: t(γ) odd");
  int sign_t = t > 0 ? 1 : -1;
  Int at = abs(t);
  Rat v = Rat(2) * (dedekind_sum_fast(s, at * N.N) - dedekind_sum_fast(s, at)) -
          dedekind_sum_fast(s, (at / 2) * N.N) + dedekind_sum_fast(s, at / 2);
  v *= sign_t;
  if (v.get_den() > 2) throw MathError("p_value_closed: denominator exceeds 2");
  return v;
}

}  // namespace eispq
