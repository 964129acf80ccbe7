#include "eispq/boundary.hpp"

#include <numeric>

#include "eispq/p1.hpp"

namespace eispq {

Rat CuspDivisor::degree() const {
  Rat acc(0);
  for (const Rat& c : coeff) acc += c;
  return acc;
}

CuspDivisor operator+(const CuspDivisor& x, const CuspDivisor& y) {
  CuspDivisor out;
  for (int i = 0; i < 4; i++) out.coeff[i] = x.coeff[i] + y.coeff[i];
  return out;
}

CuspDivisor operator-(const CuspDivisor& x, const CuspDivisor& y) {
  CuspDivisor out;
  for (int i = 0; i < 4; i++) out.coeff[i] = x.coeff[i] - y.coeff[i];
  return out;
}

CuspDivisor operator*(const Rat& a, const CuspDivisor& x) {
  CuspDivisor out;
  for (int i = 0; i < 4; i++) out.coeff[i] = a * x.coeff[i];
  return out;
}

CuspClass cusp_class(const Int& a, const Int& c, const Level& level) {
  if (gcd(a, c) != 1) throw NotACusp("cusp_class: gcd(a, c) != 1");
  Int g = gcd(c, Int(level.pq));
  if (g == level.pq) return CuspClass::Infinity;
  if (g == level.p) return CuspClass::OneOverP;
  if (g == level.q) return CuspClass::OneOverQ;
  return CuspClass::Zero;
}

long ramification(CuspClass cls, const Level& level) {
  switch (cls) {
    case CuspClass::Infinity:
      return 1;
    case CuspClass::OneOverP:
      return level.q;
    case CuspClass::OneOverQ:
      return level.p;
    case CuspClass::Zero:
      return level.pq;
  }
  return 0;
}

CuspDivisor a0_table(EisensteinLabel N, const Level& level) {
  eisenstein_label(level, N.N);
  // a0(E_N at a/c) = gcd(c, N)^2 / N - 1, so N - 1 at ∞ and (1-N)/N at 0.
  // For E_pq this gives (p-q)/q at 1/p and (q-p)/p at 1/q; they are the
  // values the parabolic periods force, and the only ones that close the
  // boundary identity. The weighted sum Σ e(x) a0(x) still vanishes.
  auto a0_at = [&](long c) -> Rat {
    long g = c == 0 ? N.N : std::gcd(c, N.N);
    return make_rat(Int(g) * g, N.N) - 1;
  };
  CuspDivisor a0;
  a0[CuspClass::Infinity] = a0_at(0);
  a0[CuspClass::Zero] = a0_at(1);
  a0[CuspClass::OneOverP] = a0_at(level.p);
  a0[CuspClass::OneOverQ] = a0_at(level.q);
  return a0;
}

CuspDivisor divisor_of_eisenstein(EisensteinLabel N, const Level& level) {
  CuspDivisor a0 = a0_table(N, level);
  CuspDivisor out;
  for (CuspClass cls : {CuspClass::Zero, CuspClass::Infinity,
                        CuspClass::OneOverP, CuspClass::OneOverQ})
    out[cls] = Rat(ramification(cls, level)) * a0[cls];
  if (out.degree() != 0)
    throw MathError("divisor_of_eisenstein: nonzero degree");
  return out;
}

CuspDivisor boundary_symbol_sum(const SymbolSum& X) {
  CuspDivisor out;
  for (const auto& [g, coeff] : X.coeffs) {
    Mat2 m = lift_to_sl2(g, X.level);
    out[cusp_class(m.b, m.d, X.level)] += coeff;   // class of g·0
    out[cusp_class(m.a, m.c, X.level)] -= coeff;   // class of g·∞
  }
  return out;
}

EvenBoundary boundary_even(const SymbolSum& X) {
  const Level& lv = X.level;
  const long p = lv.p, q = lv.q;
  auto [l, m] = bezout_lm(lv);

  Rat a_prime(0), b_prime(0), c_prime(0);
  for (long r = 0; r < q; r++)
    a_prime += X.coefficient(normalize(p, r * p - 1, lv));
  for (long k = 1; k < q; k++)
    a_prime -= X.coefficient(normalize(1, k * p, lv));
  a_prime -= X.coefficient(normalize(q, l * q - 1, lv));

  for (long s = 0; s < p; s++)
    b_prime += X.coefficient(normalize(q, s * q - 1, lv));
  for (long k = 1; k < p; k++)
    b_prime -= X.coefficient(normalize(1, k * q, lv));
  b_prime -= X.coefficient(normalize(p, m * p - 1, lv));

  c_prime = X.coefficient(normalize(0, 1, lv)) -
            X.coefficient(normalize(1, 0, lv));

  EvenBoundary out{a_prime, b_prime, c_prime, CuspDivisor{}};
  // Same orientation as boundary_symbol_sum: the displayed sums carry the
  // opposite overall sign relative to [g·0] - [g·∞].
  out.divisor[CuspClass::OneOverP] = -a_prime;
  out.divisor[CuspClass::OneOverQ] = -b_prime;
  out.divisor[CuspClass::Infinity] = -c_prime;
  out.divisor[CuspClass::Zero] = a_prime + b_prime + c_prime;
  return out;
}

}  // namespace eispq
