#include "eispq/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eispq/oracle.hpp"
#include "eispq/periods.hpp"

namespace eispq {

namespace {

long mod_pos(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

long inverse_mod(long x, long m) {
  Egcd e = egcd(Int(x), Int(m));
  if (e.g != 1) throw NotAUnit("inverse_mod: not a unit");
  Int r = e.u % m;
  if (r < 0) r += m;
  return r.get_si();
}

}  // namespace

long generic_representative(long r, const Level& level) {
  long rr = mod_pos(r, level.pq);
  return (rr % 2 != 0) ? rr : rr + level.pq;
}

CaseTag classify(const P1Point& g, const Level& level) {
  const long pq = level.pq;
  long diff = mod_pos(g.d - g.c, pq);
  long u = std::gcd(diff, pq);  // gcd(0, pq) = pq
  CaseTag tag;
  if (u == pq) {
    tag.kind = CaseKind::UnitClass;
    return tag;
  }
  if (u == 1) {
    tag.kind = CaseKind::Generic;
    tag.r = mod_pos((g.c + g.d) * inverse_mod(diff, pq), pq);
    return tag;
  }
  tag.kind = CaseKind::Exceptional;
  tag.x = u;
  // With e = c/d (or d/c), u | e - 1, giving the k of a (1 + kx)-form.
  if (std::gcd(g.d, pq) == 1) {
    long e = mod_pos(g.c * inverse_mod(g.d, pq), pq);
    tag.k = (e - 1) / u;
    tag.side = Side::LeftOfOne;
  } else {
    long f = mod_pos(g.d * inverse_mod(g.c, pq), pq);
    tag.k = (f - 1) / u;
    tag.side = Side::RightOfOne;
  }
  return tag;
}

std::vector<ExceptionalForm> exceptional_forms(const P1Point& g,
                                               const Level& level) {
  const long pq = level.pq;
  bool d_unit = std::gcd(g.d, pq) == 1;
  bool c_unit = std::gcd(g.c, pq) == 1;
  long e = d_unit ? mod_pos(g.c * inverse_mod(g.d, pq), pq) : -1;
  long f = c_unit ? mod_pos(g.d * inverse_mod(g.c, pq), pq) : -1;

  std::vector<ExceptionalForm> forms;
  for (long x : {level.p, level.q}) {
    // plus forms: e ≡ 1 (mod x) with k = (e-1)/x a nonzero residue mod pq/x
    if (d_unit && e % x == 1 && e != 1)
      forms.push_back({x, (e - 1) / x, Side::LeftOfOne, +1});
    if (c_unit && f % x == 1 && f != 1)
      forms.push_back({x, (f - 1) / x, Side::RightOfOne, -1});
    // minus forms: e ≡ -1 (mod x), class equals (-1-kx, 1) resp. (1, -1-kx)
    if (d_unit && (e + 1) % x == 0 && e != pq - 1)
      forms.push_back({x, mod_pos(-e - 1, pq) / x, Side::LeftOfOne, +1});
    if (c_unit && (f + 1) % x == 0 && f != pq - 1)
      forms.push_back({x, mod_pos(-f - 1, pq) / x, Side::RightOfOne, -1});
  }
  return forms;
}

namespace {

Int generic_value(long r, EisensteinLabel N, const Level& level) {
  long rr = generic_representative(r, level);
  Rat v = Rat(2) * (dedekind_sum_any(Int(rr), Int(N.N)) -
                    2 * dedekind_sum_any(Int(rr), Int(2 * N.N)));
  if (!is_integer(v)) throw MathError("generic f value: not an integer");
  return v.get_num();
}

FValue oracle_fallback(const P1Point& g, EisensteinLabel N,
                       const Level& level, double tol) {
  QuadValue q = numeric_F(g, N, level, tol);
  double scaled = q.value / 6.0;
  double nearest = std::nearbyint(scaled);
  double defect = std::abs(q.value - 6.0 * nearest);
  if (defect + q.error >= 0.4)
    throw PrecisionFailure("f_value: oracle value not certified near 6Z");
  FValue out;
  out.value = Int(static_cast<long>(nearest));
  out.source = ValueSource::Oracle;
  out.oracle_error = defect + q.error;
  return out;
}

}  // namespace

FValue f_value(const P1Point& g, EisensteinLabel N, const Level& level,
               double oracle_tol) {
  eisenstein_label(level, N.N);
  CaseTag tag = classify(g, level);
  switch (tag.kind) {
    case CaseKind::UnitClass:
      return FValue{Int(0)};
    case CaseKind::Generic:
      return FValue{generic_value(tag.r, N, level)};
    case CaseKind::Exceptional:
      break;
  }
  for (const ExceptionalForm& form : exceptional_forms(g, level)) {
    try {
      ExceptionalPair pair = build_exceptional_pair(form.x, form.k, level);
      Rat v = p_value(pair.gamma1, N, level) - p_value(pair.gamma2, N, level);
      // Individual P-values are half-integral; the difference never is.
      if (!is_integer(v))
        throw MathError("f_value: exceptional difference not an integer");
      return FValue{form.sign * v.get_num()};
    } catch (const NotInstantiable&) {
      continue;
    }
  }
  return oracle_fallback(g, N, level, oracle_tol);
}

Rat f_value_bernoulli(long r, const Level& level) {
  const long pq = level.pq;
  long rr = generic_representative(r, level);
  // 2 sum_{h=0}^{pq-1} B1(h r / 2pq): the plain sum is half the value of
  // 2(S(r,pq) - 2S(r,2pq)) at the odd representative.
  Rat acc(0);
  for (long h = 0; h < pq; h++)
    acc += bernoulli1(make_rat(Int(h) * rr, Int(2) * pq));
  return 2 * acc;
}

SymbolSum EisensteinTable::symbol_sum() const {
  SymbolSum out(level);
  for (const auto& [g, fv] : values) out.add(g, Rat(fv.value));
  return out;
}

EisensteinTable eisenstein_table(EisensteinLabel N, const Level& level,
                                 double oracle_tol) {
  EisensteinTable table{level, N, {}};
  for (const P1Point& g : enumerate_p1(level))
    table.values.emplace_back(g, f_value(g, N, level, oracle_tol));
  return table;
}

SymbolSum eisenstein_element(EisensteinLabel N, const Level& level) {
  return eisenstein_table(N, level).symbol_sum();
}

SymbolSum even_eisenstein_coefficients(EisensteinLabel N,
                                       const Level& level) {
  return Rat(6) * eisenstein_element(N, level);
}

}  // namespace eispq
