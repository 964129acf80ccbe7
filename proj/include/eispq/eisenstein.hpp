#pragma once

#include <optional>
#include <vector>

#include "eispq/level.hpp"
#include "eispq/mat2.hpp"
#include "eispq/p1.hpp"
#include "eispq/symbol_sum.hpp"

namespace eispq {

enum class CaseKind { Generic, Exceptional, UnitClass };
enum class Side { LeftOfOne, RightOfOne };  // (1+kx, 1) vs (1, 1+kx)

struct CaseTag {
  CaseKind kind = CaseKind::Generic;
  long r = 0;     // Generic: class is (r-1 : r+1), r mod pq
  long x = 0;     // Exceptional: gcd(d - c, pq)
  long k = 0;     // Exceptional: class matches (1 ± kx, 1) / (1, 1 ± kx)
  Side side = Side::LeftOfOne;
};

CaseTag classify(const P1Point& g, const Level& level);

enum class ValueSource { Formula, Oracle };

struct FValue {
  Int value;
  ValueSource source = ValueSource::Formula;
  double oracle_error = 0.0;  // certified bound when source == Oracle
};

// F_N(g): table dispatch over generic / exceptional / unit classes; falls
// back to the numeric integral (rounded, flagged) for classes where no
// exceptional matrix pair is instantiable.
FValue f_value(const P1Point& g, EisensteinLabel N, const Level& level,
               double oracle_tol = 0.05);

// The generic-case value for N = pq through the periodic-Bernoulli sum;
// r is reduced to the same odd representative f_value uses.
Rat f_value_bernoulli(long r, const Level& level);

// Odd representative of r in {1, 3, ..., 2pq-1}.
long generic_representative(long r, const Level& level);

struct EisensteinTable {
  Level level;
  EisensteinLabel N;
  std::vector<std::pair<P1Point, FValue>> values;  // all of P^1, sorted

  SymbolSum symbol_sum() const;
};

EisensteinTable eisenstein_table(EisensteinLabel N, const Level& level,
                                 double oracle_tol = 0.05);

SymbolSum eisenstein_element(EisensteinLabel N, const Level& level);

// 6 F_N coefficientwise.
SymbolSum even_eisenstein_coefficients(EisensteinLabel N, const Level& level);

// The ordered candidate (x, k, side, sign) forms the table admits for an
// exceptional class; exposed for the witness-independence tests.
struct ExceptionalForm {
  long x = 0;
  long k = 0;
  Side side = Side::LeftOfOne;
  int sign = 1;  // +1 for (…, 1) rows, -1 for (1, …) rows
};
std::vector<ExceptionalForm> exceptional_forms(const P1Point& g,
                                               const Level& level);

}  // namespace eispq
