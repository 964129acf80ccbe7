#pragma once

#include <complex>
#include <vector>

#include "eispq/level.hpp"
#include "eispq/mat2.hpp"
#include "eispq/p1.hpp"
#include "eispq/symbol_sum.hpp"

namespace eispq {

using Cplx = std::complex<double>;

// Integer q-expansion: coeffs[n] is the coefficient of e^{2πinz}.
struct QExpansion {
  std::vector<Int> coeffs;

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
};

// E'_2 = 1 - 24 sum σ_1(n) q^n.
QExpansion e2_expansion(long order);

// q prod (1-q^n)(1-q^{3n})(1-q^{5n})(1-q^{15n}): the weight-2 newform of
// level 15 as an eta product.
QExpansion eta_newform_level15(long order);

struct EvalResult {
  Cplx value;
  double error = 0.0;  // truncation + rounding slack
};

// Truncated series evaluated literally; useful only for Im z not too small.
Cplx eval_e2_series(Cplx z, long order);
Cplx eval_EN_series(Cplx z, long N, long order);

// Reduce into the SL2(Z) fundamental domain, evaluate there, undo the
// weight-2 quasi-modular transformation law of E'_2.
EvalResult eval_e2(Cplx z);
EvalResult eval_EN(Cplx z, long N);

// Dedekind eta via fundamental-domain reduction and the classical
// multiplier (exact Dedekind sums); valid for any Im z > 0.
EvalResult eval_eta(Cplx z);
Cplx eval_eta_series(Cplx z);  // direct product, Im z large enough

struct QuadValue {
  double value = 0.0;
  double error = 0.0;  // quadrature estimate + eval errors
};

struct QuadValueC {
  Cplx value;
  double error = 0.0;
};

// ∫ E_N(z) dz from z0 to γ z0, which equals π_{E_N}(γ).
QuadValue numeric_period(const Mat2& g, EisensteinLabel N, const Level& level,
                         double tol);

// ∫_{M(1)}^{M(-1)} [2 E_N(z) - (1/2) E_N((z+1)/2)] dz over the Γ(2)-coset
// representative M of the class; approximates 6 F_N(g).
QuadValue numeric_F(const P1Point& g, EisensteinLabel N, const Level& level,
                    double tol);

// ∫ f over the geodesic M(0) -> M(∞) of each class in the support of X,
// weighted by the coefficients. f must be the level-15 eta newform (checked
// against the eta product); other forms are out of scope.
QuadValueC pair_with_cusp_form(const SymbolSum& X, const QExpansion& f,
                               double tol);

// ∫ f along the geodesic between two cusps; infinite flags select i∞.
QuadValueC integrate_cusp_form(const Rat& from, bool from_infinite,
                               const Rat& to, bool to_infinite,
                               const QExpansion& f, double tol);

}  // namespace eispq
