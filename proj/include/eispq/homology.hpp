#pragma once

#include <map>
#include <vector>

#include "eispq/level.hpp"
#include "eispq/symbol_sum.hpp"

namespace eispq {

// Q^{P^1} modulo the two-term and three-term relations; basis points are
// the free columns of the reduced relation matrix.
struct ManinPresentation {
  Level level;
  std::vector<P1Point> points;            // all of P^1, sorted
  std::map<P1Point, long> point_index;
  std::vector<P1Point> basis;
  // reduction[i] = coordinates of generator i over the basis
  std::vector<std::vector<Rat>> reduction;

  long dimension() const { return static_cast<long>(basis.size()); }
};

ManinPresentation build_presentation(const Level& level);

std::vector<Rat> reduce(const SymbolSum& X, const ManinPresentation& pres);

// (1 - pq) e_pq as a symbol sum: Σ_x F_pq((1,x)) ξ((x,1)) over units x.
SymbolSum winding_element(const Level& level);

// Standard index / elliptic-point / cusp counts for Γ0(N), N squarefree odd;
// the independent dimension oracle for the presentation.
long genus_gamma0(const Level& level);
long cusp_count_gamma0(const Level& level);
long expected_dimension(const Level& level);  // 2g + cusps - 1

// The exact rational multiple c with winding_element = c * e_pq in
// H_1(X_0(pq), Q). e_pq is produced rationally as -({0,∞} - Σ c_N E_N)
// where the Eisenstein combination is the unique one cancelling the
// boundary of {0,∞} (the three divisors δ(E_N) span the degree-zero
// space). Throws MathError if the two classes are not proportional.
Rat winding_multiple(const Level& level);

}  // namespace eispq
