#pragma once

#include <array>

#include "eispq/level.hpp"
#include "eispq/symbol_sum.hpp"

namespace eispq {

enum class CuspClass { Zero, Infinity, OneOverP, OneOverQ };

// Exact coefficients on the four cusp classes of X_0(pq).
struct CuspDivisor {
  std::array<Rat, 4> coeff{};  // indexed by CuspClass

  Rat& operator[](CuspClass c) { return coeff[static_cast<int>(c)]; }
  const Rat& operator[](CuspClass c) const {
    return coeff[static_cast<int>(c)];
  }
  Rat degree() const;
  bool operator==(const CuspDivisor&) const = default;
};

CuspDivisor operator+(const CuspDivisor& x, const CuspDivisor& y);
CuspDivisor operator-(const CuspDivisor& x, const CuspDivisor& y);
CuspDivisor operator*(const Rat& a, const CuspDivisor& x);

// Class of the cusp a/c (c = 0 meaning ∞), by gcd(c, pq).
CuspClass cusp_class(const Int& a, const Int& c, const Level& level);

long ramification(CuspClass cls, const Level& level);

// Constant Fourier coefficients of E_N at the four cusps, stored in the
// 24-times-η normalization (so the value at ∞ is N - 1).
CuspDivisor a0_table(EisensteinLabel N, const Level& level);

// δ(E_N) = Σ e(x) a0(E_N[x]) [x]; degree zero.
CuspDivisor divisor_of_eisenstein(EisensteinLabel N, const Level& level);

// Linear boundary map: ξ(g) ↦ [class(g·0)] - [class(g·∞)].
CuspDivisor boundary_symbol_sum(const SymbolSum& X);

// The boundary computed through the Γ(2)-coset combinatorics, exposing the
// A', B', C' sums; `divisor` uses the same endpoint orientation as
// boundary_symbol_sum (and equals it identically).
struct EvenBoundary {
  Rat a_prime, b_prime, c_prime;
  CuspDivisor divisor;
};

EvenBoundary boundary_even(const SymbolSum& X);

// Global sign σ relating boundary_symbol_sum(eisenstein element) to δ(E_N);
// pinned by the pq = 15, N = 15 run and asserted everywhere by the tests.
constexpr int kBoundarySign = 1;

}  // namespace eispq
