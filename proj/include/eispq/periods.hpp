#pragma once

#include "eispq/level.hpp"
#include "eispq/mat2.hpp"

namespace eispq {

// π_{E_N}(γ), an exact integer. γ must lie in Γ0(N); the conjugation
// identity (d, c/N; Nb, a) forces the domain Γ0(N) rather than Γ0(pq).
Int period(const Mat2& g, EisensteinLabel N, const Level& level);

// P_N(γ) = (2 π_{E_N}(γ) - π_{E_N}(h γ h^{-1})) / 12, for γ in Γ(2) ∩ Γ0(N).
// Half-integral in general (e.g. P_15(γ1^{5,1}) = -1/2); only differences
// of P-values over an exceptional pair are integers. 2 P_N(γ) ∈ Z always.
Rat p_value(const Mat2& g, EisensteinLabel N, const Level& level);

// Same value through the closed Dedekind-sum form in s(γ), t(γ); refuses
// t(γ) = 0 (DegenerateTrace), where the definition should be used instead.
Rat p_value_closed(const Mat2& g, EisensteinLabel N, const Level& level);

}  // namespace eispq
