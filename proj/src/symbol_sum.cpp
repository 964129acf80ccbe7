#include "eispq/symbol_sum.hpp"

namespace eispq {

SymbolSum operator+(const SymbolSum& x, const SymbolSum& y) {
  if (!(x.level == y.level)) throw LevelMismatch("symbol sum: level mismatch");
  SymbolSum out = x;
  for (const auto& [g, c] : y.coeffs) out.add(g, c);
  return out;
}

SymbolSum operator*(const Rat& a, const SymbolSum& x) {
  SymbolSum out(x.level);
  if (a == 0) return out;
  for (const auto& [g, c] : x.coeffs) out.add(g, a * c);
  return out;
}

}  // namespace eispq
