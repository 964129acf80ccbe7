#pragma once

#include <map>

#include "eispq/p1.hpp"

namespace eispq {

// Sparse formal sum of P^1 classes with exact coefficients; a modular-symbol
// representative. Zero coefficients are never stored.
struct SymbolSum {
  Level level;
  std::map<P1Point, Rat> coeffs;

  explicit SymbolSum(const Level& lv) : level(lv) {}

  void add(const P1Point& g, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  Rat coefficient(const P1Point& g) const {
    auto it = coeffs.find(g);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
};

SymbolSum operator+(const SymbolSum& x, const SymbolSum& y);
SymbolSum operator*(const Rat& a, const SymbolSum& x);

}  // namespace eispq
