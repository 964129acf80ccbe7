#pragma once

#include <gmpxx.h>

#include "eispq/errors.hpp"

namespace eispq {

using Int = mpz_class;
using Rat = mpq_class;

struct Egcd {
  Int g, u, v;  // a*u + b*v = g = gcd(a,b) > 0
};

Egcd egcd(const Int& a, const Int& b);

// x with x ≡ r1 (mod m1), x ≡ r2 (mod m2), 0 <= x < m1*m2; moduli coprime.
Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

// Canonical rational n/d (reduced, positive denominator).
Rat make_rat(const Int& num, const Int& den);

Int floor_rat(const Rat& x);
bool is_integer(const Rat& x);

// Periodic first Bernoulli polynomial: 0 at integers, x - floor(x) - 1/2 else.
Rat bernoulli1(const Rat& x);

// S(u,v) = sum_{t=1}^{v-1} B1(t/v) B1(tu/v), by direct summation. Any u.
Rat dedekind_sum(const Int& u, const Int& v);

// Same value via the reciprocity law, O(log v). Requires gcd(u,v) = 1.
Rat dedekind_sum_fast(const Int& u, const Int& v);

// Fast path extended to gcd(u,v) = g > 1 through S(u,v) = S(u/g, v/g).
Rat dedekind_sum_any(const Int& u, const Int& v);

}  // namespace eispq
