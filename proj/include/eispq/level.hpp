#pragma once

#include "eispq/errors.hpp"

namespace eispq {

// Level pq for two distinct odd primes p < q is the only shape this library
// handles; the constructor enforces it.
struct Level {
  long p = 0, q = 0, pq = 0;

  Level(long p_, long q_);

  bool operator==(const Level& o) const { return p == o.p && q == o.q; }
};

bool is_prime(long n);

// The series label N in {p, q, pq}.
struct EisensteinLabel {
  long N = 0;
};

EisensteinLabel eisenstein_label(const Level& level, long N);

}  // namespace eispq
