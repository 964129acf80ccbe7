#include "eispq/level.hpp"

#include <utility>

namespace eispq {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Level::Level(long p_, long q_) : p(p_), q(q_) {
  if (p == q) throw DegenerateInput("level: p and q must be distinct");
  if (p == 2 || q == 2) throw DegenerateInput("level: p and q must be odd");
  if (!is_prime(p) || !is_prime(q))
    throw DegenerateInput("level: p and q must be prime");
  if (p > q) std::swap(p, q);
  pq = p * q;
}

EisensteinLabel eisenstein_label(const Level& level, long N) {
  if (N != level.p && N != level.q && N != level.pq)
    throw DegenerateInput("eisenstein label: N must be one of p, q, pq");
  return EisensteinLabel{N};
}

}  // namespace eispq
