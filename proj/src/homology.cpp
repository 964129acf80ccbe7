#include "eispq/homology.hpp"

#include <algorithm>
#include <numeric>

#include "eispq/boundary.hpp"
#include "eispq/eisenstein.hpp"

namespace eispq {

namespace {

// Dense exact elimination is plenty at |P^1| <= a few hundred; rows are
// kept sparse only implicitly through the zero tests.
struct RowReduce {
  std::vector<std::vector<Rat>> rows;
  std::vector<long> pivot_col_of_row;

  void add_row(std::vector<Rat> row) {
    for (size_t r = 0; r < rows.size(); r++) {
      long pc = pivot_col_of_row[r];
      if (row[pc] != 0) {
        Rat factor = row[pc];
        for (size_t j = 0; j < row.size(); j++)
          row[j] -= factor * rows[r][j];
      }
    }
    long pivot = -1;
    for (size_t j = 0; j < row.size(); j++)
      if (row[j] != 0) {
        pivot = static_cast<long>(j);
        break;
      }
    if (pivot < 0) return;
    Rat inv = row[pivot];
    for (Rat& x : row) x /= inv;
    // Back-substitute into earlier rows to reach RREF incrementally.
    for (size_t r = 0; r < rows.size(); r++) {
      if (rows[r][pivot] != 0) {
        Rat f = rows[r][pivot];
        for (size_t j = 0; j < row.size(); j++) rows[r][j] -= f * row[j];
      }
    }
    rows.push_back(std::move(row));
    pivot_col_of_row.push_back(pivot);
  }
};

}  // namespace

ManinPresentation build_presentation(const Level& level) {
  ManinPresentation pres{level, enumerate_p1(level), {}, {}, {}};
  const long n = static_cast<long>(pres.points.size());
  for (long i = 0; i < n; i++) pres.point_index[pres.points[i]] = i;

  Mat2 S = mat_S(), R = mat_R();
  RowReduce rr;
  auto idx = [&](const P1Point& g) { return pres.point_index.at(g); };

  for (const P1Point& g : pres.points) {
    std::vector<Rat> two(n, Rat(0));
    two[idx(g)] += 1;
    two[idx(act(g, S, level))] += 1;
    rr.add_row(std::move(two));

    std::vector<Rat> three(n, Rat(0));
    three[idx(g)] += 1;
    P1Point gR = act(g, R, level);
    three[idx(gR)] += 1;
    three[idx(act(gR, R, level))] += 1;
    rr.add_row(std::move(three));
  }

  std::vector<bool> is_pivot(n, false);
  for (long pc : rr.pivot_col_of_row) is_pivot[pc] = true;

  std::vector<long> basis_index(n, -1);
  for (long j = 0; j < n; j++)
    if (!is_pivot[j]) {
      basis_index[j] = static_cast<long>(pres.basis.size());
      pres.basis.push_back(pres.points[j]);
    }

  const long dim = static_cast<long>(pres.basis.size());
  pres.reduction.assign(n, std::vector<Rat>(dim, Rat(0)));
  for (long j = 0; j < n; j++)
    if (basis_index[j] >= 0) pres.reduction[j][basis_index[j]] = 1;
  for (size_t r = 0; r < rr.rows.size(); r++) {
    long pc = rr.pivot_col_of_row[r];
    // row: e_pc + Σ_free a_j e_j = 0  =>  [e_pc] = -Σ a_j [e_j]
    for (long j = 0; j < n; j++)
      if (basis_index[j] >= 0 && rr.rows[r][j] != 0)
        pres.reduction[pc][basis_index[j]] = -rr.rows[r][j];
  }
  return pres;
}

std::vector<Rat> reduce(const SymbolSum& X, const ManinPresentation& pres) {
  if (!(X.level == pres.level)) throw LevelMismatch("reduce: level mismatch");
  std::vector<Rat> out(pres.dimension(), Rat(0));
  for (const auto& [g, coeff] : X.coeffs) {
    const auto& row = pres.reduction[pres.point_index.at(g)];
    for (long j = 0; j < pres.dimension(); j++)
      if (row[j] != 0) out[j] += coeff * row[j];
  }
  return out;
}

SymbolSum winding_element(const Level& level) {
  SymbolSum out(level);
  EisensteinLabel N = eisenstein_label(level, level.pq);
  for (long x = 1; x < level.pq; x++) {
    if (std::gcd(x, level.pq) != 1) continue;
    FValue v = f_value(normalize(1, x, level), N, level);
    // {0, 1/x} = ξ of the class with bottom row (x, 1)
    out.add(normalize(x, 1, level), Rat(v.value));
  }
  return out;
}

Rat winding_multiple(const Level& level) {
  // Solve α δ(E_p) + β δ(E_q) + γ δ(E_pq) = σ^{-1}([∞] - [0]) in the
  // degree-zero space with basis [∞]-[0], [1/p]-[0], [1/q]-[0].
  CuspDivisor dp = divisor_of_eisenstein(eisenstein_label(level, level.p), level);
  CuspDivisor dq = divisor_of_eisenstein(eisenstein_label(level, level.q), level);
  CuspDivisor dpq =
      divisor_of_eisenstein(eisenstein_label(level, level.pq), level);
  std::array<CuspDivisor, 3> cols = {dp, dq, dpq};
  std::array<CuspClass, 3> rows = {CuspClass::Infinity, CuspClass::OneOverP,
                                   CuspClass::OneOverQ};
  // 3x3 exact solve by elimination
  std::array<std::array<Rat, 4>, 3> m;
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) m[i][j] = cols[j][rows[i]];
    // Σ c_N σ δ(E_N) must equal [0] - [∞], whose [∞]-component is -1.
    m[i][3] = (rows[i] == CuspClass::Infinity) ? make_rat(-kBoundarySign, 1)
                                               : Rat(0);
  }
  for (int col = 0; col < 3; col++) {
    int piv = col;
    while (piv < 3 && m[piv][col] == 0) piv++;
    if (piv == 3) throw MathError("winding_multiple: singular divisor system");
    std::swap(m[col], m[piv]);
    for (int i = 0; i < 3; i++) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[col][col];
      for (int j = col; j < 4; j++) m[i][j] -= f * m[col][j];
    }
  }
  std::array<Rat, 3> coeff;
  for (int i = 0; i < 3; i++) coeff[i] = m[i][3] / m[i][i];

  // u = {0,∞} - Σ c_N (Eisenstein element of E_N) has zero boundary and
  // pairs with every cusp form like {0,∞}, so e_pq = -u.
  SymbolSum u(level);
  u.add(normalize(0, 1, level), Rat(1));
  long labels[3] = {level.p, level.q, level.pq};
  for (int j = 0; j < 3; j++) {
    SymbolSum ej = eisenstein_element(eisenstein_label(level, labels[j]), level);
    u = u + (-coeff[j]) * ej;
  }
  if (!(boundary_symbol_sum(u) == CuspDivisor{}))
    throw MathError("winding_multiple: boundary did not cancel");

  ManinPresentation pres = build_presentation(level);
  std::vector<Rat> cw = reduce(winding_element(level), pres);
  std::vector<Rat> ce = reduce(Rat(-1) * u, pres);
  Rat ratio(0);
  bool have_ratio = false;
  for (size_t i = 0; i < ce.size(); i++) {
    if (ce[i] == 0) {
      if (cw[i] != 0)
        throw MathError("winding_multiple: classes not proportional");
      continue;
    }
    Rat r = cw[i] / ce[i];
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
    } else if (r != ratio) {
      throw MathError("winding_multiple: classes not proportional");
    }
  }
  if (!have_ratio)
    throw MathError("winding_multiple: e_pq reduced to zero");
  return ratio;
}

long genus_gamma0(const Level& level) {
  const long p = level.p, q = level.q;
  long index = (p + 1) * (q + 1);
  auto legendre = [](long a, long ell) -> long {
    a %= ell;
    if (a < 0) a += ell;
    if (a == 0) return 0;
    long r = 1, base = a, e = (ell - 1) / 2;
    while (e > 0) {
      if (e & 1) r = (r * base) % ell;
      base = (base * base) % ell;
      e >>= 1;
    }
    return r == 1 ? 1 : -1;
  };
  long nu2 = (1 + legendre(-1, p)) * (1 + legendre(-1, q));
  long nu3 = (p == 3 ? 1 : 1 + legendre(-3, p)) *
             (q == 3 ? 1 : 1 + legendre(-3, q));
  long nu_inf = cusp_count_gamma0(level);
  // 12 g = 12 + index - 3 nu2 - 4 nu3 - 6 nu_inf
  long twelve_g = 12 + index - 3 * nu2 - 4 * nu3 - 6 * nu_inf;
  if (twelve_g % 12 != 0) throw MathError("genus formula: not integral");
  return twelve_g / 12;
}

long cusp_count_gamma0(const Level& level) {
  // Σ_{d | pq} φ(gcd(d, pq/d)) = 4 for squarefree pq.
  long count = 0;
  for (long d : {1L, level.p, level.q, level.pq})
    count += (std::gcd(d, level.pq / d) == 1) ? 1 : 0;
  return count;
}

long expected_dimension(const Level& level) {
  return 2 * genus_gamma0(level) + cusp_count_gamma0(level) - 1;
}

}  // namespace eispq
