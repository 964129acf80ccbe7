#include "eispq/oracle.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>

namespace eispq {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------- series

std::vector<long> sigma1_table(long order) {
  std::vector<long> sigma(order + 1, 0);
  for (long d = 1; d <= order; d++)
    for (long m = d; m <= order; m += d) sigma[m] += d;
  return sigma;
}

// prod_{n>=1} (1 - q^{mn}) truncated at `order`.
std::vector<Int> euler_product(long m, long order) {
  std::vector<Int> out(order + 1, 0);
  out[0] = 1;
  for (long n = 1; m * n <= order; n++) {
    long e = m * n;
    for (long i = order; i >= e; i--) out[i] -= out[i - e];
  }
  return out;
}

std::vector<Int> multiply_truncated(const std::vector<Int>& x,
                                    const std::vector<Int>& y, long order) {
  std::vector<Int> out(order + 1, 0);
  for (long i = 0; i <= order && i < (long)x.size(); i++) {
    if (x[i] == 0) continue;
    for (long j = 0; i + j <= order && j < (long)y.size(); j++) {
      if (y[j] == 0) continue;
      out[i + j] += x[i] * y[j];
    }
  }
  return out;
}

}  // namespace

QExpansion e2_expansion(long order) {
  if (order < 1) throw DegenerateInput("e2_expansion: order < 1");
  auto sigma = sigma1_table(order);
  QExpansion f;
  f.coeffs.assign(order + 1, 0);
  f.coeffs[0] = 1;
  for (long n = 1; n <= order; n++) f.coeffs[n] = Int(-24) * sigma[n];
  return f;
}

QExpansion eta_newform_level15(long order) {
  if (order < 1) throw DegenerateInput("eta_newform_level15: order < 1");
  std::vector<Int> prod = euler_product(1, order - 1);
  for (long m : {3L, 5L, 15L})
    prod = multiply_truncated(prod, euler_product(m, order - 1), order - 1);
  QExpansion f;
  f.coeffs.assign(order + 1, 0);
  for (long n = 0; n + 1 <= order; n++) f.coeffs[n + 1] = prod[n];
  return f;
}

// ------------------------------------------------------------- evaluation

Cplx eval_e2_series(Cplx z, long order) {
  if (z.imag() <= 0) throw PrecisionFailure("eval_e2_series: Im z <= 0");
  Cplx q = std::exp(Cplx(0, 2 * kPi) * z);
  auto sigma = sigma1_table(order);
  Cplx qn = 1, acc = 0;
  for (long n = 1; n <= order; n++) {
    qn *= q;
    acc += double(sigma[n]) * qn;
  }
  return 1.0 - 24.0 * acc;
}

Cplx eval_EN_series(Cplx z, long N, long order) {
  return double(N) * eval_e2_series(double(N) * z, order) -
         eval_e2_series(z, order);
}

namespace {

struct Reduction {
  Cplx w;                      // = (az+b)/(cz+d), in the fundamental domain
  long a = 1, b = 0, c = 0, d = 1;
};

Reduction sl2_reduce(Cplx z) {
  if (!(z.imag() > 0)) throw PrecisionFailure("sl2_reduce: Im z <= 0");
  Reduction r;
  for (int iter = 0; iter < 600; iter++) {
    double n = std::nearbyint(z.real());
    if (std::abs(n) > 4e15) throw PrecisionFailure("sl2_reduce: overflow");
    long ln = (long)n;
    z -= n;
    r.a -= ln * r.c;
    r.b -= ln * r.d;
    if (std::norm(z) >= 1.0 - 1e-14) {
      r.w = z;
      return r;
    }
    z = -1.0 / z;
    long na = -r.c, nb = -r.d, nc = r.a, nd = r.b;
    r.a = na;
    r.b = nb;
    r.c = nc;
    r.d = nd;
  }
  throw PrecisionFailure("sl2_reduce: did not converge");
}

// Tail of 24 sum_{n>M} sigma_1(n) x^n, using sigma_1(n) <= n^2.
double e2_tail(double x, long M) {
  if (x >= 0.5) return 1e300;
  double xm = std::pow(x, M);
  return 24.0 * xm *
         (2.0 * M * M * x / (1 - x) + 2.0 * x * (1 + x) / std::pow(1 - x, 3));
}

constexpr long kE2Order = 18;

// E'_2 at a point already inside the fundamental domain.
EvalResult eval_e2_reduced(Cplx w) {
  Cplx q = std::exp(Cplx(0, 2 * kPi) * w);
  Cplx qn = 1, acc = 0;
  static const std::vector<long> sigma = sigma1_table(kE2Order);
  for (long n = 1; n <= kE2Order; n++) {
    qn *= q;
    acc += double(sigma[n]) * qn;
  }
  Cplx v = 1.0 - 24.0 * acc;
  return EvalResult{v, e2_tail(std::abs(q), kE2Order) + 1e-15 * std::abs(v)};
}

}  // namespace

EvalResult eval_e2(Cplx z) {
  Reduction r = sl2_reduce(z);
  EvalResult in = eval_e2_reduced(r.w);
  Cplx den = double(r.c) * z + double(r.d);
  // E2(w) = den^2 E2(z) - (6i/pi) c den, so unwind:
  Cplx corr = Cplx(0, 6.0 / kPi) * double(r.c) * den;
  Cplx den2 = den * den;
  Cplx v = (in.value + corr) / den2;
  double err =
      (in.error + 1e-14 * (std::abs(in.value) + std::abs(corr))) /
      std::abs(den2);
  return EvalResult{v, err};
}

EvalResult eval_EN(Cplx z, long N) {
  EvalResult hi = eval_e2(double(N) * z);
  EvalResult lo = eval_e2(z);
  return EvalResult{double(N) * hi.value - lo.value,
                    double(N) * hi.error + lo.error};
}

Cplx eval_eta_series(Cplx z) {
  if (z.imag() <= 0) throw PrecisionFailure("eval_eta_series: Im z <= 0");
  long factors = std::max<long>(24, (long)std::ceil(7.0 / z.imag()));
  if (factors > 4000000) throw PrecisionFailure("eval_eta_series: too low");
  Cplx q = std::exp(Cplx(0, 2 * kPi) * z);
  Cplx prod = 1;
  Cplx qn = 1;
  for (long n = 1; n <= factors; n++) {
    qn *= q;
    prod *= (1.0 - qn);
  }
  return std::exp(Cplx(0, kPi / 12.0) * z) * prod;
}

EvalResult eval_eta(Cplx z) {
  Reduction r = sl2_reduce(z);
  // Normalize so that c > 0, or c == 0 with d > 0 (same Moebius action).
  long a = r.a, b = r.b, c = r.c, d = r.d;
  if (c < 0 || (c == 0 && d < 0)) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  Cplx eta_w = eval_eta_series(r.w);
  double rel = 1e-14;
  if (c == 0) {
    // w = z + b: eta(w) = exp(pi i b / 12) eta(z)
    Rat e = make_rat(Int(b), 12);
    Rat e_mod = e - 2 * Rat(floor_rat(e / 2));
    Cplx phase = std::exp(Cplx(0, kPi) * e_mod.get_d());
    Cplx v = eta_w / phase;
    return EvalResult{v, rel * std::abs(v)};
  }
  // Apostol: eta((az+b)/(cz+d)) = eps * sqrt(-i (cz+d)) * eta(z), c > 0,
  // eps = exp(pi i ((a+d)/(12c) - s(d, c))).
  Rat e = make_rat(Int(a) + Int(d), 12 * Int(c)) -
          dedekind_sum_fast(Int(d), Int(c));
  Rat e_mod = e - 2 * Rat(floor_rat(e / 2));
  Cplx eps = std::exp(Cplx(0, kPi) * e_mod.get_d());
  Cplx den = double(c) * z + double(d);
  Cplx root = std::sqrt(Cplx(0, -1) * den);
  Cplx v = eta_w / (eps * root);
  return EvalResult{v, rel * std::abs(v) + std::abs(v) * 1e-13};
}

// ------------------------------------------------------------- quadrature

namespace {

struct GaussRule {
  std::array<double, 16> x;  // nodes on (-1, 1)
  std::array<double, 16> w;
};

const GaussRule& gauss16() {
  static GaussRule rule = [] {
    GaussRule r{};
    const int n = 16;
    for (int i = 0; i < n; i++) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double pp = 0;
      for (int it = 0; it < 100; it++) {
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; k++) {
          double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1);
        double dx = p1 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r.x[i] = x;
      r.w[i] = 2.0 / ((1 - x * x) * pp * pp);
    }
    return r;
  }();
  return rule;
}

// Integrand over a real parameter: value already includes dz/dt.
using Integrand = std::function<EvalResult(double)>;

struct PanelValue {
  Cplx integral;
  double eval_err = 0;
  double mass = 0;  // integral of |f|, the scale roundoff lives on
};

PanelValue gl_panel(const Integrand& f, double a, double b) {
  const GaussRule& g = gauss16();
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  PanelValue out;
  for (int i = 0; i < 16; i++) {
    EvalResult v = f(mid + half * g.x[i]);
    out.integral += g.w[i] * half * v.value;
    out.eval_err += g.w[i] * half * v.error;
    out.mass += g.w[i] * std::abs(half) * std::abs(v.value);
  }
  return out;
}

struct AdaptiveResult {
  Cplx value;
  double error = 0;
};

AdaptiveResult integrate_adaptive(const Integrand& f, double t0, double t1,
                                  double tol) {
  struct Item {
    double a, b;
    PanelValue whole;
    int depth;
  };
  AdaptiveResult out;
  std::vector<Item> stack;
  stack.push_back({t0, t1, gl_panel(f, t0, t1), 0});
  const double total_len = std::abs(t1 - t0);
  long budget = 2000000;
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (--budget < 0) {
#ifdef EISPQ_QUAD_DEBUG
      fprintf(stderr,
              "budget out at [%g,%g] depth=%d whole=%g mass=%g stack=%zu\n",
              it.a, it.b, it.depth, std::abs(it.whole.integral),
              it.whole.mass, stack.size());
#endif
      throw PrecisionFailure("integrate_adaptive: budget");
    }
    double m = 0.5 * (it.a + it.b);
    PanelValue left = gl_panel(f, it.a, m);
    PanelValue right = gl_panel(f, m, it.b);
    Cplx refined = left.integral + right.integral;
    double gap = std::abs(it.whole.integral - refined);
    double share = tol * std::abs(it.b - it.a) / total_len;
    // Below the evaluation noise further splits only burn budget: the gap
    // and a mass-proportional floor scale identically under bisection, so
    // the floor constant must sit above the worst relative eval noise.
    double floor =
        2e-14 * (left.mass + right.mass) + left.eval_err + right.eval_err;
    if (gap < std::max(0.25 * share, floor) || it.depth >= 40) {
      out.value += refined;
      out.error += gap + left.eval_err + right.eval_err;
    } else {
      stack.push_back({it.a, m, left, it.depth + 1});
      stack.push_back({m, it.b, right, it.depth + 1});
    }
  }
  return out;
}

}  // namespace

QuadValue numeric_period(const Mat2& g, EisensteinLabel N, const Level& level,
                         double tol) {
  eisenstein_label(level, N.N);
  if (det(g) != 1 || g.c % N.N != 0)
    throw NotInSubgroup("numeric_period: matrix not in Γ0(N)");
  double a = g.a.get_d(), b = g.b.get_d(), c = g.c.get_d(), d = g.d.get_d();
  Cplx z0, z1;
  if (g.c == 0) {
    z0 = Cplx(0, 1);
    z1 = Cplx(b / d, 1);
  } else {
    double s = c > 0 ? 1.0 : -1.0;
    z0 = Cplx(-d / c, s / c);
    z1 = Cplx(a / c, s / c);
  }
  // Integrate up, across at height 1, and back down: the integrand is
  // holomorphic, so the contour is free, and a horizontal path near the
  // real axis would drag through every cusp neighborhood on the way.
  const double H = 1.0;
  Cplx corner0(z0.real(), H), corner1(z1.real(), H);
  AdaptiveResult total;
  auto add_segment = [&](Cplx from, Cplx to, double seg_tol) {
    if (from == to) return;
    Cplx dz = to - from;
    Integrand f = [&](double t) -> EvalResult {
      EvalResult e = eval_EN(from + t * dz, N.N);
      return EvalResult{e.value * dz, e.error * std::abs(dz)};
    };
    AdaptiveResult r = integrate_adaptive(f, 0.0, 1.0, seg_tol);
    total.value += r.value;
    total.error += r.error;
  };
  add_segment(z0, corner0, tol / 6);
  add_segment(corner0, corner1, tol / 6);
  add_segment(corner1, z1, tol / 6);
  double err = total.error + std::abs(total.value.imag());
  if (!(err <= tol)) throw PrecisionFailure("numeric_period: tolerance");
  return QuadValue{total.value.real(), err};
}

namespace {

// Integrate h along the geodesic joining two distinct reals alpha < beta,
// oriented from `from` to `to`.
AdaptiveResult geodesic_integral(double from, double to,
                                 const std::function<EvalResult(Cplx)>& h,
                                 double tol) {
  double center = 0.5 * (from + to);
  double radius = 0.5 * std::abs(to - from);
  double th0 = from < to ? kPi : 0.0;
  double th1 = from < to ? 0.0 : kPi;
  Integrand f = [&](double th) -> EvalResult {
    Cplx e = std::exp(Cplx(0, th));
    Cplx z(center + radius * e.real(), radius * e.imag());
    EvalResult v = h(z);
    Cplx dz = Cplx(0, radius) * e;
    return EvalResult{v.value * dz, v.error * std::abs(dz)};
  };
  return integrate_adaptive(f, th0, th1, tol);
}

}  // namespace

namespace {

// E_2(Mw) / (bottom row of M applied to w)^2 for an integer matrix M with
// positive determinant, through the column decomposition M = γ' (A B; 0 D'),
// γ' in SL2(Z). Stable for any height: no large cancellations appear.
struct SlashMatrix {
  long gc = 0, gd = 1;  // bottom row of γ'
  long A = 1, B = 0, Dp = 1;
};

SlashMatrix slash_decompose(long ma, long mb, long mc, long md) {
  for (long v : {ma, mb, mc, md})
    if (std::abs(v) > (1L << 31))
      throw PrecisionFailure("slash_decompose: entries too large");
  long D = ma * md - mb * mc;
  if (D <= 0) throw DegenerateInput("slash_decompose: det <= 0");
  Egcd e = egcd(Int(ma), Int(mc));
  long A = e.g.get_si();
  long u = e.u.get_si(), v = e.v.get_si();
  SlashMatrix s;
  s.A = A;
  s.Dp = D / A;
  s.gc = mc / A;
  s.gd = u;
  s.B = u * mb + v * md;
  return s;
}

EvalResult eval_e2_slashed(const SlashMatrix& s, Cplx w) {
  Cplx u = (double(s.A) * w + double(s.B)) / double(s.Dp);
  EvalResult e2 = eval_e2(u);
  double dp2 = double(s.Dp) * double(s.Dp);
  Cplx corr = Cplx(0, 6.0 / kPi) * double(s.gc) /
              (dp2 * (double(s.gc) * u + double(s.gd)));
  Cplx v = e2.value / dp2 - corr;
  return EvalResult{v, e2.error / dp2 + 1e-15 * std::abs(corr)};
}

// The κ*-integrand slashed back along σ: with z = σw,
//   [2 E_N(z) - (1/2) E_N((z+1)/2)] (cw+d)^{-2}
//     = 2N E2|Nσ - 2 E2|σ - 2N E2|Nhσ + 2 E2|hσ.
struct KappaSlash {
  SlashMatrix m_top, m_id, m_htop, m_h;
  long N;

  KappaSlash(const Mat2& sigma, long N_) : N(N_) {
    long a = sigma.a.get_si(), b = sigma.b.get_si();
    long c = sigma.c.get_si(), d = sigma.d.get_si();
    m_top = slash_decompose(N * a, N * b, c, d);
    m_id = slash_decompose(a, b, c, d);
    m_htop = slash_decompose(N * (a + c), N * (b + d), 2 * c, 2 * d);
    m_h = slash_decompose(a + c, b + d, 2 * c, 2 * d);
  }

  EvalResult operator()(Cplx w) const {
    EvalResult top = eval_e2_slashed(m_top, w);
    EvalResult id = eval_e2_slashed(m_id, w);
    EvalResult htop = eval_e2_slashed(m_htop, w);
    EvalResult h = eval_e2_slashed(m_h, w);
    double n = double(N);
    Cplx v = 2.0 * n * top.value - 2.0 * id.value - 2.0 * n * htop.value +
             2.0 * h.value;
    double err =
        2 * n * top.error + 2 * id.error + 2 * n * htop.error + 2 * h.error;
    // The four constant terms cancel exactly at a P_- endpoint; the float
    // residue of that cancellation is covered by the term magnitudes.
    err += 1e-14 * n *
           (std::abs(top.value) + std::abs(id.value) + std::abs(htop.value) +
            std::abs(h.value));
    return EvalResult{v, err};
  }
};

// det-1 lift sending ∞ to the reduced fraction r.
Mat2 cusp_scaling_matrix(const Rat& r) {
  Int a = r.get_num(), c = r.get_den();
  Egcd e = egcd(a, c);  // a u + c v = 1
  return Mat2{a, -e.v, c, e.u};
}

// ∫ of the slashed κ*-integrand up the vertical line Re w = x from height
// y0 to i∞: adaptive quadrature to a cut height plus a decay-rate tail.
AdaptiveResult vertical_kappa_integral(const KappaSlash& ks, double x,
                                       double y0, double tol) {
  const double lambda = 1.0 / (2.0 * double(ks.N));  // min Fourier rate
  double ycut = std::max(y0 + 1.0, 3.0 / lambda * 0.25);
  double kbound = 0, tail = 0;
  for (int attempt = 0; attempt < 8; attempt++) {
    kbound = 0;
    for (double y : {ycut, 0.85 * ycut, 0.7 * ycut}) {
      if (y < y0) continue;
      EvalResult v = ks(Cplx(x, y));
      kbound = std::max(kbound,
                        (std::abs(v.value) + v.error) *
                            std::exp(2 * kPi * lambda * y));
    }
    tail = 3.0 * kbound * std::exp(-2 * kPi * lambda * ycut) /
           (2 * kPi * lambda);
    if (tail < 0.2 * tol || ycut > 400) break;
    ycut *= 1.5;
  }
  Integrand f = [&](double y) -> EvalResult {
    EvalResult v = ks(Cplx(x, y));
    return EvalResult{v.value * Cplx(0, 1), v.error};
  };
  AdaptiveResult r = integrate_adaptive(f, y0, ycut, tol);
  r.error += tail;
  return r;
}

}  // namespace

QuadValue numeric_F(const P1Point& g, EisensteinLabel N, const Level& level,
                    double tol) {
  eisenstein_label(level, N.N);
  Mat2 m = gamma2cap_rep_of(g, level);
  Rat from = moebius_apply(m, Rat(1));
  Rat to = moebius_apply(m, Rat(-1));

  // Split the geodesic at its apex; each half runs into a cusp and becomes
  // a vertical line after the cusp scaling.
  double c0 = 0.5 * (from.get_d() + to.get_d());
  double radius = 0.5 * std::abs(to.get_d() - from.get_d());
  Cplx apex(c0, radius);

  Cplx total;
  double err = 0;
  int orientation = -1;  // first piece runs apex -> from, i.e. backwards
  for (int side = 0; side < 2; side++) {
    const Rat& endpoint = side == 0 ? from : to;
    const Rat& other = side == 0 ? to : from;
    Mat2 sigma = cusp_scaling_matrix(endpoint);
    KappaSlash ks(sigma, N.N);
    Mat2 sigma_inv = inverse(sigma);
    // Re of the vertical line is the σ^{-1}-image of the other endpoint.
    Rat x_exact = moebius_apply(sigma_inv, other);
    Cplx w0 = (Cplx(sigma_inv.a.get_d()) * apex + Cplx(sigma_inv.b.get_d())) /
              (Cplx(sigma_inv.c.get_d()) * apex + Cplx(sigma_inv.d.get_d()));
    double y0 = w0.imag();
    if (!(y0 > 0)) throw PrecisionFailure("numeric_F: apex image collapsed");
    AdaptiveResult piece =
        vertical_kappa_integral(ks, x_exact.get_d(), y0, tol * 0.25);
    total += double(orientation) * piece.value;
    err += piece.error;
    orientation = 1;
  }
  // The pairing value is the real part. When the endpoints are the same
  // P_- point the integral is closed and genuinely real, so a leftover
  // imaginary part is error; otherwise Im is the log|f| boundary term of
  // the underlying rational function and carries no error information.
  auto p_minus_class = [&](const Rat& r) -> Int {
    return gcd(r.get_den(), Int(level.pq));
  };
  if (p_minus_class(from) == p_minus_class(to)) err += std::abs(total.imag());
  QuadValue out{total.real(), err};
  if (!(out.error <= tol)) throw PrecisionFailure("numeric_F: tolerance");
  return out;
}

// --------------------------------------------------- cusp-form integrals

namespace {

// f via the eta product; sound for any Im z > 0.
EvalResult eval_eta_newform(Cplx z) {
  EvalResult e1 = eval_eta(z);
  EvalResult e3 = eval_eta(3.0 * z);
  EvalResult e5 = eval_eta(5.0 * z);
  EvalResult e15 = eval_eta(15.0 * z);
  Cplx v = e1.value * e3.value * e5.value * e15.value;
  double rel = 0;
  for (const EvalResult* e : {&e1, &e3, &e5, &e15})
    rel += e->error / std::max(1e-300, std::abs(e->value));
  return EvalResult{v, std::abs(v) * rel};
}

// sum_n a_n/(2 pi i n) * -e^{2 pi i n z0} = integral of f from z0 to i∞,
// termwise; tail bounded with |a_n| <= n^2.
QuadValueC series_integral_to_infinity(const QExpansion& f, Cplx z0) {
  Cplx q = std::exp(Cplx(0, 2 * kPi) * z0);
  double aq = std::abs(q);
  Cplx qn = 1, acc = 0;
  for (long n = 1; n <= f.order(); n++) {
    qn *= q;
    if (f.coeffs[n] == 0) continue;
    acc += (f.coeffs[n].get_d() / n) * qn;
  }
  Cplx v = acc * Cplx(0, 1.0 / (2 * kPi));
  long M = f.order();
  double tail =
      std::pow(aq, M) *
      (2.0 * M * M * aq / (1 - aq) + 2.0 * aq * (1 + aq) / std::pow(1 - aq, 3)) /
      (2 * kPi);
  return QuadValueC{v, tail + 1e-15 * std::abs(v)};
}

constexpr double kSeriesHeight = 1.5;

}  // namespace

QuadValueC integrate_cusp_form(const Rat& from, bool from_infinite,
                               const Rat& to, bool to_infinite,
                               const QExpansion& f, double tol) {
  if (from_infinite && to_infinite) return QuadValueC{Cplx(0), 0};
  if (f.order() < 30)
    throw DegenerateInput("integrate_cusp_form: expansion order too small");

  auto h = [&](Cplx z) { return eval_eta_newform(z); };

  if (!from_infinite && !to_infinite) {
    if (from == to) return QuadValueC{Cplx(0), 0};
    AdaptiveResult r = geodesic_integral(from.get_d(), to.get_d(), h, tol);
    return QuadValueC{r.value, r.error};
  }

  // Vertical geodesic x0 -> i∞ (or reversed): quadrature up to a fixed
  // height, then the termwise series integral above it.
  double x0 = (from_infinite ? to : from).get_d();
  Integrand vert = [&](double s) -> EvalResult {
    double y = std::exp(s);
    EvalResult v = h(Cplx(x0, y));
    return EvalResult{v.value * Cplx(0, y), v.error * y};
  };
  // e^{-2 pi y} below ~1e-22 at y = 8: start of the decayed zone near the
  // cusp x0 is found adaptively by the integrator.
  AdaptiveResult low =
      integrate_adaptive(vert, std::log(1e-5), std::log(kSeriesHeight), tol);
  QuadValueC top = series_integral_to_infinity(f, Cplx(x0, kSeriesHeight));
  Cplx v = low.value + top.value;
  double err = low.error + top.error;
  // Unintegrated sliver below y = 1e-5: the integrand there is bounded by
  // the cusp decay; fold a conservative allowance in.
  err += 1e-12;
  if (from_infinite) v = -v;
  return QuadValueC{v, err};
}

QuadValueC pair_with_cusp_form(const SymbolSum& X, const QExpansion& f,
                               double tol) {
  if (X.level.pq != 15)
    throw DegenerateInput("pair_with_cusp_form: only level 15 is supported");
  // The expansion must be the eta newform: cross-check against the product.
  for (double y : {0.9, 0.45}) {
    Cplx z(0.21, y);
    Cplx a = eval_eta_newform(z).value;
    Cplx q = std::exp(Cplx(0, 2 * kPi) * z);
    Cplx qn = 1, b = 0;
    for (long n = 1; n <= f.order(); n++) {
      qn *= q;
      b += f.coeffs[n].get_d() * qn;
    }
    if (std::abs(a - b) > 1e-8 * (1.0 + std::abs(a)))
      throw DegenerateInput("pair_with_cusp_form: f is not the eta newform");
  }

  if (X.coeffs.empty()) return QuadValueC{Cplx(0), 0};
  double share = tol / double(X.coeffs.size());
  QuadValueC out;
  for (const auto& [g, coeff] : X.coeffs) {
    Mat2 m = lift_to_sl2(g, X.level);
    bool inf0 = (m.d == 0);
    bool inf1 = (m.c == 0);
    Rat z_from = inf0 ? Rat(0) : make_rat(m.b, m.d);
    Rat z_to = inf1 ? Rat(0) : make_rat(m.a, m.c);
    QuadValueC part =
        integrate_cusp_form(z_from, inf0, z_to, inf1, f, share);
    double w = std::abs(coeff.get_d());
    out.value += coeff.get_d() * part.value;
    out.error += w * part.error;
  }
  if (!(out.error <= tol)) throw PrecisionFailure("pair_with_cusp_form");
  return out;
}

}  // namespace eispq
