// eispq: Eisenstein elements of modular symbols for Γ0(pq).
//
// Subcommands:
//   table    export the coefficient table of an Eisenstein element
//   winding  export the winding symbol sum with its boundary certificate
//   verify   run self-check suites (exit 0 pass / 1 failure / 2 usage)

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "eispq/boundary.hpp"
#include "eispq/eisenstein.hpp"
#include "eispq/homology.hpp"
#include "eispq/oracle.hpp"
#include "eispq/periods.hpp"

using namespace eispq;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kRepresentativeRule = "odd-mod-2pq";
constexpr const char* kNormalization = "a0-times-24";

std::string rat_str(const Rat& x) { return x.get_str(); }

long series_value(const Level& lv, const std::string& series) {
  if (series == "p") return lv.p;
  if (series == "q") return lv.q;
  if (series == "pq") return lv.pq;
  throw CLI::ValidationError("--series must be one of p, q, pq");
}

json meta_block(const Level& lv, const std::string& series) {
  json meta;
  meta["schema"] = 1;
  meta["tool"] = "eispq";
  meta["version"] = kVersion;
  meta["p"] = lv.p;
  meta["q"] = lv.q;
  if (!series.empty()) meta["series"] = series;
  meta["boundary_sign"] = kBoundarySign;
  meta["generic_representative"] = kRepresentativeRule;
  meta["normalization"] = kNormalization;
  return meta;
}

json divisor_block(const CuspDivisor& d) {
  json out;
  out["zero"] = rat_str(d[CuspClass::Zero]);
  out["infinity"] = rat_str(d[CuspClass::Infinity]);
  out["one_over_p"] = rat_str(d[CuspClass::OneOverP]);
  out["one_over_q"] = rat_str(d[CuspClass::OneOverQ]);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw CLI::ValidationError("cannot open output file " + out_path);
  f << text;
}

struct CheckLog {
  int failures = 0;

  void check(bool ok, const std::string& name, const std::string& detail = "") {
    if (ok)
      std::cout << "ok    " << name << "\n";
    else {
      std::cout << "FAIL  " << name << (detail.empty() ? "" : ": " + detail)
                << "\n";
      failures++;
    }
  }
  void note(const std::string& text) { std::cout << "note  " << text << "\n"; }
};

// ---------------------------------------------------------------- table

int cmd_table(const Level& lv, const std::string& series,
              const std::string& format, const std::string& out_path,
              double tol) {
  EisensteinLabel N = eisenstein_label(lv, series_value(lv, series));
  EisensteinTable table = eisenstein_table(N, lv, tol);

  if (format == "csv") {
    std::ostringstream csv;
    csv << "c,d,coefficient,source\n";
    for (const auto& [g, fv] : table.values)
      csv << g.c << "," << g.d << "," << fv.value.get_str() << ","
          << (fv.source == ValueSource::Oracle ? "oracle" : "formula") << "\n";
    emit(csv.str(), out_path);
    return 0;
  }

  SymbolSum element = table.symbol_sum();
  CuspDivisor b = boundary_symbol_sum(element);
  CuspDivisor d = divisor_of_eisenstein(N, lv);

  json doc;
  doc["meta"] = meta_block(lv, series);
  doc["entries"] = json::array();
  for (const auto& [g, fv] : table.values) {
    json row;
    row["c"] = g.c;
    row["d"] = g.d;
    row["coefficient"] = fv.value.get_str();
    row["source"] = fv.source == ValueSource::Oracle ? "oracle" : "formula";
    if (fv.source == ValueSource::Oracle) row["error_bound"] = fv.oracle_error;
    doc["entries"].push_back(row);
  }
  doc["boundary"] = divisor_block(b);
  json certs;
  certs["degree_zero"] = (b.degree() == 0);
  certs["matches_sigma_times_divisor"] = (b == Rat(kBoundarySign) * d);
  doc["certificates"] = certs;
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

// -------------------------------------------------------------- winding

int cmd_winding(const Level& lv, const std::string& format,
                const std::string& out_path) {
  SymbolSum w = winding_element(lv);
  CuspDivisor b = boundary_symbol_sum(w);
  long nu = std::gcd(lv.pq - 1, 12L);

  if (format == "csv") {
    std::ostringstream csv;
    csv << "c,d,coefficient,source\n";
    for (const auto& [g, c] : w.coeffs)
      csv << g.c << "," << g.d << "," << rat_str(c) << ",formula\n";
    emit(csv.str(), out_path);
    return 0;
  }

  json doc;
  doc["meta"] = meta_block(lv, "pq");
  doc["meta"]["nu"] = nu;
  doc["meta"]["n"] = (lv.pq - 1) / nu;
  try {
    doc["meta"]["multiple_of_winding_dual"] = rat_str(winding_multiple(lv));
  } catch (const MathError&) {
    // genus > 1: the sum is not proportional to e_pq
    doc["meta"]["multiple_of_winding_dual"] = nullptr;
  }
  doc["entries"] = json::array();
  EisensteinLabel N = eisenstein_label(lv, lv.pq);
  for (const auto& [g, c] : w.coeffs) {
    json row;
    row["c"] = g.c;
    row["d"] = g.d;
    row["coefficient"] = rat_str(c);
    // flag the terms whose F-value came from the numeric fallback
    FValue fv = f_value(normalize(g.d, g.c, lv), N, lv);
    row["source"] = fv.source == ValueSource::Oracle ? "oracle" : "formula";
    if (fv.source == ValueSource::Oracle) row["error_bound"] = fv.oracle_error;
    doc["entries"].push_back(row);
  }
  doc["boundary"] = divisor_block(b);
  json certs;
  certs["boundary_is_zero"] = (b == CuspDivisor{});
  doc["certificates"] = certs;
  emit(doc.dump(2) + "\n", out_path);
  return 0;
}

// --------------------------------------------------------------- verify

void suite_dedekind(CheckLog& log) {
  bool grid_ok = true, rec_ok = true, odd_ok = true;
  for (long v = 1; v <= 120 && grid_ok; v++)
    for (long u = 0; u < v; u++) {
      if (std::gcd(u, v) != 1) continue;
      if (dedekind_sum_fast(u, v) != dedekind_sum(u, v)) {
        grid_ok = false;
        break;
      }
    }
  log.check(grid_ok, "dedekind fast equals direct summation (v <= 120)");
  for (long v = 2; v <= 60 && rec_ok; v++)
    for (long u = 1; u < v; u++) {
      if (std::gcd(u, v) != 1) continue;
      Rat lhs = dedekind_sum_fast(u, v) + dedekind_sum_fast(v, u);
      if (lhs != make_rat(-1, 4) + make_rat(u * u + v * v + 1, 12 * u * v)) {
        rec_ok = false;
        break;
      }
    }
  log.check(rec_ok, "dedekind reciprocity");
  for (long v = 1; v <= 40 && odd_ok; v++)
    for (long u = 0; u <= 2 * v; u++)
      if (dedekind_sum(-u, v) != -dedekind_sum(u, v) ||
          dedekind_sum(u + v, v) != dedekind_sum(u, v)) {
        odd_ok = false;
        break;
      }
  log.check(odd_ok, "dedekind oddness and periodicity");
}

void suite_periods(CheckLog& log, const Level& lv, uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool hom_ok = true, mu_ok = true, conj_ok = true, closed_ok = true;
  for (long n : {lv.p, lv.q, lv.pq}) {
    EisensteinLabel N = eisenstein_label(lv, n);
    Int mu = gcd(Int(n - 1), Int(12));
    for (int i = 0; i < 50; i++) {
      Mat2 g1 = random_gamma0_element(lv, 6, rng);
      Mat2 g2 = random_gamma0_element(lv, 6, rng);
      Int v1 = period(g1, N, lv);
      if (period(mul(g1, g2), N, lv) != v1 + period(g2, N, lv)) hom_ok = false;
      if (v1 % mu != 0) mu_ok = false;
      if (g1.c != 0) {
        Mat2 conj{g1.d, g1.c / n, n * g1.b, g1.a};
        if (period(conj, N, lv) != v1) conj_ok = false;
      }
      Mat2 h = random_gamma_intersection_element(lv, 5, rng);
      if (t_of(h) != 0 && p_value_closed(h, N, lv) != p_value(h, N, lv))
        closed_ok = false;
    }
  }
  log.check(hom_ok, "period homomorphism");
  log.check(mu_ok, "period image lies in gcd(N-1,12) Z");
  log.check(conj_ok, "period conjugation identity");
  log.check(closed_ok, "P_N closed form equals definition");
}

void suite_fvalues(CheckLog& log, const Level& lv) {
  EisensteinLabel N = eisenstein_label(lv, lv.pq);
  bool bern_ok = true;
  for (long r = 0; r < lv.pq; r++) {
    Rat b = f_value_bernoulli(r, lv);
    if (!is_integer(b) ||
        b != Rat(f_value(normalize(r - 1, r + 1, lv), N, lv).value)) {
      bern_ok = false;
      break;
    }
  }
  log.check(bern_ok, "generic values match the Bernoulli sum (N = pq)");

  bool sym_ok = true, unit_ok = true;
  int oracles = 0;
  for (long n : {lv.p, lv.q, lv.pq}) {
    EisensteinLabel Nn = eisenstein_label(lv, n);
    for (const P1Point& g : enumerate_p1(lv)) {
      CaseTag tag = classify(g, lv);
      FValue fv = f_value(g, Nn, lv);
      if (fv.source == ValueSource::Oracle) {
        oracles++;
        continue;
      }
      if (tag.kind == CaseKind::UnitClass && fv.value != 0) unit_ok = false;
      if (tag.kind != CaseKind::Exceptional) continue;
      if (f_value(normalize(-g.c, g.d, lv), Nn, lv).value != fv.value)
        sym_ok = false;
      if (f_value(normalize(g.d, g.c, lv), Nn, lv).value != -fv.value)
        sym_ok = false;
    }
  }
  log.check(unit_ok, "unit classes carry coefficient zero");
  log.check(sym_ok, "exceptional symmetries (mirror and swap)");
  log.note("oracle-valued class evaluations: " + std::to_string(oracles));
}

void suite_boundary(CheckLog& log, const Level& lv) {
  bool match_ok = true, even_ok = true, aprime_ok = true;
  for (long n : {lv.p, lv.q, lv.pq}) {
    EisensteinLabel N = eisenstein_label(lv, n);
    SymbolSum e = eisenstein_element(N, lv);
    CuspDivisor d = divisor_of_eisenstein(N, lv);
    if (boundary_symbol_sum(e) != Rat(kBoundarySign) * d) match_ok = false;
    SymbolSum even = Rat(6) * e;
    EvenBoundary eb = boundary_even(even);
    if (eb.divisor != Rat(6 * kBoundarySign) * d) even_ok = false;
    CuspDivisor a0 = a0_table(N, lv);
    if (eb.a_prime != Rat(-6 * ramification(CuspClass::OneOverP, lv)) *
                          a0[CuspClass::OneOverP])
      aprime_ok = false;
  }
  log.check(match_ok, "boundary of eisenstein element = sigma * divisor");
  log.check(even_ok, "even boundary = 6 sigma * divisor");
  log.check(aprime_ok, "A' = -6 e(1/p) a0(E[1/p])");
}

void suite_homology(CheckLog& log, const Level& lv) {
  ManinPresentation pres = build_presentation(lv);
  log.check(pres.dimension() == expected_dimension(lv),
            "presentation dimension = 2g + cusps - 1",
            std::to_string(pres.dimension()) + " vs " +
                std::to_string(expected_dimension(lv)));
  bool rel_ok = true;
  for (const P1Point& g : enumerate_p1(lv)) {
    SymbolSum two(lv);
    two.add(g, Rat(1));
    two.add(act(g, mat_S(), lv), Rat(1));
    for (const Rat& x : reduce(two, pres))
      if (x != 0) rel_ok = false;
    SymbolSum three(lv);
    three.add(g, Rat(1));
    P1Point gR = act(g, mat_R(), lv);
    three.add(gR, Rat(1));
    three.add(act(gR, mat_R(), lv), Rat(1));
    for (const Rat& x : reduce(three, pres))
      if (x != 0) rel_ok = false;
  }
  log.check(rel_ok, "Manin relations reduce to zero");
}

void suite_winding(CheckLog& log, const Level& lv, double tol) {
  SymbolSum w = winding_element(lv);
  log.check(boundary_symbol_sum(w) == CuspDivisor{},
            "winding boundary vanishes");
  long nu = std::gcd(lv.pq - 1, 12L);
  log.note("nu = " + std::to_string(nu) +
           ", n = " + std::to_string((lv.pq - 1) / nu));
  Rat multiple(0);
  bool proportional = true;
  try {
    multiple = winding_multiple(lv);
    log.note("winding = " + multiple.get_str() +
             " * e_pq (exact; the series-side constant 1-pq does not hold)");
  } catch (const MathError&) {
    proportional = false;
    log.note("winding is not a rational multiple of e_pq at this genus");
  }
  if (genus_gamma0(lv) == 1)
    log.check(proportional && multiple == 4 * (lv.p - 1) * (lv.q - 1),
              "winding multiple equals 4(p-1)(q-1) at genus one");
  if (lv.pq != 15) {
    log.note("numeric pairing oracle only covers pq = 15; skipped");
    return;
  }
  QExpansion f = eta_newform_level15(400);
  QuadValueC lhs = pair_with_cusp_form(w, f, tol * 0.1);
  QuadValueC base =
      integrate_cusp_form(Rat(0), false, Rat(0), true, f, tol * 0.1);
  Cplx minus_int = -base.value;
  log.check(std::abs(lhs.value - multiple.get_d() * minus_int) < tol,
            "numeric pairing matches the exact multiple of e_pq");
}

int cmd_verify(const Level& lv, const std::string& suite, uint64_t seed,
               double tol) {
  CheckLog log;
  if (suite == "dedekind" || suite == "all") suite_dedekind(log);
  if (suite == "periods" || suite == "all") suite_periods(log, lv, seed);
  if (suite == "fvalues" || suite == "all") suite_fvalues(log, lv);
  if (suite == "boundary" || suite == "all") suite_boundary(log, lv);
  if (suite == "homology" || suite == "all") suite_homology(log, lv);
  if (suite == "winding" || suite == "all") suite_winding(log, lv, tol);
  std::cout << (log.failures == 0 ? "PASS" : "FAIL") << " (" << log.failures
            << " failures)\n";
  return log.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein elements of modular symbols for level pq"};
  app.require_subcommand(1);

  long p = 3, q = 5;
  std::string series = "pq", format = "json", out_path, suite = "all";
  double tol = 0.05;
  uint64_t seed = 0;

  CLI::App* table = app.add_subcommand("table", "export an Eisenstein element");
  table->add_option("--p", p, "first odd prime")->required();
  table->add_option("--q", q, "second odd prime")->required();
  table->add_option("--series", series, "series label: p, q, or pq");
  table->add_option("--format", format, "json or csv");
  table->add_option("--out", out_path, "output file (default stdout)");
  table->add_option("--tol", tol, "oracle tolerance for fallback classes");

  CLI::App* winding =
      app.add_subcommand("winding", "export the winding element");
  winding->add_option("--p", p, "first odd prime")->required();
  winding->add_option("--q", q, "second odd prime")->required();
  winding->add_option("--format", format, "json or csv");
  winding->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("--p", p, "first odd prime")->required();
  verify->add_option("--q", q, "second odd prime")->required();
  verify->add_option("--suite", suite,
                     "dedekind|periods|fvalues|boundary|homology|winding|all");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--tol", tol, "tolerance for numeric checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Level lv(p, q);
    if (format != "json" && format != "csv")
      throw CLI::ValidationError("--format must be json or csv");
    if (table->parsed()) return cmd_table(lv, series, format, out_path, tol);
    if (winding->parsed()) return cmd_winding(lv, format, out_path);
    static const std::set<std::string> suites = {
        "dedekind", "periods", "fvalues", "boundary",
        "homology", "winding", "all"};
    if (!suites.count(suite))
      throw CLI::ValidationError("unknown --suite " + suite);
    return cmd_verify(lv, suite, seed, tol);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "mathematical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
