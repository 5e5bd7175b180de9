// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <sys/resource.h>

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>

#include "schalg/action.hpp"
#include "schalg/complexes.hpp"
#include "schalg/invariants.hpp"
#include "schalg/named_chains.hpp"
#include "schalg/series.hpp"

using namespace schalg;

namespace {

struct Outcome {
  bool pass = false;
  std::string details;
};

struct Suite {
  int failures = 0;
  std::string only;

  template <class F>
  void run(const std::string& id, double budget_seconds, F&& fn) {
    if (!only.empty() && only != id) return;
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.pass = false;
      out.details = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool in_budget = secs <= budget_seconds;
    bool ok = out.pass && in_budget;
    std::ostringstream line;
    line << id << (ok ? " PASS" : " FAIL") << " (" << secs << " s"
         << (in_budget ? "" : ", over budget") << ") - " << out.details;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
};

std::string vec_str(const std::vector<int64_t>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

double peak_rss_gb() {
  struct rusage ru;
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<double>(ru.ru_maxrss) / (1024.0 * 1024.0);
}

BettiOptions default_options() {
  BettiOptions opt;
  opt.strategy.seed = kDefaultSeed;
  opt.strategy.prime_count = 2;
  return opt;
}

std::vector<int64_t> betti_of(std::shared_ptr<const LieAlgebra> alg,
                              ComplexFlavor flavor, int maxdeg) {
  ComplexSpec spec{alg, flavor, maxdeg + 1};
  return betti(spec, 0, maxdeg, default_options()).betti_vector();
}

// ---------------------------------------------------------------------------

Outcome a1_tables() {
  for (int n = 2; n <= 6; ++n)
    for (auto name : {AlgebraName::So, AlgebraName::Sl2, AlgebraName::Hbar,
                      AlgebraName::Schrodinger, AlgebraName::Galilei,
                      AlgebraName::AbelianI}) {
      auto alg = LieAlgebra::build(name, n);
      TableReport rep = check_tables(*alg);
      if (!rep.all_pass())
        return {false, algebra_name_str(name) + " n=" + std::to_string(n) +
                           " has failing relations"};
    }
  return {true, "every printed relation reproduced exactly, n = 2..6"};
}

Outcome a2_dd_zero() {
  uint64_t columns = 0;
  for (int n = 2; n <= 4; ++n) {
    auto sch = LieAlgebra::build(AlgebraName::Schrodinger, n);
    for (auto flavor : {ComplexFlavor::Loday, ComplexFlavor::CETrivial,
                        ComplexFlavor::CECoefficients}) {
      ComplexSpec spec{sch, flavor, 5};
      for (int k = 2; k <= std::min(5, spec.degree_bound()); ++k) {
        ModuleSpace src = spec.space_at(k);
        for (uint64_t code = 0; code < src.dim(); ++code) {
          Chain unit(src);
          unit.add(code, 1);
          Chain dd = flavor == ComplexFlavor::Loday
                         ? loday_boundary_chain(loday_boundary_chain(unit))
                         : ce_boundary_chain(ce_boundary_chain(unit));
          if (!dd.is_zero())
            return {false, "d o d != 0 at n=" + std::to_string(n) +
                               " k=" + std::to_string(k)};
          ++columns;
        }
      }
    }
  }
  return {true, "exact on all " + std::to_string(columns) +
                    " basis columns, n = 2..4, degrees <= 5"};
}

Outcome a3_lemma32() {
  std::string notes;
  for (int n = 2; n <= 5; ++n) {
    LemmaSuiteReport rep = lemma_suite(n);
    for (const auto& cell : rep.cells) {
      if (cell.module != ModuleShape::Wedge) continue;
      int want = (cell.k == 0 || cell.k == 2 || cell.k == 2 * n - 2 ||
                  cell.k == 2 * n)
                     ? 1
                     : 0;
      if (cell.dim != want)
        return {false, "n=" + std::to_string(n) + " k=" + std::to_string(cell.k) +
                           " dim=" + std::to_string(cell.dim)};
      for (const auto& m : cell.membership)
        if (!m.inside)
          return {false, m.chain + " not in the computed kernel at n=" +
                             std::to_string(n) + " k=" + std::to_string(cell.k)};
    }
    if (n == 2 && !rep.zeta_beta_collision)
      return {false, "zeta_2 = beta_2 collision not detected"};
    if (n == 2) notes = "zeta_2 = beta_2 collision recorded (dim 1 at k = 2); ";
  }
  return {true, notes + "dims 1 at k in {0, 2, 2n-2, 2n} with beta, zeta, alpha "
                        "members, n = 3..5"};
}

Outcome a4_lemmas33_35() {
  std::string bad;
  for (int n = 2; n <= 5; ++n) {
    LemmaSuiteReport rep = lemma_suite(n);
    for (const auto& cell : rep.cells) {
      if (cell.module != ModuleShape::Sl2Wedge && cell.module != ModuleShape::IWedge)
        continue;
      if (cell.dim != 0)
        bad += " [" + module_shape_str(cell.module) + " n=" + std::to_string(n) +
               " k=" + std::to_string(cell.k) + " dim=" + std::to_string(cell.dim) +
               "]";
    }
  }
  if (!bad.empty())
    return {false, "nonzero invariants contradict the printed lemmas:" + bad};
  return {true, "invariant dimension 0 for all k, n = 2..5"};
}

Outcome a5_lemma34() {
  std::string bad, typo;
  for (int n = 3; n <= 5; ++n) {
    LemmaSuiteReport rep = lemma_suite(n);
    typo += " n=" + std::to_string(n) + ": dim[so,k=n-2]=" +
            std::to_string(rep.k_n_minus_2_dim) + ";";
    for (const auto& cell : rep.cells) {
      if (cell.module != ModuleShape::SoWedge) continue;
      int want = (cell.k == 2 || cell.k == 2 * n - 2) ? 1 : 0;
      if (cell.dim != want)
        bad += " [n=" + std::to_string(n) + " k=" + std::to_string(cell.k) +
               " dim=" + std::to_string(cell.dim) + " want=" +
               std::to_string(want) + "]";
      for (const auto& m : cell.membership)
        if (!m.inside) bad += " [" + m.chain + " not a member]";
    }
  }
  if (!bad.empty())
    return {false, "measured dims differ from the printed lemma:" + bad +
                       "  (typo record:" + typo + ")"};
  return {true, "dim 1 at k = 2 and 2n-2 with rho, gamma members; typo record:" +
                    typo};
}

Outcome a6_classical() {
  auto sl2 = LieAlgebra::build(AlgebraName::Sl2, 2);
  auto v1 = betti_of(sl2, ComplexFlavor::CETrivial, 3);
  if (v1 != std::vector<int64_t>{1, 0, 0, 1})
    return {false, "Betti(sl2) = " + vec_str(v1)};
  auto so3 = LieAlgebra::build(AlgebraName::So, 3);
  auto v2 = betti_of(so3, ComplexFlavor::CETrivial, 3);
  if (v2 != std::vector<int64_t>{1, 0, 0, 1})
    return {false, "Betti(so3) = " + vec_str(v2)};
  auto so4 = LieAlgebra::build(AlgebraName::So, 4);
  auto v3 = betti_of(so4, ComplexFlavor::CETrivial, 6);
  if (v3 != std::vector<int64_t>{1, 0, 0, 2, 0, 0, 1})
    return {false, "Betti(so4) = " + vec_str(v3)};
  return {true, "Betti(sl2) = (1,0,0,1), Betti(so3) = (1,0,0,1), "
                "Betti(so4) = (1,0,0,2,0,0,1), exact"};
}

std::string g_a7_matched;  // consumed by A13

Outcome a7_first_isomorphism() {
  auto sch = LieAlgebra::build(AlgebraName::Schrodinger, 3);
  auto v = betti_of(sch, ComplexFlavor::CETrivial, 12);
  // (1+t^3)^2 (1+t^4+t^6) vs (1+t^3)^2 (1+t^2+t^4+t^6)
  std::vector<int64_t> cand_theorem{1, 0, 0, 2, 1, 0, 2, 2, 0, 2, 1, 0, 1};
  std::vector<int64_t> cand_lemma{1, 0, 1, 2, 1, 2, 2, 2, 1, 2, 1, 0, 1};
  bool mt = (v == cand_theorem), ml = (v == cand_lemma);
  g_a7_matched = mt ? "theorem" : ml ? "lemma_2_1_unmodified" : "none";
  std::string details = "Betti(sch_3) = " + vec_str(v) + ", matched variant: " +
                        g_a7_matched +
                        (ml ? " (beta survives; spec expected the theorem's)" : "");
  return {mt != ml, details};
}

Outcome a8_semisimple_vanishing() {
  auto so3 = LieAlgebra::build(AlgebraName::So, 3);
  auto v = betti_of(so3, ComplexFlavor::Loday, 4);
  if (v != std::vector<int64_t>{1, 0, 0, 0, 0})
    return {false, "HL(so3) = " + vec_str(v)};
  return {true, "HL(so3) degrees 0..4 = (1,0,0,0,0), exact"};
}

std::vector<int64_t> g_a9_measured;  // consumed by A11

Outcome a9_leibniz_sch2() {
  auto sch = LieAlgebra::build(AlgebraName::Schrodinger, 2);
  ComplexSpec spec{sch, ComplexFlavor::Loday, 7};
  HomologyReport rep = betti(spec, 0, 6, default_options());
  if (rep.primes.size() < 2) return {false, "needs two 31-bit primes"};
  for (uint32_t p : rep.primes)
    if (p <= (1u << 30)) return {false, "prime below 2^30"};
  for (const auto& d : rep.degrees) {
    if (d.skipped) return {false, "degree skipped for budget"};
    if (!d.agreement)
      return {false, "prime disagreement at k=" + std::to_string(d.k)};
  }
  g_a9_measured = rep.betti_vector();
  PredictOptions po;
  po.gamma_degree = 0;
  auto p0 = predicted_series(SeriesTarget::LeibnizSch, 2, po, 6);
  po.gamma_degree = 1;
  auto p1 = predicted_series(SeriesTarget::LeibnizSch, 2, po, 6);
  double rss = peak_rss_gb();
  if (rss > 8.0) return {false, "peak rss above 8 GB"};
  return {true, "HL(sch_2) 0..6 = " + vec_str(g_a9_measured) +
                    ", two agreeing primes; predicted (gamma 2n-2) = " +
                    vec_str(p0.c) + ", (gamma 2n-1) = " + vec_str(p1.c) +
                    " [recorded comparison; n = 2 is outside the semisimplicity "
                    "hypothesis]; peak rss " +
                    std::to_string(rss) + " GB"};
}

Outcome a10_leibniz_sch3() {
  auto sch = LieAlgebra::build(AlgebraName::Schrodinger, 3);
  ComplexSpec spec{sch, ComplexFlavor::Loday, 6};
  HomologyReport rep = betti(spec, 0, 5, default_options());
  for (const auto& d : rep.degrees) {
    if (d.skipped) return {false, "degree skipped for budget"};
    if (!d.agreement)
      return {false, "prime disagreement at k=" + std::to_string(d.k)};
  }
  auto v = rep.betti_vector();
  int64_t b4 = v[4], b5 = v[5];
  bool opt_a = (b4 == 2 && b5 == 0);  // gamma~ degree 2n-2 = 4, theorem as stated
  bool opt_b = (b4 == 1 && b5 == 1);  // gamma~ degree 2n-1 = 5
  std::string matched = opt_a ? "gamma_degree_2n-2 (theorem as stated)"
                        : opt_b ? "gamma_degree_2n-1"
                                : "none";
  double rss = peak_rss_gb();
  std::string details = "HL(sch_3) 0..5 = " + vec_str(v) +
                        ", (betti4, betti5) = (" + std::to_string(b4) + "," +
                        std::to_string(b5) + "), matched option: " + matched +
                        "; peak rss " + std::to_string(rss) + " GB";
  if (rss > 8.0) return {false, details + " (over 8 GB)"};
  return {opt_a != opt_b, details};
}

Outcome a11_galilei() {
  if (g_a9_measured.empty()) {
    auto sch = LieAlgebra::build(AlgebraName::Schrodinger, 2);
    ComplexSpec spec{sch, ComplexFlavor::Loday, 5};
    g_a9_measured = betti(spec, 0, 4, default_options()).betti_vector();
  }
  auto gal = LieAlgebra::build(AlgebraName::Galilei, 2);
  auto measured = betti_of(gal, ComplexFlavor::Loday, 4);
  PoincareSeries ms(4);
  for (int d = 0; d <= 4; ++d) ms.c[d] = g_a9_measured[d];
  PoincareSeries predicted = free_product(ms, PoincareSeries::tensor_algebra(1, 4));
  bool ok = (measured == predicted.c);
  return {ok, "HL(galilei_2) 0..4 = " + vec_str(measured) +
                  " vs free-product of measured HL(sch_2) with T(R) = " +
                  vec_str(predicted.c)};
}

Outcome a12_series_laws() {
  std::mt19937_64 rng(kDefaultSeed);
  auto word_count = [](const PoincareSeries& A, const PoincareSeries& B,
                       int deg) -> int64_t {
    auto rec = [&](auto&& self, int which, int d) -> int64_t {
      const PoincareSeries& S = which == 0 ? A : B;
      int64_t total = 0;
      for (int e = 1; e <= d; ++e) {
        if (!S.c[e]) continue;
        total += S.c[e] * (e == d ? 1 : self(self, 1 - which, d - e));
      }
      return total;
    };
    if (deg == 0) return 1;
    return rec(rec, 0, deg) + rec(rec, 1, deg);
  };
  for (int trial = 0; trial < 100; ++trial) {
    PoincareSeries a = PoincareSeries::one(8), b = PoincareSeries::one(8),
                   c = PoincareSeries::one(8);
    for (int d = 1; d <= 8; ++d) {
      a.c[d] = rng() % 4;
      b.c[d] = rng() % 4;
      c.c[d] = rng() % 3;
    }
    PoincareSeries fp = free_product(a, b);
    for (int d = 0; d <= 8; ++d)
      if (fp.c[d] != word_count(a, b, d))
        return {false, "free_product disagrees with the word counter"};
    if (free_product(a, PoincareSeries::one(8)) != a)
      return {false, "free_product unit law"};
    if (tensor(a, PoincareSeries::one(8)) != a) return {false, "tensor unit law"};
    if (free_product(free_product(a, b), c) != free_product(a, free_product(b, c)))
      return {false, "free_product associativity"};
    if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c)))
      return {false, "tensor associativity"};
  }
  return {true, "word-counter agreement to degree 8 on 100 random pairs; "
                "unit and associativity laws"};
}

Outcome a13_claims() {
  if (g_a7_matched.empty()) a7_first_isomorphism();
  std::string details;
  for (int n = 2; n <= 3; ++n) {
    ClaimsReport rep = claims_report(n);
    if (rep.rows.size() != 4) return {false, "expected 4 convention rows"};
    details += "n=" + std::to_string(n) + ": ";
    for (const auto& row : rep.rows)
      details += "[" + row.convention + ": d(rho_bar) " + row.rho_bar_verdict +
                 ", d(rho) " + row.rho_verdict + "] ";
    // consistency: beta is a boundary iff the theorem's polynomial matched
    bool want_boundary = (g_a7_matched == "theorem");
    if (rep.beta_is_boundary != want_boundary)
      return {false, details + "beta fate (boundary=" +
                         (rep.beta_is_boundary ? "true" : "false") +
                         ") inconsistent with the matched polynomial " +
                         g_a7_matched};
    details += "beta_is_boundary=" +
               std::string(rep.beta_is_boundary ? "true" : "false") + "; ";
  }
  return {true, details + "consistent with A7's matched variant (" +
                    g_a7_matched + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  Suite suite;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) suite.only = argv[i + 1];

  suite.run("A1", 1, a1_tables);
  suite.run("A2", 60, a2_dd_zero);
  suite.run("A3", 60, a3_lemma32);
  suite.run("A4", 120, a4_lemmas33_35);
  suite.run("A5", 120, a5_lemma34);
  suite.run("A6", 10, a6_classical);
  suite.run("A7", 300, a7_first_isomorphism);
  suite.run("A8", 10, a8_semisimple_vanishing);
  suite.run("A9", 600, a9_leibniz_sch2);
  suite.run("A10", 1800, a10_leibniz_sch3);
  suite.run("A11", 600, a11_galilei);
  suite.run("A12", 10, a12_series_laws);
  suite.run("A13", 120, a13_claims);

  if (suite.failures)
    std::cout << suite.failures << " criteria failed" << std::endl;
  else
    std::cout << "all criteria passed" << std::endl;
  return suite.failures;
}
