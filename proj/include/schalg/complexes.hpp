#pragma once

#include <optional>

#include "schalg/named_chains.hpp"
#include "schalg/rank.hpp"
#include "schalg/spaces.hpp"

namespace schalg {

enum class ComplexFlavor { Loday, CETrivial, CECoefficients };

std::string flavor_str(ComplexFlavor f);
ComplexFlavor parse_flavor(const std::string& s);

// Loday:          R <-0- L <-[,]- L^{(x)2} <- ...        slots over the whole basis
// CETrivial:      R <- Lambda^1(L) <- Lambda^2(L) <- ... wedge over the whole basis
// CECoefficients: L <- L(x)Lambda^1(I) <- ...            wedge over the abelian ideal,
//                 coefficients = the algebra itself (adjoint restriction)
struct ComplexSpec {
  std::shared_ptr<const LieAlgebra> algebra;
  ComplexFlavor flavor = ComplexFlavor::CETrivial;
  int max_degree = 6;

  ModuleSpace space_at(int k) const;
  uint64_t dim_at(int k) const;
  int degree_bound() const;  // wedge vanishes above this; Loday unbounded
};

// Sign conventions for the CE differential. The printed formula
//   d(v(x)g_1^...^g_k) = sum_j (-1)^j [v,g_j](x)... + sum_{i<j} (-1)^{i+j-1} v(x)[g_i,g_j]^...
// is the canonical one; the alternatives exist only for claims_report.
struct CeConvention {
  bool reverse_coeff_bracket = false;  // use [g_j, v] in the first sum
  bool flip_second_sum = false;        // use (-1)^{i+j} in the second sum
  std::string str() const;
};

// chain-level boundaries (exact rational arithmetic)
Chain loday_boundary_chain(const Chain& w);
Chain ce_boundary_chain(const Chain& w, const CeConvention& conv = {});

// matrix-level boundaries d_k : C_k -> C_{k-1} (column per degree-k monomial)
SparseMatrix loday_boundary(std::shared_ptr<const LieAlgebra> L, int k);
SparseMatrix ce_boundary(const ComplexSpec& spec, int k);

struct DegreeReport {
  int k = 0;
  uint64_t dim = 0;
  uint64_t rank_dk = 0;    // rank of d_k : C_k -> C_{k-1}
  uint64_t rank_dk1 = 0;   // rank of d_{k+1}
  int64_t betti = 0;
  bool skipped = false;    // budget
  bool agreement = true;
  std::string method;
  double elapsed_ms = 0;
};

struct HomologyReport {
  std::string algebra;
  int n = 0;
  std::string flavor;
  std::vector<DegreeReport> degrees;
  std::vector<uint32_t> primes;
  uint64_t seed = 0;
  double elapsed_ms = 0;

  std::vector<int64_t> betti_vector() const;
  bool euler_identity_holds() const;  // full CE complexes only
};

struct BettiOptions {
  RankStrategy strategy;
  int jobs = 0;                          // 0 = hardware concurrency
  uint64_t eager_budget = 3000000;       // materialized block elimination
  uint64_t blackbox_budget = 40000000;   // streamed black-box beyond eager
};

HomologyReport betti(const ComplexSpec& spec, int from_degree, int to_degree,
                     const BettiOptions& opt = {});

// Theorem 3.6 chain identities, evaluated under the canonical convention and
// the three alternatives. Asserts nothing; classifies each result.
struct ClaimsRow {
  std::string convention;
  std::string rho_bar_verdict;  // "zero" | "c * beta" | "other (nonzero)"
  std::string rho_verdict;      // "zero" | "c * sum y_i(x)y_{n+i}" | "other (nonzero)"
  bool rho_bar_matches_paper = false;  // equals -2(n-1) beta_n
  bool rho_matches_paper = false;      // equals -2(n-1) sum y_i(x)y_{n+i}
  bool rho_nonzero = false;
};

struct ClaimsReport {
  int n = 0;
  std::vector<ClaimsRow> rows;
  bool beta_is_boundary = false;  // beta_n in im(d_3) of CE-trivial(sch_n), exact
};

ClaimsReport claims_report(int n);

// a == c*b for some scalar c (b != 0)
std::optional<Rational> proportion(const Chain& a, const Chain& b);

}  // namespace schalg
