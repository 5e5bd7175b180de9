#pragma once

#include <optional>

#include "schalg/complexes.hpp"
#include "schalg/named_chains.hpp"
#include "schalg/rank.hpp"

namespace schalg {

enum class ActingPart { Hbar, So, Sl2 };
enum class ModuleShape { Wedge, SoWedge, Sl2Wedge, IWedge };

ActingPart parse_acting(const std::string& s);
ModuleShape parse_module_shape(const std::string& s);
std::string acting_str(ActingPart a);
std::string module_shape_str(ModuleShape m);

struct MembershipCheck {
  std::string chain;
  bool inside = false;
};

struct InvariantReport {
  std::string acting;
  std::string module;
  int k = 0;
  std::optional<std::pair<int, int>> bidegree;  // (r, s) restriction, if any
  uint64_t space_dim = 0;
  int dim = 0;
  std::vector<Chain> basis;
  std::vector<MembershipCheck> membership;
};

// Kernel of the stacked right-action matrices of every generator of the
// acting subalgebra (exact rationals). When `bidegree` is set, columns are
// restricted to wedge monomials with r factors in I^1 and s in I^2; the
// action itself is unrestricted.
InvariantReport invariant_subspace(std::shared_ptr<const LieAlgebra> alg,
                                   ActingPart acting, const ModuleSpace& space,
                                   std::optional<std::pair<int, int>> bidegree =
                                       std::nullopt,
                                   uint64_t memory_cap = kDefaultMemoryCap);

ModuleSpace lemma_module(std::shared_ptr<const LieAlgebra> alg, ModuleShape shape,
                         int k);

struct LemmaCell {
  ModuleShape module;
  int k = 0;
  int dim = 0;
  int predicted = 0;
  bool matches = true;
  std::vector<MembershipCheck> membership;
};

struct LemmaSuiteReport {
  int n = 0;
  std::vector<LemmaCell> cells;
  // dim of the [so (x) Lambda^{n-2}] cell, kept for the typo record
  int k_n_minus_2_dim = 0;
  bool zeta_beta_collision = false;  // n = 2 only: zeta_2 == beta_2
  bool all_match() const;
  std::vector<const LemmaCell*> mismatches() const;
};

// Dimensions of [Lambda^k(I)]^{hbar}, [sl2 (x) Lambda^k]^{hbar},
// [so (x) Lambda^k]^{hbar}, [I (x) Lambda^k]^{hbar} for k = 0..2n, compared
// against the source predictions; mismatches are findings, not errors.
LemmaSuiteReport lemma_suite(int n, uint64_t memory_cap = kDefaultMemoryCap);

}  // namespace schalg
