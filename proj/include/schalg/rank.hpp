#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "schalg/prime_field.hpp"
#include "schalg/sparse.hpp"

namespace schalg {

inline constexpr uint64_t kDefaultSeed = 20240817;
inline constexpr uint64_t kDefaultMemoryCap = 6ull << 30;

enum class FieldKind { Rationals, PrimeField };
enum class StrategyKind { Auto, Dense, Sparse, Blackbox };
enum class RankMethod { DenseEchelon, SparseElimination, Blackbox };

std::string strategy_str(StrategyKind s);
StrategyKind parse_strategy(const std::string& s);
std::string method_str(RankMethod m);

struct RankStrategy {
  StrategyKind kind = StrategyKind::Auto;
  FieldKind field = FieldKind::PrimeField;
  int prime_count = 2;
  uint64_t seed = kDefaultSeed;
  uint64_t memory_cap = kDefaultMemoryCap;
  std::vector<uint32_t> primes;  // explicit primes (overrides seed-derived)
};

struct RankCertificate {
  uint64_t rank = 0;
  RankMethod method = RankMethod::DenseEchelon;
  std::vector<uint32_t> primes_used;
  bool agreement = true;  // vacuously true over the rationals
};

// Budget abort; carries partial elimination statistics.
struct BudgetError : std::runtime_error {
  uint64_t pivots_done;
  uint64_t live_nnz;
  BudgetError(const std::string& what, uint64_t pivots, uint64_t nnz)
      : std::runtime_error(what), pivots_done(pivots), live_nnz(nnz) {}
};

// Exact rank. PrimeField mode runs prime_count primes (3 on disagreement)
// and reports per-prime agreement; the modular rank is a certified lower
// bound for the rational rank.
RankCertificate rank(const SparseMatrix& m, const RankStrategy& strategy);

// Same engine over a streamed/materialized integer matrix mod one prime.
uint64_t rank_mod_p(const IntCsc& m, uint32_t p, StrategyKind kind,
                    uint64_t seed, uint64_t memory_cap);

// Wiedemann rank over a restartable column stream; the matrix is never
// materialized (one stream pass per operator application).
uint64_t blackbox_rank_stream(ColumnStream& s, uint32_t p, uint64_t seed);

// Right null space basis over the rationals, reduced echelon form with
// leftmost-column pivots (deterministic).
std::vector<SparseVector> kernel_basis(const SparseMatrix& m,
                                       uint64_t memory_cap = kDefaultMemoryCap);

// Is b in the column span of m? (exact, rationals)
bool in_column_span(const SparseMatrix& m, const SparseVector& b);

uint64_t rank_rational(const SparseMatrix& m,
                       uint64_t memory_cap = kDefaultMemoryCap);

}  // namespace schalg
