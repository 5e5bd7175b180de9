#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "schalg/complexes.hpp"
#include "schalg/invariants.hpp"
#include "schalg/series.hpp"

namespace schalg {

struct VerifyConfig {
  int n_min = 2;
  int n_max = 3;
  int leibniz_max_degree = 4;
  int prime_count = 2;
  uint64_t seed = kDefaultSeed;
  uint64_t memory_cap = kDefaultMemoryCap;
  StrategyKind strategy = StrategyKind::Auto;
  int jobs = 0;
};

enum class VerifyScope { Lemmas, Theorem, Galilei, All };
VerifyScope parse_verify_scope(const std::string& s);

// exit codes: 0 all hard assertions pass, 1 mathematical mismatch,
// 75 budget abort
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBudget = 75;

struct VerifyStep {
  std::string name;
  std::string status;  // "pass" | "fail" | "finding"
  std::string details;
  double elapsed_ms = 0;
};

struct VerifyResult {
  std::vector<VerifyStep> steps;
  int exit_code = kExitOk;
  nlohmann::ordered_json report;
};

VerifyResult run_verify(VerifyScope scope, const VerifyConfig& cfg);

// JSON emitters shared with the CLI
nlohmann::ordered_json homology_report_json(const HomologyReport& rep);
nlohmann::ordered_json claims_report_json(const ClaimsReport& rep);
nlohmann::ordered_json lemma_suite_json(const LemmaSuiteReport& rep);
nlohmann::ordered_json invariant_report_json(const InvariantReport& rep);

}  // namespace schalg
