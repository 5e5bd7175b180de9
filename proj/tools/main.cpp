#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schalg/verify.hpp"

using namespace schalg;
using nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  uint64_t seed = kDefaultSeed;
  int primes = 2;
  uint64_t memory_cap = kDefaultMemoryCap;
  std::string strategy = "auto";
  int jobs = 0;
};

void emit(const ordered_json& j, const std::string& format,
          const std::string& output) {
  std::string text;
  if (format == "json") {
    text = j.dump(2) + "\n";
  } else if (format == "csv" || format == "table") {
    // degree-indexed tables mirror the JSON "degrees"/series arrays
    std::string sep = format == "csv" ? "," : "  ";
    if (j.contains("degrees")) {
      text = "k" + sep + "dim" + sep + "rank_dk" + sep + "rank_dk1" + sep +
             "betti\n";
      for (const auto& d : j["degrees"])
        text += std::to_string(d["k"].get<int>()) + sep +
                std::to_string(d["dim"].get<uint64_t>()) + sep +
                std::to_string(d["rank_dk"].get<uint64_t>()) + sep +
                std::to_string(d["rank_dk1"].get<uint64_t>()) + sep +
                std::to_string(d["betti"].get<int64_t>()) + "\n";
    } else if (j.contains("series")) {
      text = "degree";
      for (const auto& col : j["series"].items()) text += sep + col.key();
      text += "\n";
      size_t len = 0;
      for (const auto& col : j["series"].items())
        len = std::max(len, col.value().size());
      for (size_t d = 0; d < len; ++d) {
        text += std::to_string(d);
        for (const auto& col : j["series"].items())
          text += sep + (d < col.value().size()
                             ? std::to_string(col.value()[d].get<int64_t>())
                             : "");
        text += "\n";
      }
    } else {
      text = j.dump(2) + "\n";
    }
  } else {
    throw CLI::ValidationError("--emit", "unknown format " + format);
  }
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    out << text;
  }
}

RankStrategy make_strategy(const GlobalOpts& g) {
  RankStrategy s;
  s.kind = parse_strategy(g.strategy);
  s.prime_count = g.primes;
  s.seed = g.seed;
  s.memory_cap = g.memory_cap;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homology computations for the Schrodinger and Galilei "
               "Lie algebras"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "RNG seed (primes, preconditioners)");
  app.add_option("--primes", g.primes, "number of 31-bit primes for modular ranks");
  app.add_option("--memory-cap", g.memory_cap, "memory cap in bytes");
  app.add_option("--strategy", g.strategy, "rank strategy: auto|dense|sparse|blackbox");
  app.add_option("--jobs", g.jobs, "worker threads (0 = hardware)");

  std::string emit_format = "json", output;

  // algebra info
  auto* algebra = app.add_subcommand("algebra", "algebra constructions");
  auto* info = algebra->add_subcommand("info", "dimensions, basis, structure constants");
  std::string alg_name = "schrodinger";
  int n = 3;
  info->add_option("--name", alg_name, "so|sl2|hbar|schrodinger|galilei|abelian_I");
  info->add_option("--n", n, "ambient dimension (n >= 2)");
  info->add_option("--emit", emit_format);
  info->add_option("--output", output);

  // chains show
  auto* chains = app.add_subcommand("chains", "distinguished chains");
  auto* show = chains->add_subcommand("show", "print a named chain");
  std::string chain_name = "beta";
  show->add_option("--name", chain_name,
                   "alpha|beta|zeta|rho|rho_bar|gamma|alpha_tilde|zeta_tilde|gamma_tilde");
  show->add_option("--n", n);
  show->add_option("--emit", emit_format);
  show->add_option("--output", output);

  // invariants
  auto* inv = app.add_subcommand("invariants", "invariant subspaces");
  std::string acting = "hbar", module_shape = "wedge";
  int inv_k = 2;
  inv->add_option("--n", n);
  inv->add_option("--acting", acting, "hbar|so|sl2");
  inv->add_option("--module", module_shape, "wedge|sl2_wedge|so_wedge|i_wedge");
  inv->add_option("--k", inv_k, "wedge degree");
  inv->add_option("--emit", emit_format);
  inv->add_option("--output", output);

  // homology
  auto* hom = app.add_subcommand("homology", "Betti numbers of a complex");
  std::string complex_name = "leibniz";
  int max_degree = 4;
  hom->add_option("--algebra", alg_name);
  hom->add_option("--n", n);
  hom->add_option("--complex", complex_name, "leibniz|ce|ce_coefficients");
  hom->add_option("--max-degree", max_degree);
  hom->add_option("--emit", emit_format);
  hom->add_option("--output", output);

  // series predict
  auto* series_cmd = app.add_subcommand("series", "Poincare series");
  auto* predict = series_cmd->add_subcommand("predict", "predicted graded dimensions");
  std::string target = "leibniz_sch", gamma_degree = "2n-2";
  bool beta_included = false;
  predict->add_option("--target", target, "lie_sch|leibniz_sch|leibniz_galilei");
  predict->add_option("--n", n);
  predict->add_option("--gamma-degree", gamma_degree, "2n-2|2n-1|both");
  predict->add_flag("--beta-included", beta_included);
  predict->add_option("--max-degree", max_degree);
  predict->add_option("--emit", emit_format);
  predict->add_option("--output", output);

  // verify
  auto* verify = app.add_subcommand("verify", "verification suites");
  VerifyConfig vcfg;
  std::string scope_str;
  verify->add_option("scope", scope_str, "lemmas|theorem|galilei|all")->required();
  verify->add_option("--n", vcfg.n_max, "largest n (lemmas: the single n)");
  verify->add_option("--n-min", vcfg.n_min);
  verify->add_option("--leibniz-max-degree", vcfg.leibniz_max_degree);
  verify->add_option("--emit", emit_format);
  verify->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (info->parsed()) {
      auto alg = LieAlgebra::build(parse_algebra_name(alg_name), n);
      ordered_json j;
      j["name"] = algebra_name_str(alg->name());
      j["n"] = alg->n();
      j["dim"] = alg->dim();
      j["basis"] = ordered_json::array();
      for (const auto& b : alg->basis()) j["basis"].push_back(b.str());
      j["structure"] = ordered_json::array();
      for (int i = 0; i < alg->dim(); ++i)
        for (int jj = 0; jj < alg->dim(); ++jj)
          for (const auto& t : alg->br(i, jj))
            j["structure"].push_back({{"i", i},
                                      {"j", jj},
                                      {"k", t.k},
                                      {"c", to_string(t.c)}});
      j["gradings"] = alg->gradings();
      emit(j, emit_format, output);
    } else if (show->parsed()) {
      Chain ch = named_chain(parse_chain_name(chain_name), n);
      ordered_json j;
      j["name"] = chain_name;
      j["n"] = n;
      j["space"] = ch.space.describe();
      j["dim"] = ch.space.dim();
      j["terms"] = ch.str();
      j["term_count"] = ch.terms.size();
      emit(j, emit_format, output);
    } else if (inv->parsed()) {
      auto sch = LieAlgebra::build(AlgebraName::Schrodinger, n);
      ModuleSpace space = lemma_module(sch, parse_module_shape(module_shape), inv_k);
      InvariantReport rep =
          invariant_subspace(sch, parse_acting(acting), space, std::nullopt,
                             g.memory_cap);
      emit(invariant_report_json(rep), emit_format, output);
    } else if (hom->parsed()) {
      auto alg = LieAlgebra::build(parse_algebra_name(alg_name), n);
      ComplexSpec spec{alg, parse_flavor(complex_name), max_degree + 1};
      BettiOptions opt;
      opt.strategy = make_strategy(g);
      opt.jobs = g.jobs;
      HomologyReport rep = betti(spec, 0, max_degree, opt);
      emit(homology_report_json(rep), emit_format, output);
    } else if (predict->parsed()) {
      ordered_json j;
      j["target"] = target;
      j["n"] = n;
      ordered_json cols;
      auto run = [&](int gd, const std::string& label) {
        PredictOptions po;
        po.beta_included = beta_included;
        po.gamma_degree = gd;
        po.seed = g.seed;
        PoincareSeries s =
            predicted_series(parse_series_target(target), n, po, max_degree);
        cols[label] = s.c;
      };
      if (gamma_degree == "both") {
        run(0, "gamma_2n-2");
        run(1, "gamma_2n-1");
      } else if (gamma_degree == "2n-1") {
        run(1, "gamma_2n-1");
      } else {
        run(0, "gamma_2n-2");
      }
      j["series"] = cols;
      emit(j, emit_format, output);
    } else if (verify->parsed()) {
      vcfg.seed = g.seed;
      vcfg.prime_count = g.primes;
      vcfg.memory_cap = g.memory_cap;
      vcfg.strategy = parse_strategy(g.strategy);
      vcfg.jobs = g.jobs;
      VerifyScope scope = parse_verify_scope(scope_str);
      if (scope == VerifyScope::Lemmas && verify->count("--n"))
        vcfg.n_min = vcfg.n_max;
      if (vcfg.n_min < 2 || vcfg.n_max < vcfg.n_min) {
        std::cerr << "invalid n range\n";
        return kExitUsage;
      }
      VerifyResult res = run_verify(scope, vcfg);
      for (const auto& s : res.steps)
        std::cout << (s.status == "pass" ? "PASS " : s.status == "finding"
                          ? "NOTE "
                          : "FAIL ")
                  << s.name << " — " << s.details << "\n";
      if (!output.empty()) {
        std::ofstream out(output);
        out << res.report.dump(2) << "\n";
      }
      return res.exit_code;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
