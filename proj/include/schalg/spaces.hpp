#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "schalg/algebra.hpp"
#include "schalg/rational.hpp"

namespace schalg {

enum class SpaceKind { Wedge, Tensor, CoeffWedge };

// Enumerated basis of Lambda^k(V), V^{tensor k} or g (x) Lambda^k(V), where V
// (and g) are subsets of an ambient algebra's basis. Codecs:
//   Wedge: strictly increasing position tuples <-> colex rank,
//          rank(s_1<...<s_k) = sum C(s_i, i)
//   Tensor: position tuples <-> base-|V| integer, first slot most significant
//   CoeffWedge: index = coeff_pos * C(|V|, k) + wedge_rank
class ModuleSpace {
 public:
  static ModuleSpace wedge(std::shared_ptr<const LieAlgebra> alg,
                           std::vector<int> factors, int k);
  static ModuleSpace tensor(std::shared_ptr<const LieAlgebra> alg,
                            std::vector<int> factors, int k);
  static ModuleSpace coeff_wedge(std::shared_ptr<const LieAlgebra> alg,
                                 std::vector<int> coeff, std::vector<int> factors,
                                 int k);

  SpaceKind kind() const { return kind_; }
  int k() const { return k_; }
  uint64_t dim() const { return dim_; }
  const LieAlgebra& algebra() const { return *alg_; }
  std::shared_ptr<const LieAlgebra> algebra_ptr() const { return alg_; }
  const std::vector<int>& factors() const { return factors_; }
  const std::vector<int>& coeff() const { return coeff_; }

  // position of an ambient index within factors()/coeff(); -1 when absent
  int factor_pos(int ambient_index) const;
  int coeff_pos(int ambient_index) const;

  // wedge/tensor codecs over positions; tuple length = k
  uint64_t rank_tuple(std::span<const int> positions) const;
  void unrank_tuple(uint64_t r, std::vector<int>& positions) const;
  // CoeffWedge: full index from coeff position + wedge positions
  uint64_t rank_with_coeff(int coeff_position, std::span<const int> positions) const;
  uint64_t wedge_count() const { return wedge_count_; }

  std::string describe() const;
  bool operator==(const ModuleSpace& o) const {
    return kind_ == o.kind_ && k_ == o.k_ && factors_ == o.factors_ &&
           coeff_ == o.coeff_ && alg_ == o.alg_;
  }

 private:
  SpaceKind kind_{};
  std::shared_ptr<const LieAlgebra> alg_;
  std::vector<int> factors_;
  std::vector<int> coeff_;
  int k_ = 0;
  uint64_t dim_ = 0;
  uint64_t wedge_count_ = 0;  // C(|factors|,k) for wedge kinds, |factors|^k for tensor
  std::vector<int> factor_pos_, coeff_pos_;  // ambient index -> position
};

uint64_t binomial(uint64_t m, uint64_t k);

// Sparse chain: basis-index -> exact coefficient, sorted, no zeros.
struct Chain {
  ModuleSpace space;
  std::vector<std::pair<uint64_t, Rational>> terms;

  explicit Chain(ModuleSpace s) : space(std::move(s)) {}
  bool is_zero() const { return terms.empty(); }
  void add(uint64_t index, const Rational& c);
  void normalize();
  Chain& operator+=(const Chain& o);
  Chain& operator*=(const Rational& s);
  bool operator==(const Chain& o) const {
    return space == o.space && terms == o.terms;
  }
  std::string str() const;  // human-readable monomial expansion
};

// sorts a tuple in place, returns the permutation sign; 0 on repeats
int sort_sign(std::vector<int>& t);

}  // namespace schalg
