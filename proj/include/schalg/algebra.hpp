#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "schalg/rational.hpp"

namespace schalg {

enum class LabelKind { Rotation, A, B, C, D, Boost, Momentum };

// One basis vector field of the realization:
//   Rotation(i,j) = -x_i d/dx^j + x_j d/dx^i          (1 <= i < j <= n)
//   A = -x_{n+1} d/dx^{n+1} + x_{n+2} d/dx^{n+2}
//   B =  x_{n+1} d/dx^{n+2}
//   C = -x_{n+2} d/dx^{n+1}
//   D =  x_{n+1} d/dx^{n+1} + x_{n+2} d/dx^{n+2}
//   Boost(i)    = x_i d/dx^{n+1}                      (1 <= i <= n)
//   Momentum(i) = x_i d/dx^{n+2}
struct BasisLabel {
  LabelKind kind;
  int i = 0;
  int j = 0;

  std::string str() const;
  bool operator==(const BasisLabel&) const = default;
};

// Dense (n+2)x(n+2) matrix of rationals; realization x_a d/dx^b -> E_ab.
struct RealMatrix {
  int size = 0;
  std::vector<Rational> m;  // row-major

  explicit RealMatrix(int s) : size(s), m(s * s, Rational(0)) {}
  Rational& at(int r, int c) { return m[r * size + c]; }
  const Rational& at(int r, int c) const { return m[r * size + c]; }
  bool operator==(const RealMatrix&) const = default;
};

RealMatrix realize(int n, const BasisLabel& lab);
RealMatrix commutator(const RealMatrix& a, const RealMatrix& b);

enum class AlgebraName { So, Sl2, Hbar, Schrodinger, Galilei, AbelianI };

AlgebraName parse_algebra_name(const std::string& s);  // throws on unknown
std::string algebra_name_str(AlgebraName a);

struct StructureTerm {
  int k;
  Rational c;
};

// Finite-dimensional Lie algebra with derived structure constants and
// component tags. Immutable after construction.
class LieAlgebra {
 public:
  static std::shared_ptr<const LieAlgebra> build(AlgebraName name, int n);
  // generic abelian algebra of any dimension (series/test helper)
  static std::shared_ptr<const LieAlgebra> abelian(int dim);

  int dim() const { return static_cast<int>(basis_.size()); }
  int n() const { return n_; }
  AlgebraName name() const { return name_; }
  const std::vector<BasisLabel>& basis() const { return basis_; }
  const BasisLabel& label(int i) const { return basis_[i]; }
  const RealMatrix& matrix(int i) const { return matrices_[i]; }

  // [e_i, e_j] as a sparse combination of basis vectors.
  std::span<const StructureTerm> br(int i, int j) const {
    return table_[i * dim() + j];
  }

  // component tags (indices into the basis; empty when absent)
  const std::vector<int>& so_part() const { return so_; }
  const std::vector<int>& sl2_part() const { return sl2_; }
  const std::vector<int>& boosts() const { return boosts_; }
  const std::vector<int>& momenta() const { return momenta_; }
  const std::vector<int>& ideal_part() const { return ideal_; }  // boosts+momenta
  const std::vector<int>& hbar_part() const { return hbar_; }    // so+sl2
  const std::vector<int>& dilation_part() const { return dilation_; }

  // Basis of the universal abelian grading: integer vectors g with
  // g_i + g_j = g_k whenever c_ij^k != 0. The boundary maps of every
  // complex over this algebra preserve the induced multidegree.
  const std::vector<std::vector<int64_t>>& gradings() const { return gradings_; }

  int index_of(const BasisLabel& lab) const;  // -1 when absent

 private:
  LieAlgebra() = default;

  AlgebraName name_{};
  int n_ = 0;
  std::vector<BasisLabel> basis_;
  std::vector<RealMatrix> matrices_;
  std::vector<std::vector<StructureTerm>> table_;  // dim*dim entries
  std::vector<int> so_, sl2_, boosts_, momenta_, ideal_, hbar_, dilation_;
  std::vector<std::vector<int64_t>> gradings_;
};

// Sparse element, coefficients over the algebra basis.
struct Element {
  std::vector<std::pair<int, Rational>> terms;  // sorted by index, no zeros

  static Element basis(int i) { return Element{{{i, Rational(1)}}}; }
  bool is_zero() const { return terms.empty(); }
  void add_term(int i, const Rational& c);
  void normalize();
  bool operator==(const Element&) const = default;
};

Element bracket(const LieAlgebra& L, const Element& x, const Element& y);

struct TableRelation {
  std::string text;
  bool pass;
};

struct TableReport {
  std::vector<TableRelation> relations;
  bool all_pass() const;
};

// Evaluates every printed bracket relation of the source tables against the
// derived structure constants.
TableReport check_tables(const LieAlgebra& L);

}  // namespace schalg
