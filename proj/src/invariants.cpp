#include "schalg/invariants.hpp"

#include <algorithm>

#include "schalg/action.hpp"

namespace schalg {

ActingPart parse_acting(const std::string& s) {
  if (s == "hbar") return ActingPart::Hbar;
  if (s == "so") return ActingPart::So;
  if (s == "sl2") return ActingPart::Sl2;
  throw std::invalid_argument("unknown acting part: " + s);
}

std::string acting_str(ActingPart a) {
  switch (a) {
    case ActingPart::Hbar: return "hbar";
    case ActingPart::So: return "so";
    case ActingPart::Sl2: return "sl2";
  }
  return "?";
}

ModuleShape parse_module_shape(const std::string& s) {
  if (s == "wedge") return ModuleShape::Wedge;
  if (s == "so_wedge" || s == "so⊗wedge") return ModuleShape::SoWedge;
  if (s == "sl2_wedge" || s == "sl2⊗wedge") return ModuleShape::Sl2Wedge;
  if (s == "i_wedge" || s == "I⊗wedge") return ModuleShape::IWedge;
  throw std::invalid_argument("unknown module shape: " + s);
}

std::string module_shape_str(ModuleShape m) {
  switch (m) {
    case ModuleShape::Wedge: return "wedge";
    case ModuleShape::SoWedge: return "so_wedge";
    case ModuleShape::Sl2Wedge: return "sl2_wedge";
    case ModuleShape::IWedge: return "i_wedge";
  }
  return "?";
}

namespace {

const std::vector<int>& acting_indices(const LieAlgebra& L, ActingPart a) {
  switch (a) {
    case ActingPart::Hbar: return L.hbar_part();
    case ActingPart::So: return L.so_part();
    case ActingPart::Sl2: return L.sl2_part();
  }
  throw std::logic_error("bad acting part");
}

// number of wedge factors lying in I^1 for a given monomial
int boost_count(const ModuleSpace& s, const std::vector<int>& tup) {
  const auto& L = s.algebra();
  int r = 0;
  for (int p : tup)
    if (L.label(s.factors()[p]).kind == LabelKind::Boost) ++r;
  return r;
}

}  // namespace

InvariantReport invariant_subspace(std::shared_ptr<const LieAlgebra> alg,
                                   ActingPart acting, const ModuleSpace& space,
                                   std::optional<std::pair<int, int>> bidegree,
                                   uint64_t memory_cap) {
  const auto& L = *alg;
  const auto& gens = acting_indices(L, acting);
  if (gens.empty()) throw std::invalid_argument("acting part is empty");

  // choose the column set
  std::vector<uint64_t> columns;
  std::vector<int> tup;
  for (uint64_t code = 0; code < space.dim(); ++code) {
    if (bidegree) {
      uint64_t r = code;
      if (space.kind() == SpaceKind::CoeffWedge) r %= space.wedge_count();
      space.unrank_tuple(r, tup);
      int bc = boost_count(space, tup);
      if (bc != bidegree->first ||
          static_cast<int>(tup.size()) - bc != bidegree->second)
        continue;
    }
    columns.push_back(code);
  }

  // stacked action matrix: one row band per generator
  SparseMatrix stacked(space.dim() * gens.size(), columns.size());
  for (size_t ci = 0; ci < columns.size(); ++ci) {
    Chain unit(space);
    unit.add(columns[ci], 1);
    for (size_t g = 0; g < gens.size(); ++g) {
      Chain img = act(unit, gens[g]);
      for (const auto& [idx, v] : img.terms)
        stacked.add(ci, g * space.dim() + idx, v);
    }
  }
  stacked.finalize();

  auto kernel = kernel_basis(stacked, memory_cap);
  InvariantReport rep;
  rep.acting = acting_str(acting);
  rep.module = space.describe();
  rep.k = space.k();
  rep.bidegree = bidegree;
  rep.space_dim = columns.size();
  rep.dim = static_cast<int>(kernel.size());
  for (const auto& v : kernel) {
    Chain b(space);
    for (const auto& [ci, val] : v.terms) b.add(columns[ci], val);
    b.normalize();
    rep.basis.push_back(std::move(b));
  }
  return rep;
}

ModuleSpace lemma_module(std::shared_ptr<const LieAlgebra> alg, ModuleShape shape,
                         int k) {
  const auto& L = *alg;
  switch (shape) {
    case ModuleShape::Wedge:
      return ModuleSpace::wedge(alg, L.ideal_part(), k);
    case ModuleShape::SoWedge:
      return ModuleSpace::coeff_wedge(alg, L.so_part(), L.ideal_part(), k);
    case ModuleShape::Sl2Wedge:
      return ModuleSpace::coeff_wedge(alg, L.sl2_part(), L.ideal_part(), k);
    case ModuleShape::IWedge:
      return ModuleSpace::coeff_wedge(alg, L.ideal_part(), L.ideal_part(), k);
  }
  throw std::logic_error("bad module shape");
}

namespace {

// is `c` in the span of the reported kernel basis? proportionality suffices
// for the 1-dimensional cells, exact span membership in general
bool member_of(const InvariantReport& rep, const Chain& c) {
  if (c.is_zero()) return true;
  if (rep.basis.empty()) return false;
  SparseMatrix m(c.space.dim(), rep.basis.size());
  for (size_t j = 0; j < rep.basis.size(); ++j)
    for (const auto& [idx, v] : rep.basis[j].terms) m.add(j, idx, v);
  m.finalize();
  SparseVector b;
  for (const auto& [idx, v] : c.terms) b.terms.push_back({idx, v});
  return in_column_span(m, b);
}

}  // namespace

LemmaSuiteReport lemma_suite(int n, uint64_t memory_cap) {
  if (n < 2 || n > 5) throw std::invalid_argument("lemma_suite needs n in 2..5");
  LemmaSuiteReport rep;
  rep.n = n;
  auto sch = LieAlgebra::build(AlgebraName::Schrodinger, n);

  Chain beta = named_chain(sch, ChainName::Beta);
  Chain zeta = named_chain(sch, ChainName::Zeta);
  Chain alpha = named_chain(sch, ChainName::Alpha);
  Chain rho = named_chain(sch, ChainName::Rho);
  Chain gamma = named_chain(sch, ChainName::Gamma);
  rep.zeta_beta_collision = (n == 2) && proportion(zeta, beta).has_value();

  for (int k = 0; k <= 2 * n; ++k) {
    for (ModuleShape shape : {ModuleShape::Wedge, ModuleShape::Sl2Wedge,
                              ModuleShape::SoWedge, ModuleShape::IWedge}) {
      LemmaCell cell;
      cell.module = shape;
      cell.k = k;
      ModuleSpace space = lemma_module(sch, shape, k);
      InvariantReport inv =
          invariant_subspace(sch, ActingPart::Hbar, space, std::nullopt, memory_cap);
      cell.dim = inv.dim;
      switch (shape) {
        case ModuleShape::Wedge:
          // dims 1 at k in {0, 2, 2n-2, 2n}, 0 otherwise (collision folds
          // 2 and 2n-2 together at n = 2)
          cell.predicted =
              (k == 0 || k == 2 || k == 2 * n - 2 || k == 2 * n) ? 1 : 0;
          if (k == 2) {
            MembershipCheck mc{"beta", member_of(inv, beta)};
            cell.membership.push_back(mc);
          }
          if (k == 2 * n - 2)
            cell.membership.push_back({"zeta", member_of(inv, zeta)});
          if (k == 2 * n)
            cell.membership.push_back({"alpha", member_of(inv, alpha)});
          break;
        case ModuleShape::Sl2Wedge:
          cell.predicted = 0;
          break;
        case ModuleShape::SoWedge:
          cell.predicted = (k == 2 || k == 2 * n - 2) ? 1 : 0;
          if (k == 2) cell.membership.push_back({"rho", member_of(inv, rho)});
          if (k == 2 * n - 2)
            cell.membership.push_back({"gamma", member_of(inv, gamma)});
          if (k == n - 2) rep.k_n_minus_2_dim = inv.dim;
          break;
        case ModuleShape::IWedge:
          cell.predicted = 0;
          break;
      }
      cell.matches = (cell.dim == cell.predicted);
      for (const auto& mc : cell.membership)
        if (!mc.inside) cell.matches = false;
      rep.cells.push_back(std::move(cell));
    }
  }
  return rep;
}

bool LemmaSuiteReport::all_match() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const LemmaCell& c) { return c.matches; });
}

std::vector<const LemmaCell*> LemmaSuiteReport::mismatches() const {
  std::vector<const LemmaCell*> out;
  for (const auto& c : cells)
    if (!c.matches) out.push_back(&c);
  return out;
}

}  // namespace schalg
