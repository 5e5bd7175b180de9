#include "schalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace schalg {

std::string BasisLabel::str() const {
  switch (kind) {
    case LabelKind::Rotation:
      return "X_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    case LabelKind::A: return "a";
    case LabelKind::B: return "b";
    case LabelKind::C: return "c";
    case LabelKind::D: return "d";
    case LabelKind::Boost: return "y_" + std::to_string(i);
    case LabelKind::Momentum: return "y_" + std::to_string(i);
  }
  return "?";
}

namespace {

RealMatrix elementary(int size, int a, int b) {  // E_ab, 1-based
  RealMatrix m(size);
  m.at(a - 1, b - 1) = 1;
  return m;
}

void add_scaled(RealMatrix& dst, const RealMatrix& src, int s) {
  for (size_t k = 0; k < dst.m.size(); ++k) dst.m[k] += s * src.m[k];
}

}  // namespace

RealMatrix realize(int n, const BasisLabel& lab) {
  const int N = n + 2;
  RealMatrix m(N);
  switch (lab.kind) {
    case LabelKind::Rotation:
      add_scaled(m, elementary(N, lab.i, lab.j), -1);
      add_scaled(m, elementary(N, lab.j, lab.i), +1);
      break;
    case LabelKind::A:
      add_scaled(m, elementary(N, n + 1, n + 1), -1);
      add_scaled(m, elementary(N, n + 2, n + 2), +1);
      break;
    case LabelKind::B:
      add_scaled(m, elementary(N, n + 1, n + 2), +1);
      break;
    case LabelKind::C:
      add_scaled(m, elementary(N, n + 2, n + 1), -1);
      break;
    case LabelKind::D:
      add_scaled(m, elementary(N, n + 1, n + 1), +1);
      add_scaled(m, elementary(N, n + 2, n + 2), +1);
      break;
    case LabelKind::Boost:
      m = elementary(N, lab.i, n + 1);
      break;
    case LabelKind::Momentum:
      m = elementary(N, lab.i - n, n + 2);
      break;
  }
  return m;
}

RealMatrix commutator(const RealMatrix& a, const RealMatrix& b) {
  const int N = a.size;
  RealMatrix ab(N), ba(N);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) {
      if (a.at(i, k) != 0)
        for (int j = 0; j < N; ++j) ab.at(i, j) += a.at(i, k) * b.at(k, j);
      if (b.at(i, k) != 0)
        for (int j = 0; j < N; ++j) ba.at(i, j) += b.at(i, k) * a.at(k, j);
    }
  RealMatrix out(N);
  for (size_t k = 0; k < out.m.size(); ++k) out.m[k] = ab.m[k] - ba.m[k];
  return out;
}

AlgebraName parse_algebra_name(const std::string& s) {
  if (s == "so") return AlgebraName::So;
  if (s == "sl2") return AlgebraName::Sl2;
  if (s == "hbar") return AlgebraName::Hbar;
  if (s == "schrodinger") return AlgebraName::Schrodinger;
  if (s == "galilei") return AlgebraName::Galilei;
  if (s == "abelian_I") return AlgebraName::AbelianI;
  throw std::invalid_argument("unknown algebra name: " + s);
}

std::string algebra_name_str(AlgebraName a) {
  switch (a) {
    case AlgebraName::So: return "so";
    case AlgebraName::Sl2: return "sl2";
    case AlgebraName::Hbar: return "hbar";
    case AlgebraName::Schrodinger: return "schrodinger";
    case AlgebraName::Galilei: return "galilei";
    case AlgebraName::AbelianI: return "abelian_I";
  }
  return "?";
}

namespace {

// Reduced row echelon form of a dense rational matrix (rows x cols, augmented
// allowed). Returns pivot column per row. Small inputs only.
std::vector<int> rref(std::vector<std::vector<Rational>>& m, int cols) {
  std::vector<int> pivcols;
  int r = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int rr = r; rr < rows; ++rr)
      if (m[rr][c] != 0) { piv = rr; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int rr = 0; rr < rows; ++rr) {
      if (rr == r || m[rr][c] == 0) continue;
      Rational f = m[rr][c];
      for (size_t cc = 0; cc < m[rr].size(); ++cc) m[rr][cc] -= f * m[r][cc];
    }
    pivcols.push_back(c);
    ++r;
  }
  return pivcols;
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::build(AlgebraName name, int n) {
  if (n < 2) throw std::invalid_argument("build_algebra requires n >= 2");
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->name_ = name;
  alg->n_ = n;

  auto& basis = alg->basis_;
  const bool has_so = name == AlgebraName::So || name == AlgebraName::Hbar ||
                      name == AlgebraName::Schrodinger || name == AlgebraName::Galilei;
  const bool has_sl2 = name == AlgebraName::Sl2 || name == AlgebraName::Hbar ||
                       name == AlgebraName::Schrodinger || name == AlgebraName::Galilei;
  const bool has_ideal = name == AlgebraName::Schrodinger ||
                         name == AlgebraName::Galilei || name == AlgebraName::AbelianI;
  if (has_so)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        basis.push_back({LabelKind::Rotation, i, j});
  if (has_sl2) {
    basis.push_back({LabelKind::A});
    basis.push_back({LabelKind::B});
    basis.push_back({LabelKind::C});
  }
  if (has_ideal) {
    for (int i = 1; i <= n; ++i) basis.push_back({LabelKind::Boost, i});
    for (int i = n + 1; i <= 2 * n; ++i) basis.push_back({LabelKind::Momentum, i});
  }
  if (name == AlgebraName::Galilei) basis.push_back({LabelKind::D});

  const int dim = static_cast<int>(basis.size());
  for (auto& lab : basis) alg->matrices_.push_back(realize(n, lab));

  for (int i = 0; i < dim; ++i) {
    switch (basis[i].kind) {
      case LabelKind::Rotation: alg->so_.push_back(i); break;
      case LabelKind::A:
      case LabelKind::B:
      case LabelKind::C: alg->sl2_.push_back(i); break;
      case LabelKind::Boost: alg->boosts_.push_back(i); break;
      case LabelKind::Momentum: alg->momenta_.push_back(i); break;
      case LabelKind::D: alg->dilation_.push_back(i); break;
    }
  }
  alg->hbar_ = alg->so_;
  alg->hbar_.insert(alg->hbar_.end(), alg->sl2_.begin(), alg->sl2_.end());
  alg->ideal_ = alg->boosts_;
  alg->ideal_.insert(alg->ideal_.end(), alg->momenta_.begin(), alg->momenta_.end());

  // Derive structure constants: decompose each commutator over the basis
  // matrices by exact elimination on the flattened span.
  const int N2 = (n + 2) * (n + 2);
  alg->table_.assign(dim * dim, {});
  {
    // echelonize the flattened basis matrix once, remembering the operations
    // via an augmented identity; then each decomposition is a back-solve.
    std::vector<std::vector<Rational>> m(N2, std::vector<Rational>(dim));
    for (int c = 0; c < dim; ++c)
      for (int e = 0; e < N2; ++e) m[e][c] = alg->matrices_[c].m[e];
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (i == j) continue;
        RealMatrix comm = commutator(alg->matrices_[i], alg->matrices_[j]);
        bool zero = std::all_of(comm.m.begin(), comm.m.end(),
                                [](const Rational& q) { return q == 0; });
        if (zero) continue;
        std::vector<std::vector<Rational>> aug = m;
        for (int e = 0; e < N2; ++e) aug[e].push_back(comm.m[e]);
        auto piv = rref(aug, dim);
        std::vector<StructureTerm> terms;
        for (size_t r = 0; r < piv.size(); ++r)
          if (aug[r][dim] != 0) terms.push_back({piv[r], aug[r][dim]});
        // verify the residual vanishes (commutator must lie in the span)
        RealMatrix recon(n + 2);
        for (auto& t : terms)
          for (int e = 0; e < N2; ++e) recon.m[e] += t.c * alg->matrices_[t.k].m[e];
        if (!(recon == comm))
          throw std::logic_error("commutator not in basis span");
        alg->table_[i * dim + j] = std::move(terms);
      }
    }
  }

  // Universal abelian grading: rational kernel of {g_i + g_j = g_k}.
  {
    std::vector<std::vector<Rational>> rows;
    std::map<std::array<int, 3>, bool> seen;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (const auto& t : alg->table_[i * dim + j]) {
          std::array<int, 3> key{std::min(i, j), std::max(i, j), t.k};
          if (seen.count(key)) continue;
          seen[key] = true;
          std::vector<Rational> row(dim, Rational(0));
          row[i] += 1;
          row[j] += 1;
          row[t.k] -= 1;
          rows.push_back(std::move(row));
        }
    std::vector<int> pivcols;
    if (!rows.empty()) pivcols = rref(rows, dim);
    std::vector<bool> is_piv(dim, false);
    for (int c : pivcols) is_piv[c] = true;
    for (int f = 0; f < dim; ++f) {
      if (is_piv[f]) continue;
      std::vector<Rational> v(dim, Rational(0));
      v[f] = 1;
      for (size_t r = 0; r < pivcols.size(); ++r)
        if (rows[r][f] != 0) v[pivcols[r]] = -rows[r][f];
      mpz_class lcm = 1;
      for (auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                x.get_den().get_mpz_t());
      std::vector<int64_t> iv(dim);
      for (int c = 0; c < dim; ++c) {
        Rational scaled = v[c] * lcm;
        iv[c] = scaled.get_num().get_si();
      }
      alg->gradings_.push_back(std::move(iv));
    }
  }

  return alg;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::abelian(int dim) {
  if (dim < 1) throw std::invalid_argument("abelian algebra needs dim >= 1");
  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->name_ = AlgebraName::AbelianI;
  alg->n_ = dim;
  for (int i = 1; i <= dim; ++i) {
    alg->basis_.push_back({LabelKind::Boost, i});
    alg->matrices_.push_back(RealMatrix(1));
    alg->boosts_.push_back(i - 1);
  }
  alg->ideal_ = alg->boosts_;
  alg->table_.assign(dim * dim, {});
  for (int i = 0; i < dim; ++i) {
    std::vector<int64_t> g(dim, 0);
    g[i] = 1;
    alg->gradings_.push_back(std::move(g));
  }
  return alg;
}

int LieAlgebra::index_of(const BasisLabel& lab) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] == lab) return i;
  return -1;
}

void Element::add_term(int i, const Rational& c) {
  for (auto& [k, v] : terms)
    if (k == i) {
      v += c;
      return;
    }
  terms.push_back({i, c});
}

void Element::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::erase_if(terms, [](const auto& t) { return t.second == 0; });
}

Element bracket(const LieAlgebra& L, const Element& x, const Element& y) {
  for (const auto& [i, c] : x.terms)
    if (i < 0 || i >= L.dim()) throw std::invalid_argument("element/algebra dimension mismatch");
  for (const auto& [i, c] : y.terms)
    if (i < 0 || i >= L.dim()) throw std::invalid_argument("element/algebra dimension mismatch");
  Element out;
  for (const auto& [i, ci] : x.terms)
    for (const auto& [j, cj] : y.terms)
      for (const auto& t : L.br(i, j)) out.add_term(t.k, ci * cj * t.c);
  out.normalize();
  return out;
}

namespace {

struct RelationCheck {
  std::string text;
  Element lhs;  // [x, y]
  Element rhs;
};

void expect(std::vector<TableRelation>& out, const LieAlgebra& L,
            const std::string& text, const Element& x, const Element& y,
            const Element& want) {
  Element got = bracket(L, x, y);
  Element w = want;
  w.normalize();
  out.push_back({text, got == w});
}

}  // namespace

TableReport check_tables(const LieAlgebra& L) {
  TableReport rep;
  const int n = L.n();
  auto idx = [&](BasisLabel lab) { return L.index_of(lab); };
  auto rot = [&](int i, int j) {
    // X_{ij} for any i != j, with X_{ji} = -X_{ij}
    Element e;
    if (i < j)
      e.add_term(idx({LabelKind::Rotation, i, j}), 1);
    else
      e.add_term(idx({LabelKind::Rotation, j, i}), -1);
    e.normalize();
    return e;
  };
  auto one = [&](BasisLabel lab) { return Element::basis(idx(lab)); };
  auto boost = [&](int i) { return one({LabelKind::Boost, i}); };
  auto mom = [&](int i) { return one({LabelKind::Momentum, n + i}); };
  const bool has_so = !L.so_part().empty();
  const bool has_sl2 = !L.sl2_part().empty();
  const bool has_ideal = !L.ideal_part().empty();
  const bool has_d = !L.dilation_part().empty();
  Element zero;

  if (has_so) {
    // [X_ij, X_ik] = X_jk over all distinct triples, via X_ji = -X_ij
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          if (i == j || i == k || j == k) continue;
          expect(rep.relations, L,
                 "[X_{" + std::to_string(i) + std::to_string(j) + "},X_{" +
                     std::to_string(i) + std::to_string(k) + "}]=X_{" +
                     std::to_string(j) + std::to_string(k) + "}",
                 rot(i, j), rot(i, k), rot(j, k));
        }
  }
  if (has_so && has_sl2) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (auto kind : {LabelKind::A, LabelKind::B, LabelKind::C})
          expect(rep.relations, L,
                 "[X_{" + std::to_string(i) + std::to_string(j) + "}," +
                     BasisLabel{kind}.str() + "]=0",
                 rot(i, j), one({kind}), zero);
  }
  if (has_sl2) {
    Element a = one({LabelKind::A}), b = one({LabelKind::B}), c = one({LabelKind::C});
    Element m2b, p2c;
    m2b.add_term(idx({LabelKind::B}), -2);
    p2c.add_term(idx({LabelKind::C}), 2);
    expect(rep.relations, L, "[a,b]=-2b", a, b, m2b);
    expect(rep.relations, L, "[a,c]=2c", a, c, p2c);
    expect(rep.relations, L, "[b,c]=a", b, c, a);
  }
  if (has_so && has_ideal) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        expect(rep.relations, L,
               "[X_{" + std::to_string(i) + std::to_string(j) + "},y_" +
                   std::to_string(i) + "]=y_" + std::to_string(j),
               rot(i, j), boost(i), boost(j));
        expect(rep.relations, L,
               "[X_{" + std::to_string(i) + std::to_string(j) + "},y_" +
                   std::to_string(n + i) + "]=y_" + std::to_string(n + j),
               rot(i, j), mom(i), mom(j));
      }
  }
  if (has_sl2 && has_ideal) {
    Element a = one({LabelKind::A}), b = one({LabelKind::B}), c = one({LabelKind::C});
    for (int i = 1; i <= n; ++i) {
      Element mi;
      mi.add_term(idx({LabelKind::Momentum, n + i}), -1);
      Element mm;
      mm.add_term(idx({LabelKind::Momentum, n + i}), -1);
      expect(rep.relations, L, "[a,y_" + std::to_string(i) + "]=y_" + std::to_string(i),
             a, boost(i), boost(i));
      expect(rep.relations, L,
             "[a,y_" + std::to_string(n + i) + "]=-y_" + std::to_string(n + i), a,
             mom(i), mm);
      expect(rep.relations, L,
             "[b,y_" + std::to_string(i) + "]=-y_" + std::to_string(n + i), b,
             boost(i), mi);
      expect(rep.relations, L, "[b,y_" + std::to_string(n + i) + "]=0", b, mom(i), zero);
      expect(rep.relations, L, "[c,y_" + std::to_string(i) + "]=0", c, boost(i), zero);
      expect(rep.relations, L,
             "[c,y_" + std::to_string(n + i) + "]=y_" + std::to_string(i), c, mom(i),
             boost(i));
    }
  }
  if (has_ideal) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        expect(rep.relations, L,
               "[y_" + std::to_string(i) + ",y_" + std::to_string(n + j) + "]=0",
               boost(i), mom(j), zero);
  }
  if (has_d) {
    Element d = one({LabelKind::D});
    if (has_so)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          expect(rep.relations, L,
                 "[X_{" + std::to_string(i) + std::to_string(j) + "},d]=0", rot(i, j),
                 d, zero);
    for (auto kind : {LabelKind::A, LabelKind::B, LabelKind::C})
      expect(rep.relations, L, "[" + BasisLabel{kind}.str() + ",d]=0", one({kind}), d,
             zero);
    for (int i = 1; i <= n; ++i) {
      Element mb, mm;
      mb.add_term(idx({LabelKind::Boost, i}), -1);
      mm.add_term(idx({LabelKind::Momentum, n + i}), -1);
      expect(rep.relations, L,
             "[d,y_" + std::to_string(i) + "]=-y_" + std::to_string(i), d, boost(i), mb);
      expect(rep.relations, L,
             "[d,y_" + std::to_string(n + i) + "]=-y_" + std::to_string(n + i), d,
             mom(i), mm);
    }
  }
  if (L.name() == AlgebraName::AbelianI) {
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j)
        expect(rep.relations, L,
               "[" + L.label(i).str() + "," + L.label(j).str() + "]=0",
               Element::basis(i), Element::basis(j), zero);
  }
  return rep;
}

bool TableReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const TableRelation& r) { return r.pass; });
}

}  // namespace schalg
