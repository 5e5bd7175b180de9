#include "schalg/named_chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace schalg {

ChainName parse_chain_name(const std::string& s) {
  if (s == "alpha") return ChainName::Alpha;
  if (s == "beta") return ChainName::Beta;
  if (s == "zeta") return ChainName::Zeta;
  if (s == "rho") return ChainName::Rho;
  if (s == "rho_bar") return ChainName::RhoBar;
  if (s == "gamma") return ChainName::Gamma;
  if (s == "alpha_tilde") return ChainName::AlphaTilde;
  if (s == "zeta_tilde") return ChainName::ZetaTilde;
  if (s == "gamma_tilde") return ChainName::GammaTilde;
  throw std::invalid_argument("unknown chain name: " + s);
}

std::string chain_name_str(ChainName c) {
  switch (c) {
    case ChainName::Alpha: return "alpha";
    case ChainName::Beta: return "beta";
    case ChainName::Zeta: return "zeta";
    case ChainName::Rho: return "rho";
    case ChainName::RhoBar: return "rho_bar";
    case ChainName::Gamma: return "gamma";
    case ChainName::AlphaTilde: return "alpha_tilde";
    case ChainName::ZetaTilde: return "zeta_tilde";
    case ChainName::GammaTilde: return "gamma_tilde";
  }
  return "?";
}

namespace {

// gamma summands: (rotation ambient index, wedge tuple of I-positions, sign)
struct GammaTerm {
  int rot;
  std::vector<int> tuple;
  int sign;
};

std::vector<GammaTerm> gamma_terms(const LieAlgebra& alg) {
  const int n = alg.n();
  std::vector<GammaTerm> out;
  auto omit_pair = [&](int skip_boost, int skip_mom) {
    // I-positions: boosts 0..n-1, momenta n..2n-1
    std::vector<int> t;
    for (int m = 0; m < 2 * n; ++m) {
      if (m == skip_boost - 1) continue;
      if (m == n + skip_mom - 1) continue;
      t.push_back(m);
    }
    return t;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int x = alg.index_of({LabelKind::Rotation, i, j});
      out.push_back({x, omit_pair(i, j), +1});
      out.push_back({x, omit_pair(j, i), -1});
    }
  return out;
}

}  // namespace

Chain named_chain(std::shared_ptr<const LieAlgebra> alg, ChainName name) {
  const auto& L = *alg;
  const int n = L.n();
  const auto& ideal = L.ideal_part();
  if (ideal.empty()) throw std::invalid_argument("algebra has no abelian ideal part");
  std::vector<int> tup;

  switch (name) {
    case ChainName::Alpha: {
      Chain ch(ModuleSpace::wedge(alg, ideal, 2 * n));
      tup.resize(2 * n);
      for (int m = 0; m < 2 * n; ++m) tup[m] = m;
      ch.add(ch.space.rank_tuple(tup), 1);
      return ch;
    }
    case ChainName::Beta: {
      Chain ch(ModuleSpace::wedge(alg, ideal, 2));
      for (int i = 0; i < n; ++i) {
        tup = {i, n + i};
        ch.add(ch.space.rank_tuple(tup), 1);
      }
      ch.normalize();
      return ch;
    }
    case ChainName::Zeta: {
      Chain ch(ModuleSpace::wedge(alg, ideal, 2 * n - 2));
      for (int i = 0; i < n; ++i) {
        tup.clear();
        for (int m = 0; m < 2 * n; ++m)
          if (m != i && m != n + i) tup.push_back(m);
        ch.add(ch.space.rank_tuple(tup), 1);
      }
      ch.normalize();
      return ch;
    }
    case ChainName::Rho: {
      if (L.so_part().empty()) throw std::invalid_argument("rho needs so(n)");
      Chain ch(ModuleSpace::coeff_wedge(alg, L.so_part(), ideal, 2));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          int x = ch.space.coeff_pos(L.index_of({LabelKind::Rotation, i, j}));
          tup = {i - 1, n + j - 1};
          ch.add(ch.space.rank_with_coeff(x, tup), 1);
          tup = {j - 1, n + i - 1};
          ch.add(ch.space.rank_with_coeff(x, tup), -1);
        }
      ch.normalize();
      return ch;
    }
    case ChainName::RhoBar: {
      if (L.so_part().empty()) throw std::invalid_argument("rho_bar needs so(n)");
      std::vector<int> all(L.dim());
      for (int i = 0; i < L.dim(); ++i) all[i] = i;
      Chain ch(ModuleSpace::wedge(alg, all, 3));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          int x = L.index_of({LabelKind::Rotation, i, j});
          int yi = L.index_of({LabelKind::Boost, i});
          int yj = L.index_of({LabelKind::Boost, j});
          int mi = L.index_of({LabelKind::Momentum, n + i});
          int mj = L.index_of({LabelKind::Momentum, n + j});
          tup = {x, yi, mj};
          int s = sort_sign(tup);
          ch.add(ch.space.rank_tuple(tup), s);
          tup = {x, yj, mi};
          s = sort_sign(tup);
          ch.add(ch.space.rank_tuple(tup), -s);
        }
      ch.normalize();
      return ch;
    }
    case ChainName::Gamma: {
      if (L.so_part().empty()) throw std::invalid_argument("gamma needs so(n)");
      Chain ch(ModuleSpace::coeff_wedge(alg, L.so_part(), ideal, 2 * n - 2));
      for (const auto& t : gamma_terms(L)) {
        int cp = ch.space.coeff_pos(t.rot);
        ch.add(ch.space.rank_with_coeff(cp, t.tuple), t.sign);
      }
      ch.normalize();
      return ch;
    }
    case ChainName::AlphaTilde:
      return antisymmetrize(named_chain(alg, ChainName::Alpha));
    case ChainName::ZetaTilde:
      return antisymmetrize(named_chain(alg, ChainName::Zeta));
    case ChainName::GammaTilde: {
      // X (x) (antisymmetrized wedge part), all slots in the ambient algebra
      if (2 * n - 2 > kAntisymmetrizeCap)
        throw std::invalid_argument("antisymmetrize cap exceeded");
      std::vector<int> all(L.dim());
      for (int i = 0; i < L.dim(); ++i) all[i] = i;
      Chain ch(ModuleSpace::tensor(alg, all, 2 * n - 1));
      mpz_class kfact = 1;
      for (int i = 2; i <= 2 * n - 2; ++i) kfact *= i;
      Rational pref(1);
      pref /= Rational(kfact);
      for (const auto& t : gamma_terms(L)) {
        std::vector<int> ambient(t.tuple.size());
        for (size_t m = 0; m < t.tuple.size(); ++m) ambient[m] = ideal[t.tuple[m]];
        std::sort(ambient.begin(), ambient.end());
        std::vector<int> cur = ambient, slots(2 * n - 1);
        do {
          std::vector<int> tmp = cur;
          int sign = sort_sign(tmp);
          slots[0] = t.rot;
          std::copy(cur.begin(), cur.end(), slots.begin() + 1);
          ch.add(ch.space.rank_tuple(slots), pref * (sign * t.sign));
        } while (std::next_permutation(cur.begin(), cur.end()));
      }
      ch.normalize();
      return ch;
    }
  }
  throw std::logic_error("unreachable");
}

Chain named_chain(ChainName name, int n) {
  return named_chain(LieAlgebra::build(AlgebraName::Schrodinger, n), name);
}

}  // namespace schalg
