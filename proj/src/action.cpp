#include "schalg/action.hpp"

#include <stdexcept>

namespace schalg {

namespace {

// expand [factor, X] over factor positions; throws if it leaves the span
void bracket_into_positions(const ModuleSpace& s, int factor_ambient, int x,
                            std::vector<std::pair<int, Rational>>& out) {
  out.clear();
  const auto& alg = s.algebra();
  for (const auto& t : alg.br(factor_ambient, x)) {
    int p = s.factor_pos(t.k);
    if (p < 0)
      throw std::invalid_argument("action leaves the module span: [" +
                                  alg.label(factor_ambient).str() + "," +
                                  alg.label(x).str() + "] hits " +
                                  alg.label(t.k).str());
    out.push_back({p, t.c});
  }
}

}  // namespace

Chain act(const Chain& w, int ambient_x) {
  const ModuleSpace& s = w.space;
  const auto& alg = s.algebra();
  if (ambient_x < 0 || ambient_x >= alg.dim())
    throw std::invalid_argument("acting element outside the algebra");
  Chain out(s);
  std::vector<int> tup, tmp;
  std::vector<std::pair<int, Rational>> repl;
  for (const auto& [idx, c] : w.terms) {
    uint64_t r = idx;
    int cp = -1;
    if (s.kind() == SpaceKind::CoeffWedge) {
      cp = static_cast<int>(r / s.wedge_count());
      r %= s.wedge_count();
    }
    s.unrank_tuple(r, tup);
    if (cp >= 0) {
      // coefficient slot: [g, X] (x) wedge
      for (const auto& t : alg.br(s.coeff()[cp], ambient_x)) {
        int p = s.coeff_pos(t.k);
        if (p < 0)
          throw std::invalid_argument("action leaves the coefficient span");
        out.add(s.rank_with_coeff(p, tup), c * t.c);
      }
    }
    for (size_t slot = 0; slot < tup.size(); ++slot) {
      bracket_into_positions(s, s.factors()[tup[slot]], ambient_x, repl);
      for (const auto& [p, coef] : repl) {
        tmp = tup;
        tmp[slot] = p;
        if (s.kind() == SpaceKind::Tensor) {
          out.add(s.rank_tuple(tmp), c * coef);
        } else {
          int sign = sort_sign(tmp);
          if (sign == 0) continue;
          uint64_t rk = s.rank_tuple(tmp);
          Rational v = c * coef;
          if (sign < 0) v = -v;
          if (cp >= 0)
            out.add(s.rank_with_coeff(cp, tmp), v);
          else
            out.add(rk, v);
        }
      }
    }
  }
  out.normalize();
  return out;
}

Chain act(const Chain& w, const Element& x) {
  Chain out(w.space);
  for (const auto& [i, c] : x.terms) {
    Chain part = act(w, i);
    part *= c;
    out += part;
  }
  return out;
}

Chain antisymmetrize(const Chain& w, int cap) {
  const ModuleSpace& s = w.space;
  if (s.kind() != SpaceKind::Wedge)
    throw std::invalid_argument("antisymmetrize expects a wedge chain");
  if (s.k() > cap)
    throw std::invalid_argument("antisymmetrize cap exceeded: k=" +
                                std::to_string(s.k()));
  ModuleSpace target =
      ModuleSpace::tensor(s.algebra_ptr(), s.factors(), s.k());
  Chain out(target);
  mpz_class kfact = 1;
  for (int i = 2; i <= s.k(); ++i) kfact *= i;
  Rational pref(1);
  pref /= Rational(kfact);
  std::vector<int> tup, perm;
  for (const auto& [idx, c] : w.terms) {
    s.unrank_tuple(idx, tup);
    perm = tup;
    std::sort(perm.begin(), perm.end());
    // iterate permutations with sign via parity of the permutation order
    std::vector<int> cur = perm;
    do {
      // sign of cur relative to ascending order
      std::vector<int> tmp = cur;
      int sign = sort_sign(tmp);
      out.add(target.rank_tuple(cur), c * pref * sign);
    } while (std::next_permutation(cur.begin(), cur.end()));
  }
  out.normalize();
  return out;
}

Chain wedge_projection(const Chain& t) {
  const ModuleSpace& s = t.space;
  if (s.kind() != SpaceKind::Tensor)
    throw std::invalid_argument("wedge_projection expects a tensor chain");
  ModuleSpace target = ModuleSpace::wedge(s.algebra_ptr(), s.factors(), s.k());
  Chain out(target);
  std::vector<int> tup;
  for (const auto& [idx, c] : t.terms) {
    s.unrank_tuple(idx, tup);
    int sign = sort_sign(tup);
    if (sign == 0) continue;
    out.add(target.rank_tuple(tup), sign < 0 ? Rational(-c) : c);
  }
  out.normalize();
  return out;
}

}  // namespace schalg
