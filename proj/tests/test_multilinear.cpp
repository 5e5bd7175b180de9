#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schalg/action.hpp"
#include "schalg/named_chains.hpp"

using namespace schalg;

namespace {

std::shared_ptr<const LieAlgebra> sch(int n) {
  return LieAlgebra::build(AlgebraName::Schrodinger, n);
}

Chain unit_chain(const ModuleSpace& s, uint64_t code) {
  Chain c(s);
  c.add(code, 1);
  return c;
}

Chain random_chain(const ModuleSpace& s, std::mt19937_64& rng, int terms = 4) {
  Chain c(s);
  for (int t = 0; t < terms; ++t)
    c.add(rng() % s.dim(), rat(static_cast<long>(rng() % 7) - 3));
  c.normalize();
  return c;
}

}  // namespace

TEST_CASE("codec dimensions") {
  auto a = sch(3);
  CHECK(ModuleSpace::wedge(a, a->ideal_part(), 2).dim() == 15);   // C(6,2)
  CHECK(ModuleSpace::wedge(a, a->ideal_part(), 7).dim() == 0);
  CHECK(ModuleSpace::tensor(a, a->ideal_part(), 3).dim() == 216);  // 6^3
  CHECK(ModuleSpace::coeff_wedge(a, a->so_part(), a->ideal_part(), 2).dim() ==
        3 * 15);
}

TEST_CASE("colex wedge ranks are prefix-stable") {
  auto a = sch(3);
  ModuleSpace w = ModuleSpace::wedge(a, a->ideal_part(), 2);
  // colex order on pairs: {0,1},{0,2},{1,2},{0,3},...
  std::vector<int> t{0, 1};
  CHECK(w.rank_tuple(t) == 0);
  t = {0, 2};
  CHECK(w.rank_tuple(t) == 1);
  t = {1, 2};
  CHECK(w.rank_tuple(t) == 2);
  t = {0, 3};
  CHECK(w.rank_tuple(t) == 3);
  // the first C(4,2) ranks agree with the n=2 space
  auto a2 = sch(2);
  ModuleSpace w2 = ModuleSpace::wedge(a2, a2->ideal_part(), 2);
  std::vector<int> tup;
  for (uint64_t r = 0; r < w2.dim(); ++r) {
    w2.unrank_tuple(r, tup);
    CHECK(w.rank_tuple(tup) == r);
  }
}

TEST_CASE("codec round trip: exhaustive small, randomized large") {
  auto a = sch(3);
  std::vector<int> tup;
  for (int k : {1, 2, 3}) {
    ModuleSpace w = ModuleSpace::wedge(a, a->ideal_part(), k);
    for (uint64_t r = 0; r < w.dim(); ++r) {
      w.unrank_tuple(r, tup);
      CHECK(w.rank_tuple(tup) == r);
      for (size_t i = 1; i < tup.size(); ++i) CHECK(tup[i - 1] < tup[i]);
    }
    ModuleSpace t = ModuleSpace::tensor(a, a->ideal_part(), k);
    for (uint64_t r = 0; r < t.dim(); ++r) {
      t.unrank_tuple(r, tup);
      CHECK(t.rank_tuple(tup) == r);
    }
  }
  std::mt19937_64 rng(5);
  std::vector<int> all(a->dim());
  for (int i = 0; i < a->dim(); ++i) all[i] = i;
  ModuleSpace big = ModuleSpace::tensor(a, all, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    uint64_t r = rng() % big.dim();
    big.unrank_tuple(r, tup);
    CHECK(big.rank_tuple(tup) == r);
  }
  ModuleSpace bigw = ModuleSpace::wedge(a, all, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    uint64_t r = rng() % bigw.dim();
    bigw.unrank_tuple(r, tup);
    CHECK(bigw.rank_tuple(tup) == r);
  }
}

TEST_CASE("act: beta_2 is annihilated by a, y_1^y_2 scales by -2") {
  auto a2 = sch(2);
  Chain beta = named_chain(a2, ChainName::Beta);
  int ia = a2->index_of({LabelKind::A});
  CHECK(act(beta, ia).is_zero());

  ModuleSpace w = ModuleSpace::wedge(a2, a2->ideal_part(), 2);
  std::vector<int> t{0, 1};  // y_1 ^ y_2
  Chain y12 = unit_chain(w, w.rank_tuple(t));
  Chain got = act(y12, ia);
  Chain want = y12;
  for (auto& [idx, c] : want.terms) c *= -2;
  CHECK(got == want);
}

TEST_CASE("act: zero chain maps to zero") {
  auto a2 = sch(2);
  ModuleSpace w = ModuleSpace::wedge(a2, a2->ideal_part(), 2);
  Chain zero(w);
  CHECK(act(zero, 0).is_zero());
}

TEST_CASE("act is linear in the acting element") {
  auto a3 = sch(3);
  ModuleSpace w = ModuleSpace::wedge(a3, a3->ideal_part(), 3);
  std::mt19937_64 rng(11);
  Chain c = random_chain(w, rng);
  Element x;
  x.add_term(0, rat(2));
  x.add_term(4, rat(-1, 3));
  x.normalize();
  Chain lhs = act(c, x);
  Chain rhs = act(c, 0);
  for (auto& [idx, v] : rhs.terms) v *= 2;
  Chain part = act(c, 4);
  for (auto& [idx, v] : part.terms) v *= rat(-1, 3);
  rhs += part;
  CHECK(lhs == rhs);
}

TEST_CASE("act is a right action: [[w,X],Y] - [[w,Y],X] = [w,[X,Y]]") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    auto a = sch(n);
    for (int k = 1; k <= 4; ++k) {
      ModuleSpace w = ModuleSpace::wedge(a, a->ideal_part(), k);
      ModuleSpace t = ModuleSpace::tensor(a, a->ideal_part(), std::min(k, 3));
      ModuleSpace cw =
          ModuleSpace::coeff_wedge(a, a->so_part(), a->ideal_part(), k);
      for (const ModuleSpace& s : {w, t, cw}) {
        if (s.dim() == 0) continue;
        Chain c = random_chain(s, rng);
        for (int trial = 0; trial < 3; ++trial) {
          int x = static_cast<int>(rng() % a->hbar_part().size());
          int y = static_cast<int>(rng() % a->hbar_part().size());
          int gx = a->hbar_part()[x], gy = a->hbar_part()[y];
          Chain lhs = act(act(c, gx), gy);
          Chain sub = act(act(c, gy), gx);
          for (auto& [idx, v] : sub.terms) v = -v;
          lhs += sub;
          Chain rhs = act(c, bracket(*a, Element::basis(gx), Element::basis(gy)));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("antisymmetrize: k = 1 and k = 2 definitions") {
  auto a2 = sch(2);
  ModuleSpace w1 = ModuleSpace::wedge(a2, a2->ideal_part(), 1);
  std::vector<int> t{0};
  Chain y1 = unit_chain(w1, w1.rank_tuple(t));
  Chain t1 = antisymmetrize(y1);
  REQUIRE(t1.terms.size() == 1);
  CHECK(t1.terms[0].second == 1);

  ModuleSpace w2 = ModuleSpace::wedge(a2, a2->ideal_part(), 2);
  t = {0, 1};
  Chain c = antisymmetrize(unit_chain(w2, w2.rank_tuple(t)));
  // (1/2)(y1(x)y2 - y2(x)y1)
  REQUIRE(c.terms.size() == 2);
  ModuleSpace tt = ModuleSpace::tensor(a2, a2->ideal_part(), 2);
  std::vector<int> t12{0, 1}, t21{1, 0};
  Chain want(tt);
  want.add(tt.rank_tuple(t12), rat(1, 2));
  want.add(tt.rank_tuple(t21), rat(-1, 2));
  want.normalize();
  CHECK(c == want);
}

TEST_CASE("antisymmetrize(alpha_2) has 24 monomials with coefficients 1/24") {
  Chain at = named_chain(ChainName::AlphaTilde, 2);
  CHECK(at.terms.size() == 24);
  for (const auto& [idx, c] : at.terms) {
    CHECK((c == rat(1, 24) || c == rat(-1, 24)));
  }
}

TEST_CASE("antisymmetrize output is alternating under slot swaps") {
  auto a3 = sch(3);
  ModuleSpace w = ModuleSpace::wedge(a3, a3->ideal_part(), 3);
  std::mt19937_64 rng(23);
  Chain c = antisymmetrize(random_chain(w, rng));
  const ModuleSpace& tt = c.space;
  std::vector<int> tup;
  Chain swapped(tt);
  for (const auto& [idx, v] : c.terms) {
    tt.unrank_tuple(idx, tup);
    std::swap(tup[0], tup[2]);
    swapped.add(tt.rank_tuple(tup), -v);
  }
  swapped.normalize();
  CHECK(c == swapped);
}

TEST_CASE("act commutes with antisymmetrize") {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 3; ++n) {
    auto a = sch(n);
    ModuleSpace w = ModuleSpace::wedge(a, a->ideal_part(), 3);
    Chain c = random_chain(w, rng);
    for (int g : a->hbar_part()) {
      Chain lhs = antisymmetrize(act(c, g));
      Chain rhs = act(antisymmetrize(c), g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("antisymmetrize cap") {
  auto a5 = LieAlgebra::build(AlgebraName::Schrodinger, 5);
  ModuleSpace w = ModuleSpace::wedge(a5, a5->ideal_part(), 10);
  Chain c(w);
  std::vector<int> t{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  c.add(w.rank_tuple(t), 1);
  CHECK_THROWS_AS(antisymmetrize(c), std::invalid_argument);
}

TEST_CASE("named chains match their displays") {
  auto a2 = sch(2);
  Chain beta2 = named_chain(a2, ChainName::Beta);
  ModuleSpace w2 = ModuleSpace::wedge(a2, a2->ideal_part(), 2);
  Chain want(w2);
  std::vector<int> t{0, 2};
  want.add(w2.rank_tuple(t), 1);  // y_1 ^ y_3
  t = {1, 3};
  want.add(w2.rank_tuple(t), 1);  // y_2 ^ y_4
  want.normalize();
  CHECK(beta2 == want);

  // zeta_2 = beta_2 (the documented n = 2 collision)
  CHECK(named_chain(a2, ChainName::Zeta) == beta2);

  // rho_2 = X_12 (x) y_1^y_4 - X_12 (x) y_2^y_3
  Chain rho2 = named_chain(a2, ChainName::Rho);
  ModuleSpace cw = ModuleSpace::coeff_wedge(a2, a2->so_part(), a2->ideal_part(), 2);
  Chain rho_want(cw);
  t = {0, 3};
  rho_want.add(cw.rank_with_coeff(0, t), 1);
  t = {1, 2};
  rho_want.add(cw.rank_with_coeff(0, t), -1);
  rho_want.normalize();
  CHECK(rho2 == rho_want);

  auto a3 = sch(3);
  CHECK(named_chain(a3, ChainName::Alpha).terms.size() == 1);
  CHECK(named_chain(a3, ChainName::Beta).terms.size() == 3);
  CHECK(named_chain(a3, ChainName::Zeta).terms.size() == 3);
  CHECK(named_chain(a3, ChainName::Rho).terms.size() == 6);
  CHECK(named_chain(a3, ChainName::Gamma).terms.size() == 6);
  CHECK(named_chain(a3, ChainName::RhoBar).terms.size() == 6);
}

TEST_CASE("alpha, beta, zeta are hbar-invariant for n = 2..5") {
  for (int n = 2; n <= 5; ++n) {
    auto a = sch(n);
    for (auto name : {ChainName::Alpha, ChainName::Beta, ChainName::Zeta}) {
      Chain c = named_chain(a, name);
      for (int g : a->hbar_part()) {
        INFO("n=", n, " chain=", chain_name_str(name), " g=", g);
        CHECK(act(c, g).is_zero());
      }
    }
  }
}

TEST_CASE("alpha~ and zeta~ are annihilated by every schrodinger generator") {
  for (int n = 2; n <= 4; ++n) {
    auto a = sch(n);
    Chain at = named_chain(a, ChainName::AlphaTilde);
    Chain zt = named_chain(a, ChainName::ZetaTilde);
    for (int g = 0; g < a->dim(); ++g) {
      CHECK(act(at, g).is_zero());
      CHECK(act(zt, g).is_zero());
    }
  }
  // zeta~ stays within the cap up to n = 5
  auto a5 = sch(5);
  Chain zt5 = named_chain(a5, ChainName::ZetaTilde);
  for (int g = 0; g < a5->dim(); ++g) CHECK(act(zt5, g).is_zero());
}

TEST_CASE("top wedge of one ideal half scales by -/+ n under a") {
  for (int n = 2; n <= 4; ++n) {
    auto a = sch(n);
    ModuleSpace w1 = ModuleSpace::wedge(a, a->boosts(), n);
    std::vector<int> top(n);
    for (int i = 0; i < n; ++i) top[i] = i;
    Chain boosts_top = unit_chain(w1, w1.rank_tuple(top));
    Chain got = act(boosts_top, a->index_of({LabelKind::A}));
    Chain want = boosts_top;
    for (auto& [idx, c] : want.terms) c *= -n;
    CHECK(got == want);
    ModuleSpace w2 = ModuleSpace::wedge(a, a->momenta(), n);
    Chain mom_top = unit_chain(w2, w2.rank_tuple(top));
    got = act(mom_top, a->index_of({LabelKind::A}));
    want = mom_top;
    for (auto& [idx, c] : want.terms) c *= n;
    CHECK(got == want);
  }
}

TEST_CASE("named_chain rejects unknown names and bad n") {
  CHECK_THROWS_AS(parse_chain_name("sigma"), std::invalid_argument);
  CHECK_THROWS_AS(named_chain(ChainName::Alpha, 1), std::invalid_argument);
  // alpha~ needs 2n <= cap
  CHECK_THROWS_AS(named_chain(ChainName::AlphaTilde, 5), std::invalid_argument);
}
