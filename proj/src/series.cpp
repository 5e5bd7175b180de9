#include "schalg/series.hpp"

#include <sstream>
#include <stdexcept>

#include "schalg/complexes.hpp"

namespace schalg {

PoincareSeries PoincareSeries::one(int truncation) {
  PoincareSeries s(truncation);
  s.c[0] = 1;
  return s;
}

PoincareSeries PoincareSeries::monomial(int degree, int truncation) {
  PoincareSeries s(truncation);
  if (degree <= truncation) s.c[degree] = 1;
  return s;
}

PoincareSeries PoincareSeries::tensor_algebra(int g, int truncation) {
  PoincareSeries s(truncation);
  if (g <= 0) throw std::invalid_argument("generator degree must be positive");
  for (int d = 0; d <= truncation; d += g) s.c[d] = 1;
  return s;
}

std::string PoincareSeries::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  return os.str();
}

namespace {

void require_same_truncation(const PoincareSeries& a, const PoincareSeries& b) {
  if (a.truncation() != b.truncation())
    throw std::invalid_argument("series truncations differ");
}

}  // namespace

PoincareSeries tensor(const PoincareSeries& a, const PoincareSeries& b) {
  require_same_truncation(a, b);
  PoincareSeries out(a.truncation());
  for (int i = 0; i <= a.truncation(); ++i) {
    if (!a.c[i]) continue;
    for (int j = 0; i + j <= b.truncation(); ++j)
      out.c[i + j] += a.c[i] * b.c[j];
  }
  return out;
}

PoincareSeries add(const PoincareSeries& a, const PoincareSeries& b) {
  require_same_truncation(a, b);
  PoincareSeries out = a;
  for (int i = 0; i <= b.truncation(); ++i) out.c[i] += b.c[i];
  return out;
}

PoincareSeries inverse(const PoincareSeries& a) {
  if (a.c.empty() || a.c[0] != 1)
    throw std::invalid_argument("series inversion requires constant term 1");
  PoincareSeries out(a.truncation());
  out.c[0] = 1;
  for (int d = 1; d <= a.truncation(); ++d) {
    int64_t s = 0;
    for (int i = 1; i <= d; ++i) s += a.c[i] * out.c[d - i];
    out.c[d] = -s;
  }
  return out;
}

PoincareSeries free_product(const PoincareSeries& a, const PoincareSeries& b) {
  require_same_truncation(a, b);
  if (a.c.empty() || a.c[0] != 1 || b.c[0] != 1)
    throw std::invalid_argument("free_product requires constant terms 1");
  PoincareSeries ia = inverse(a), ib = inverse(b);
  PoincareSeries sum(a.truncation());
  for (int d = 0; d <= a.truncation(); ++d) sum.c[d] = ia.c[d] + ib.c[d];
  sum.c[0] -= 1;
  return inverse(sum);
}

SeriesTarget parse_series_target(const std::string& s) {
  if (s == "lie_sch") return SeriesTarget::LieSch;
  if (s == "leibniz_sch") return SeriesTarget::LeibnizSch;
  if (s == "leibniz_galilei") return SeriesTarget::LeibnizGalilei;
  throw std::invalid_argument("unknown series target: " + s);
}

std::string series_target_str(SeriesTarget t) {
  switch (t) {
    case SeriesTarget::LieSch: return "lie_sch";
    case SeriesTarget::LeibnizSch: return "leibniz_sch";
    case SeriesTarget::LeibnizGalilei: return "leibniz_galilei";
  }
  return "?";
}

namespace {

// H^{Lie} of a small algebra by direct CE ranks, as a truncated series
PoincareSeries ce_betti_series(AlgebraName name, int n, int truncation,
                               uint64_t seed) {
  auto alg = LieAlgebra::build(name, n);
  ComplexSpec spec{alg, ComplexFlavor::CETrivial, alg->dim()};
  BettiOptions opt;
  opt.strategy.seed = seed ? seed : kDefaultSeed;
  HomologyReport rep = betti(spec, 0, std::min(truncation, alg->dim()), opt);
  PoincareSeries s(truncation);
  for (const auto& d : rep.degrees)
    if (d.k <= truncation && !d.skipped) s.c[d.k] = d.betti;
  return s;
}

}  // namespace

PoincareSeries predicted_series(SeriesTarget target, int n,
                                const PredictOptions& opt, int truncation) {
  if (n < 2) throw std::invalid_argument("predicted_series needs n >= 2");
  const int N = truncation;
  switch (target) {
    case SeriesTarget::LieSch: {
      PoincareSeries inv = PoincareSeries::one(N);
      if (opt.beta_included && 2 <= N) inv.c[2] += 1;
      if (2 * n - 2 <= N) inv.c[2 * n - 2] += 1;
      if (2 * n <= N) inv.c[2 * n] += 1;
      PoincareSeries hsl2 = ce_betti_series(AlgebraName::Sl2, n, N, opt.seed);
      PoincareSeries hso = ce_betti_series(AlgebraName::So, n, N, opt.seed);
      return tensor(tensor(hsl2, hso), inv);
    }
    case SeriesTarget::LeibnizSch: {
      PoincareSeries inv = PoincareSeries::one(N);
      if (2 * n - 2 <= N) inv.c[2 * n - 2] += 1;
      if (2 * n <= N) inv.c[2 * n] += 1;
      int g = opt.gamma_degree == 0 ? 2 * n - 2 : 2 * n - 1;
      return tensor(inv, PoincareSeries::tensor_algebra(g, N));
    }
    case SeriesTarget::LeibnizGalilei: {
      PoincareSeries sch = predicted_series(SeriesTarget::LeibnizSch, n, opt, N);
      return free_product(sch, PoincareSeries::tensor_algebra(1, N));
    }
  }
  throw std::logic_error("bad series target");
}

}  // namespace schalg
