#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schalg {

// Truncated integer-coefficient generating function of a graded space.
struct PoincareSeries {
  std::vector<int64_t> c;  // c[d] = dim in degree d, d <= truncation

  PoincareSeries() = default;
  explicit PoincareSeries(int truncation) : c(truncation + 1, 0) {}
  static PoincareSeries one(int truncation);
  static PoincareSeries monomial(int degree, int truncation);  // t^degree
  // 1/(1 - t^g), the series of a tensor algebra on one degree-g generator
  static PoincareSeries tensor_algebra(int g, int truncation);

  int truncation() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const PoincareSeries&) const = default;
  std::string str() const;
};

// coefficient-wise convolution (Kunneth tensor of graded spaces)
PoincareSeries tensor(const PoincareSeries& a, const PoincareSeries& b);

PoincareSeries add(const PoincareSeries& a, const PoincareSeries& b);

// multiplicative inverse of a series with a(0) = 1
PoincareSeries inverse(const PoincareSeries& a);

// connected free product: 1/P = 1/P_A + 1/P_B - 1; requires A(0) = B(0) = 1
PoincareSeries free_product(const PoincareSeries& a, const PoincareSeries& b);

enum class SeriesTarget { LieSch, LeibnizSch, LeibnizGalilei };
SeriesTarget parse_series_target(const std::string& s);
std::string series_target_str(SeriesTarget t);

struct PredictOptions {
  bool beta_included = false;  // keep the degree-2 invariant class
  int gamma_degree = 0;        // 0 = 2n-2, 1 = 2n-1
  uint64_t seed = 0;           // for the CE Betti computations
};

// Predicted graded dimensions:
//   LieSch:         H(sl2) . H(so(n)) . (1 [+ t^2] + t^{2n-2} + t^{2n}),
//                   H(sl2), H(so(n)) computed by direct CE ranks
//   LeibnizSch:     (1 + t^{2n-2} + t^{2n}) / (1 - t^g)
//   LeibnizGalilei: free_product(LeibnizSch, 1/(1-t))
PoincareSeries predicted_series(SeriesTarget target, int n,
                                const PredictOptions& opt, int truncation);

}  // namespace schalg
