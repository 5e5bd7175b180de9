#include "schalg/spaces.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schalg {

uint64_t binomial(uint64_t m, uint64_t k) {
  if (k > m) return 0;
  if (k > m - k) k = m - k;
  uint64_t r = 1;
  for (uint64_t i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
  return r;
}

namespace {

std::vector<int> make_pos(const LieAlgebra& alg, const std::vector<int>& subset) {
  std::vector<int> pos(alg.dim(), -1);
  for (size_t p = 0; p < subset.size(); ++p) pos[subset[p]] = static_cast<int>(p);
  return pos;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

ModuleSpace ModuleSpace::wedge(std::shared_ptr<const LieAlgebra> alg,
                               std::vector<int> factors, int k) {
  ModuleSpace s;
  s.kind_ = SpaceKind::Wedge;
  s.alg_ = std::move(alg);
  s.factors_ = std::move(factors);
  s.k_ = k;
  s.wedge_count_ = binomial(s.factors_.size(), k);
  s.dim_ = s.wedge_count_;
  s.factor_pos_ = make_pos(*s.alg_, s.factors_);
  return s;
}

ModuleSpace ModuleSpace::tensor(std::shared_ptr<const LieAlgebra> alg,
                                std::vector<int> factors, int k) {
  ModuleSpace s;
  s.kind_ = SpaceKind::Tensor;
  s.alg_ = std::move(alg);
  s.factors_ = std::move(factors);
  s.k_ = k;
  s.wedge_count_ = ipow(s.factors_.size(), k);
  s.dim_ = s.wedge_count_;
  s.factor_pos_ = make_pos(*s.alg_, s.factors_);
  return s;
}

ModuleSpace ModuleSpace::coeff_wedge(std::shared_ptr<const LieAlgebra> alg,
                                     std::vector<int> coeff,
                                     std::vector<int> factors, int k) {
  ModuleSpace s;
  s.kind_ = SpaceKind::CoeffWedge;
  s.alg_ = std::move(alg);
  s.coeff_ = std::move(coeff);
  s.factors_ = std::move(factors);
  s.k_ = k;
  s.wedge_count_ = binomial(s.factors_.size(), k);
  s.dim_ = s.coeff_.size() * s.wedge_count_;
  s.factor_pos_ = make_pos(*s.alg_, s.factors_);
  s.coeff_pos_ = make_pos(*s.alg_, s.coeff_);
  return s;
}

int ModuleSpace::factor_pos(int ambient_index) const {
  return factor_pos_[ambient_index];
}
int ModuleSpace::coeff_pos(int ambient_index) const {
  return coeff_pos_[ambient_index];
}

uint64_t ModuleSpace::rank_tuple(std::span<const int> t) const {
  if (kind_ == SpaceKind::Tensor) {
    uint64_t r = 0;
    for (int p : t) r = r * factors_.size() + static_cast<uint64_t>(p);
    return r;
  }
  uint64_t r = 0;  // colex: sum C(s_i, i), 1-based i over ascending tuple
  for (size_t i = 0; i < t.size(); ++i) r += binomial(t[i], i + 1);
  return r;
}

void ModuleSpace::unrank_tuple(uint64_t r, std::vector<int>& t) const {
  t.resize(k_);
  if (kind_ == SpaceKind::Tensor) {
    const uint64_t m = factors_.size();
    for (int i = k_ - 1; i >= 0; --i) {
      t[i] = static_cast<int>(r % m);
      r /= m;
    }
    return;
  }
  for (int i = k_; i >= 1; --i) {
    // largest s with C(s, i) <= r
    int s = i - 1;
    while (binomial(s + 1, i) <= r) ++s;
    t[i - 1] = s;
    r -= binomial(s, i);
  }
}

uint64_t ModuleSpace::rank_with_coeff(int coeff_position,
                                      std::span<const int> t) const {
  return static_cast<uint64_t>(coeff_position) * wedge_count_ + rank_tuple(t);
}

std::string ModuleSpace::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::Wedge: os << "wedge^" << k_; break;
    case SpaceKind::Tensor: os << "tensor^" << k_; break;
    case SpaceKind::CoeffWedge: os << "coeff(x)wedge^" << k_; break;
  }
  os << "[" << factors_.size() << "]";
  return os.str();
}

void Chain::add(uint64_t index, const Rational& c) {
  if (c == 0) return;
  terms.push_back({index, c});
}

void Chain::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t r = 0; r < terms.size();) {
    uint64_t idx = terms[r].first;
    Rational sum = 0;
    while (r < terms.size() && terms[r].first == idx) sum += terms[r++].second;
    if (sum != 0) terms[w++] = {idx, sum};
  }
  terms.resize(w);
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& t : o.terms) terms.push_back(t);
  normalize();
  return *this;
}

Chain& Chain::operator*=(const Rational& s) {
  if (s == 0) {
    terms.clear();
    return *this;
  }
  for (auto& t : terms) t.second *= s;
  return *this;
}

std::string Chain::str() const {
  if (terms.empty()) return "0";
  const auto& alg = space.algebra();
  std::ostringstream os;
  std::vector<int> tup;
  bool first = true;
  for (const auto& [idx, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    uint64_t r = idx;
    if (space.kind() == SpaceKind::CoeffWedge) {
      int cp = static_cast<int>(r / space.wedge_count());
      r %= space.wedge_count();
      os << alg.label(space.coeff()[cp]).str() << "(x)";
    }
    space.unrank_tuple(r, tup);
    const char* sep = space.kind() == SpaceKind::Tensor ? "(x)" : "^";
    for (size_t i = 0; i < tup.size(); ++i) {
      if (i) os << sep;
      os << alg.label(space.factors()[tup[i]]).str();
    }
    if (tup.empty()) os << "1";
  }
  return os.str();
}

int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    size_t j = i;
    while (j > 0 && t[j - 1] > t[j]) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] == t[i]) return 0;
  return sign;
}

}  // namespace schalg
