#include "schalg/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace schalg {

SparseMatrix SparseMatrix::identity(uint64_t n) {
  SparseMatrix m(n, n);
  for (uint64_t i = 0; i < n; ++i) m.col[i].push_back({i, Rational(1)});
  return m;
}

void SparseMatrix::add(uint64_t c, uint64_t r, Rational v) {
  if (v == 0) return;
  col[c].push_back({r, std::move(v)});
}

void SparseMatrix::finalize() {
  for (auto& cv : col) {
    std::sort(cv.begin(), cv.end(),
              [](const RatEntry& a, const RatEntry& b) { return a.row < b.row; });
    std::vector<RatEntry> merged;
    for (size_t i = 0; i < cv.size();) {
      uint64_t r = cv[i].row;
      Rational sum = 0;
      while (i < cv.size() && cv[i].row == r) sum += cv[i++].v;
      if (sum != 0) merged.push_back({r, std::move(sum)});
    }
    cv = std::move(merged);
  }
}

uint64_t SparseMatrix::nnz() const {
  uint64_t n = 0;
  for (const auto& c : col) n += c.size();
  return n;
}

IntCsc IntCsc::from_stream(ColumnStream& s) {
  IntCsc m;
  m.rows = s.rows();
  m.cols = s.cols();
  m.colptr.reserve(m.cols + 1);
  m.colptr.push_back(0);
  std::vector<IntEntry> buf;
  s.reset();
  while (s.next(buf)) {
    for (const auto& e : buf) {
      m.rowidx.push_back(e.row);
      m.val.push_back(e.v);
    }
    m.colptr.push_back(m.rowidx.size());
  }
  if (m.colptr.size() != m.cols + 1)
    throw std::logic_error("column stream produced wrong column count");
  return m;
}

IntCsc IntCsc::from_matrix(const SparseMatrix& sm) {
  IntCsc m;
  m.rows = sm.rows;
  m.cols = sm.cols;
  m.colptr.push_back(0);
  for (const auto& cv : sm.col) {
    // scale the column by the lcm of denominators (rank-preserving)
    mpz_class lcm = 1;
    for (const auto& e : cv)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.v.get_den().get_mpz_t());
    for (const auto& e : cv) {
      Rational scaled = e.v * Rational(lcm);
      if (!scaled.get_num().fits_sint_p())
        throw std::overflow_error("entry too large for integer carrier");
      m.rowidx.push_back(static_cast<uint32_t>(e.row));
      m.val.push_back(static_cast<int32_t>(scaled.get_num().get_si()));
    }
    m.colptr.push_back(m.rowidx.size());
  }
  return m;
}

}  // namespace schalg
