#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "schalg/rational.hpp"

namespace schalg {

// Column-major sparse matrix over the rationals (API-level carrier).
struct RatEntry {
  uint64_t row;
  Rational v;
};

struct SparseMatrix {
  uint64_t rows = 0, cols = 0;
  std::vector<std::vector<RatEntry>> col;

  SparseMatrix(uint64_t r, uint64_t c) : rows(r), cols(c), col(c) {}
  static SparseMatrix identity(uint64_t n);
  void add(uint64_t c, uint64_t r, Rational v);
  void finalize();  // sort entries, drop zeros
  uint64_t nnz() const;
};

struct SparseVector {
  std::vector<std::pair<uint64_t, Rational>> terms;  // sorted, no zeros
};

// Integer-entry column stream: boundary matrices are generated column by
// column and never need rational entries. reset() restarts the stream.
struct IntEntry {
  uint32_t row;
  int32_t v;
};

class ColumnStream {
 public:
  virtual ~ColumnStream() = default;
  virtual uint64_t rows() const = 0;
  virtual uint64_t cols() const = 0;
  virtual void reset() = 0;
  // fills `out` with the next column (sorted by row, merged); false when done
  virtual bool next(std::vector<IntEntry>& out) = 0;
};

// Materialized compressed column storage with int32 values.
struct IntCsc {
  uint64_t rows = 0, cols = 0;
  std::vector<uint64_t> colptr;
  std::vector<uint32_t> rowidx;
  std::vector<int32_t> val;

  static IntCsc from_stream(ColumnStream& s);
  static IntCsc from_matrix(const SparseMatrix& m);  // requires integer entries
  uint64_t nnz() const { return rowidx.size(); }
};

class VectorColumnStream : public ColumnStream {
 public:
  VectorColumnStream(uint64_t rows, std::vector<std::vector<IntEntry>> cols)
      : rows_(rows), cols_(std::move(cols)) {}
  uint64_t rows() const override { return rows_; }
  uint64_t cols() const override { return cols_.size(); }
  void reset() override { next_ = 0; }
  bool next(std::vector<IntEntry>& out) override {
    if (next_ >= cols_.size()) return false;
    out = cols_[next_++];
    return true;
  }

 private:
  uint64_t rows_;
  std::vector<std::vector<IntEntry>> cols_;
  size_t next_ = 0;
};

}  // namespace schalg
