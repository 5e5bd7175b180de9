#include "schalg/rank.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>

namespace schalg {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // deterministic Miller-Rabin for 32-bit with bases 2, 7, 61
  uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint32_t a : {2u, 7u, 61u}) {
    uint64_t x = 1, base = a % n;
    if (base == 0) continue;
    uint32_t e = d;
    while (e) {
      if (e & 1) x = x * base % n;
      base = base * base % n;
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<uint32_t> random_primes(uint64_t seed, int count,
                                    const std::vector<uint32_t>& exclude) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<uint32_t> out;
  while (static_cast<int>(out.size()) < count) {
    uint32_t cand = static_cast<uint32_t>((rng() & 0x3fffffffu) | 0x40000001u);
    if (!is_prime_u32(cand)) continue;
    if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
    if (std::find(exclude.begin(), exclude.end(), cand) != exclude.end()) continue;
    out.push_back(cand);
  }
  return out;
}

std::string strategy_str(StrategyKind s) {
  switch (s) {
    case StrategyKind::Auto: return "auto";
    case StrategyKind::Dense: return "dense";
    case StrategyKind::Sparse: return "sparse";
    case StrategyKind::Blackbox: return "blackbox";
  }
  return "?";
}

StrategyKind parse_strategy(const std::string& s) {
  if (s == "auto") return StrategyKind::Auto;
  if (s == "dense") return StrategyKind::Dense;
  if (s == "sparse") return StrategyKind::Sparse;
  if (s == "blackbox") return StrategyKind::Blackbox;
  throw std::invalid_argument("unknown strategy: " + s);
}

std::string method_str(RankMethod m) {
  switch (m) {
    case RankMethod::DenseEchelon: return "dense-echelon";
    case RankMethod::SparseElimination: return "sparse-elimination";
    case RankMethod::Blackbox: return "blackbox";
  }
  return "?";
}

namespace {

constexpr uint64_t kDenseMaxEntries = 1ull << 22;  // 4M cells
constexpr uint64_t kSparseMaxCols = 300000;

// ---------------------------------------------------------------------------
// dense echelon mod p
// ---------------------------------------------------------------------------

uint64_t dense_rank_mod_p(const IntCsc& m, uint32_t p) {
  PrimeField F(p);
  const bool transpose = m.rows > m.cols;
  const uint64_t R = transpose ? m.cols : m.rows;
  const uint64_t C = transpose ? m.rows : m.cols;
  std::vector<uint32_t> a(R * C, 0);
  for (uint64_t c = 0; c < m.cols; ++c)
    for (uint64_t k = m.colptr[c]; k < m.colptr[c + 1]; ++k) {
      uint64_t r = m.rowidx[k];
      uint32_t v = F.from_int(m.val[k]);
      if (transpose)
        a[c * C + r] = F.add(a[c * C + r], v);
      else
        a[r * C + c] = F.add(a[r * C + c], v);
    }
  uint64_t rank = 0, rr = 0;
  for (uint64_t c = 0; c < C && rr < R; ++c) {
    uint64_t piv = rr;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != rr)
      std::swap_ranges(a.begin() + piv * C, a.begin() + (piv + 1) * C,
                       a.begin() + rr * C);
    uint32_t inv = F.inv(a[rr * C + c]);
    for (uint64_t cc = c; cc < C; ++cc) a[rr * C + cc] = F.mul(a[rr * C + cc], inv);
    for (uint64_t r2 = rr + 1; r2 < R; ++r2) {
      uint32_t f = a[r2 * C + c];
      if (!f) continue;
      for (uint64_t cc = c; cc < C; ++cc)
        a[r2 * C + cc] = F.sub(a[r2 * C + cc], F.mul(f, a[rr * C + cc]));
    }
    ++rank;
    ++rr;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// sparse elimination with singleton cascades, Markowitz pivoting and a dense
// finish; templated over the coefficient field
// ---------------------------------------------------------------------------

struct FpOps {
  using V = uint32_t;
  PrimeField F;
  explicit FpOps(uint32_t p) : F(p) {}
  V from_int(int64_t x) const { return F.from_int(x); }
  bool is_zero(V a) const { return a == 0; }
  V sub_mul(V a, V f, V b) const { return F.sub(a, F.mul(f, b)); }  // a - f*b
  V mul(V a, V b) const { return F.mul(a, b); }
  V inv(V a) const { return F.inv(a); }
  V neg(V a) const { return F.neg(a); }
};

struct RatOps {
  using V = Rational;
  V from_int(int64_t x) const { return Rational(static_cast<long>(x)); }
  bool is_zero(const V& a) const { return a == 0; }
  V sub_mul(const V& a, const V& f, const V& b) const { return a - f * b; }
  V mul(const V& a, const V& b) const { return a * b; }
  V inv(const V& a) const { return 1 / a; }
  V neg(const V& a) const { return -a; }
};

template <class Ops>
class SparseElim {
 public:
  using V = typename Ops::V;
  struct Entry {
    uint32_t row;
    V v;
  };

  SparseElim(Ops ops, uint64_t rows, uint64_t memory_cap)
      : ops_(std::move(ops)), rows_(rows), memory_cap_(memory_cap) {
    row_nnz_.assign(rows, 0);
    row_live_.assign(rows, 1);
  }

  void add_column(const std::vector<Entry>& col) {
    cols_.push_back(col);
    col_live_.push_back(1);
    uint32_t c = static_cast<uint32_t>(cols_.size() - 1);
    for (const auto& e : col) {
      ++row_nnz_[e.row];
      row_cols_[e.row].push_back(c);
    }
    nnz_ += col.size();
  }

  void reserve_rows() { row_cols_.assign(rows_, {}); }

  // returns the rank
  uint64_t run() {
    singleton_cascade();
    compact();
    markowitz();
    return rank_;
  }

 private:
  bool col_contains(uint32_t c, uint32_t r, V* out) const {
    const auto& cv = cols_[c];
    auto it = std::lower_bound(
        cv.begin(), cv.end(), r,
        [](const Entry& e, uint32_t row) { return e.row < row; });
    if (it == cv.end() || it->row != r) return false;
    if (out) *out = it->v;
    return true;
  }

  // Phase A: pivots that cause no arithmetic. Columns stay physically
  // untouched; liveness is tracked by flags and counters.
  void singleton_cascade() {
    std::vector<uint32_t> col_q, row_q;
    for (uint32_t c = 0; c < cols_.size(); ++c) {
      uint32_t live = 0;
      for (const auto& e : cols_[c])
        if (row_live_[e.row]) ++live;
      col_nnz_.push_back(live);
      if (live == 1) col_q.push_back(c);
    }
    for (uint32_t r = 0; r < rows_; ++r)
      if (row_nnz_[r] == 1) row_q.push_back(r);

    auto kill_row = [&](uint32_t r) {
      row_live_[r] = 0;
      for (uint32_t c : row_cols_[r]) {
        if (!col_live_[c]) continue;
        if (!col_contains(c, r, nullptr)) continue;
        if (--col_nnz_[c] == 1) col_q.push_back(c);
      }
      row_cols_[r].clear();
      row_cols_[r].shrink_to_fit();
    };
    auto kill_col = [&](uint32_t c) {
      col_live_[c] = 0;
      for (const auto& e : cols_[c]) {
        if (!row_live_[e.row]) continue;
        if (--row_nnz_[e.row] == 1) row_q.push_back(e.row);
      }
    };

    while (!col_q.empty() || !row_q.empty()) {
      if (!col_q.empty()) {
        uint32_t c = col_q.back();
        col_q.pop_back();
        if (!col_live_[c] || col_nnz_[c] != 1) continue;
        uint32_t pr = UINT32_MAX;
        for (const auto& e : cols_[c])
          if (row_live_[e.row]) { pr = e.row; break; }
        if (pr == UINT32_MAX) { col_live_[c] = 0; continue; }
        // pivot (pr, c): the pivot column has one live entry, so the update
        // only deletes row pr from the other columns
        col_live_[c] = 0;
        ++rank_;
        kill_row(pr);
        continue;
      }
      uint32_t r = row_q.back();
      row_q.pop_back();
      if (!row_live_[r] || row_nnz_[r] != 1) continue;
      uint32_t pc = UINT32_MAX;
      for (uint32_t c : row_cols_[r])
        if (col_live_[c] && col_contains(c, r, nullptr)) { pc = c; break; }
      if (pc == UINT32_MAX) { row_live_[r] = 0; continue; }
      // pivot (r, pc): no other column touches row r, so no update
      ++rank_;
      row_live_[r] = 0;
      kill_col(pc);
    }
  }

  // Rebuild live columns physically; drop dead entries; rebuild adjacency.
  void compact() {
    nnz_ = 0;
    for (uint32_t c = 0; c < cols_.size(); ++c) {
      if (!col_live_[c]) {
        cols_[c].clear();
        cols_[c].shrink_to_fit();
        continue;
      }
      auto& cv = cols_[c];
      size_t w = 0;
      for (size_t i = 0; i < cv.size(); ++i)
        if (row_live_[cv[i].row]) cv[w++] = std::move(cv[i]);
      cv.resize(w);
      if (w == 0) col_live_[c] = 0;
      col_nnz_[c] = static_cast<uint32_t>(w);
      nnz_ += w;
    }
    for (auto& rc : row_cols_) rc.clear();
    for (uint32_t c = 0; c < cols_.size(); ++c)
      if (col_live_[c])
        for (const auto& e : cols_[c]) row_cols_[e.row].push_back(c);
    live_rows_ = 0;
    for (uint32_t r = 0; r < rows_; ++r) {
      if (row_live_[r] && row_nnz_[r] == 0) row_live_[r] = 0;
      if (row_live_[r]) ++live_rows_;
    }
    live_cols_ = 0;
    for (uint32_t c = 0; c < cols_.size(); ++c)
      if (col_live_[c]) ++live_cols_;
  }

  void rebucket(uint32_t c) {
    uint32_t b = std::min<uint32_t>(col_nnz_[c], kMaxBucket);
    buckets_[b].push_back(c);
  }

  void markowitz() {
    buckets_.assign(kMaxBucket + 1, {});
    for (uint32_t c = 0; c < cols_.size(); ++c)
      if (col_live_[c] && col_nnz_[c] > 0) rebucket(c);
    std::vector<uint32_t> singleton_rows;
    for (uint32_t r = 0; r < rows_; ++r)
      if (row_live_[r] && row_nnz_[r] == 1) singleton_rows.push_back(r);

    std::vector<Entry> merged;
    uint64_t steps = 0;
    while (true) {
      if ((++steps & 63) == 0 && try_dense_finish()) return;
      // free pivots first: rows of weight one cost nothing
      uint32_t pr = UINT32_MAX, pc = UINT32_MAX;
      while (!singleton_rows.empty()) {
        uint32_t r = singleton_rows.back();
        singleton_rows.pop_back();
        if (!row_live_[r] || row_nnz_[r] != 1) continue;
        for (uint32_t c : row_cols_[r])
          if (col_live_[c] && col_contains(c, r, nullptr)) { pc = c; break; }
        if (pc != UINT32_MAX) { pr = r; break; }
        row_cols_[r].clear();
      }
      if (pr == UINT32_MAX) {
        // Markowitz candidate scan over the lowest occupied buckets
        uint64_t best = UINT64_MAX;
        int seen_buckets = 0;
        for (uint32_t b = 1; b <= kMaxBucket && seen_buckets < 2; ++b) {
          auto& bucket = buckets_[b];
          bool any = false;
          int scanned = 0;
          for (size_t i = bucket.size(); i-- > 0 && scanned < 24;) {
            uint32_t c = bucket[i];
            uint32_t eff = std::min<uint32_t>(col_nnz_[c], kMaxBucket);
            if (!col_live_[c] || col_nnz_[c] == 0 || eff != b) {
              bucket.erase(bucket.begin() + i);
              if (col_live_[c] && col_nnz_[c] > 0) rebucket(c);
              continue;
            }
            any = true;
            ++scanned;
            uint32_t brow = UINT32_MAX, brnnz = UINT32_MAX;
            for (const auto& e : cols_[c])
              if (row_nnz_[e.row] < brnnz ||
                  (row_nnz_[e.row] == brnnz && e.row < brow)) {
                brnnz = row_nnz_[e.row];
                brow = e.row;
              }
            uint64_t score = (uint64_t)(col_nnz_[c] - 1) * (brnnz - 1);
            if (score < best || (score == best && c < pc)) {
              best = score;
              pc = c;
              pr = brow;
            }
            if (best == 0) break;
          }
          if (any) ++seen_buckets;
          if (best == 0) break;
        }
        if (pc == UINT32_MAX) break;  // nothing live left
      }

      // eliminate at (pr, pc)
      V pv{};
      bool ok = col_contains(pc, pr, &pv);
      assert(ok);
      (void)ok;
      V pinv = ops_.inv(pv);
      std::vector<uint32_t> adj;
      adj.swap(row_cols_[pr]);
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
      const auto pivot_col = cols_[pc];  // copy; updates reuse it
      for (uint32_t c2 : adj) {
        if (c2 == pc || !col_live_[c2]) continue;
        V a{};
        if (!col_contains(c2, pr, &a)) continue;  // stale adjacency
        V f = ops_.mul(a, pinv);
        auto& dst = cols_[c2];
        merged.clear();
        merged.reserve(dst.size() + pivot_col.size());
        size_t i = 0, j = 0;
        while (i < dst.size() || j < pivot_col.size()) {
          if (j == pivot_col.size() ||
              (i < dst.size() && dst[i].row < pivot_col[j].row)) {
            merged.push_back(std::move(dst[i++]));
          } else if (i == dst.size() || pivot_col[j].row < dst[i].row) {
            // fill
            V nv = ops_.neg(ops_.mul(f, pivot_col[j].v));
            if (!ops_.is_zero(nv)) {
              uint32_t r2 = pivot_col[j].row;
              merged.push_back({r2, std::move(nv)});
              ++row_nnz_[r2];
              row_cols_[r2].push_back(c2);
              ++nnz_;
            }
            ++j;
          } else {
            V nv = ops_.sub_mul(dst[i].v, f, pivot_col[j].v);
            uint32_t r2 = dst[i].row;
            if (ops_.is_zero(nv)) {
              if (--row_nnz_[r2] == 1 && r2 != pr) singleton_rows.push_back(r2);
              --nnz_;
            } else {
              merged.push_back({r2, std::move(nv)});
            }
            ++i;
            ++j;
          }
        }
        dst.swap(merged);
        col_nnz_[c2] = static_cast<uint32_t>(dst.size());
        if (dst.empty())
          col_live_[c2] = 0;
        else
          rebucket(c2);
      }
      // retire pivot row and column
      for (const auto& e : pivot_col) {
        if (e.row == pr || !row_live_[e.row]) continue;
        if (--row_nnz_[e.row] == 1) singleton_rows.push_back(e.row);
      }
      nnz_ -= cols_[pc].size();
      cols_[pc].clear();
      cols_[pc].shrink_to_fit();
      col_live_[pc] = 0;
      row_live_[pr] = 0;
      --live_rows_;
      --live_cols_;
      ++rank_;

      if (nnz_ * sizeof(Entry) > memory_cap_)
        throw BudgetError("sparse elimination exceeded the memory cap", rank_, nnz_);
    }
  }

  bool try_dense_finish() {
    recount_live();
    if (live_rows_ == 0 || live_cols_ == 0) return false;
    if (live_rows_ * live_cols_ > kDenseMaxEntries) return false;
    if (nnz_ * 6 < live_rows_ * live_cols_) return false;  // still sparse
    rank_ += dense_rest();
    return true;
  }

  void recount_live() {
    live_rows_ = live_cols_ = 0;
    uint64_t n = 0;
    for (uint32_t c = 0; c < cols_.size(); ++c)
      if (col_live_[c]) {
        if (col_nnz_[c] == 0) { col_live_[c] = 0; continue; }
        ++live_cols_;
        n += col_nnz_[c];
      }
    for (uint32_t r = 0; r < rows_; ++r)
      if (row_live_[r]) {
        if (row_nnz_[r] == 0) { row_live_[r] = 0; continue; }
        ++live_rows_;
      }
    nnz_ = n;
  }

  uint64_t dense_rest();

  Ops ops_;
  uint64_t rows_;
  uint64_t memory_cap_;
  std::vector<std::vector<Entry>> cols_;
  std::vector<uint8_t> row_live_, col_live_;
  std::vector<uint32_t> row_nnz_, col_nnz_;
  std::vector<std::vector<uint32_t>> row_cols_;
  static constexpr uint32_t kMaxBucket = 64;
  std::vector<std::vector<uint32_t>> buckets_;
  uint64_t nnz_ = 0, rank_ = 0, live_rows_ = 0, live_cols_ = 0;
};

template <class Ops>
uint64_t SparseElim<Ops>::dense_rest() {
  // local dense echelon over the live submatrix
  std::vector<uint32_t> rmap(rows_, UINT32_MAX);
  uint32_t lr = 0;
  for (uint32_t r = 0; r < rows_; ++r)
    if (row_live_[r]) rmap[r] = lr++;
  std::vector<std::vector<V>> rowsv;
  uint32_t lc = 0;
  std::vector<V> zero_row(live_cols_);
  for (auto& z : zero_row) z = ops_.from_int(0);
  rowsv.assign(lr, zero_row);
  for (uint32_t c = 0; c < cols_.size(); ++c) {
    if (!col_live_[c]) continue;
    for (const auto& e : cols_[c])
      if (row_live_[e.row]) rowsv[rmap[e.row]][lc] = e.v;
    ++lc;
  }
  uint64_t rank = 0, rr = 0;
  for (uint32_t c = 0; c < lc && rr < lr; ++c) {
    uint32_t piv = UINT32_MAX;
    for (uint32_t r = rr; r < lr; ++r)
      if (!ops_.is_zero(rowsv[r][c])) { piv = r; break; }
    if (piv == UINT32_MAX) continue;
    std::swap(rowsv[piv], rowsv[rr]);
    V inv = ops_.inv(rowsv[rr][c]);
    for (uint32_t cc = c; cc < lc; ++cc)
      rowsv[rr][cc] = ops_.mul(rowsv[rr][cc], inv);
    for (uint32_t r = rr + 1; r < lr; ++r) {
      V f = rowsv[r][c];
      if (ops_.is_zero(f)) continue;
      for (uint32_t cc = c; cc < lc; ++cc)
        rowsv[r][cc] = ops_.sub_mul(rowsv[r][cc], f, rowsv[rr][cc]);
    }
    ++rank;
    ++rr;
  }
  return rank;
}

uint64_t sparse_rank_mod_p(const IntCsc& m, uint32_t p, uint64_t memory_cap) {
  FpOps ops(p);
  SparseElim<FpOps> elim(ops, m.rows, memory_cap);
  elim.reserve_rows();
  std::vector<SparseElim<FpOps>::Entry> col;
  for (uint64_t c = 0; c < m.cols; ++c) {
    col.clear();
    for (uint64_t k = m.colptr[c]; k < m.colptr[c + 1]; ++k) {
      uint32_t v = ops.from_int(m.val[k]);
      if (v) col.push_back({m.rowidx[k], v});
    }
    elim.add_column(col);
  }
  return elim.run();
}

// ---------------------------------------------------------------------------
// black-box (Wiedemann) rank mod p
// ---------------------------------------------------------------------------

// minimal generator of the sequence via Berlekamp-Massey; returns the
// connection polynomial C with C[0] = 1
std::vector<uint32_t> berlekamp_massey(const std::vector<uint32_t>& s,
                                       const PrimeField& F) {
  std::vector<uint32_t> C{1}, B{1};
  uint32_t b = 1;
  int L = 0, m = 1;
  for (size_t n = 0; n < s.size(); ++n) {
    uint64_t d = s[n];
    for (int i = 1; i <= L; ++i)
      if (i < (int)C.size())
        d = (d + (uint64_t)C[i] * s[n - i]) % F.p;
    uint32_t delta = static_cast<uint32_t>(d);
    if (delta == 0) {
      ++m;
    } else if (2 * L <= (int)n) {
      auto T = C;
      uint32_t coef = F.mul(delta, F.inv(b));
      if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
      for (size_t i = 0; i < B.size(); ++i)
        C[i + m] = F.sub(C[i + m], F.mul(coef, B[i]));
      L = static_cast<int>(n) + 1 - L;
      B = T;
      b = delta;
      m = 1;
    } else {
      uint32_t coef = F.mul(delta, F.inv(b));
      if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
      for (size_t i = 0; i < B.size(); ++i)
        C[i + m] = F.sub(C[i + m], F.mul(coef, B[i]));
      ++m;
    }
  }
  C.resize(L + 1, 0);
  return C;
}

// Kaltofen-Saunders style Monte-Carlo rank: B = D1 M2 D2 M1 D1 over the
// smaller side; with random diagonals, minpoly(B) = x * f(x) with
// deg f = rank(A) with high probability. Cross-prime agreement upstream
// covers the failure odds.
uint64_t wiedemann_core(uint64_t N, const PrimeField& F, uint64_t seed,
                        const std::function<void(std::vector<uint32_t>&)>& applyB) {
  if (N == 0) return 0;
  std::mt19937_64 rng(seed ^ 0x5151515151515151ull);
  std::vector<uint32_t> u(N), v(N);
  for (auto& x : u) x = static_cast<uint32_t>(rng() % F.p);
  for (auto& x : v) x = static_cast<uint32_t>(rng() % F.p);
  std::vector<uint32_t> cur = v, seq;
  const uint64_t max_len = 2 * N + 8;
  std::vector<uint32_t> gen{1};
  while (seq.size() < max_len) {
    size_t batch = std::min<size_t>(256, max_len - seq.size());
    for (size_t i = 0; i < batch; ++i) {
      uint64_t dot = 0;
      for (uint64_t j = 0; j < N; ++j)
        dot = (dot + (uint64_t)F.mul(u[j], cur[j])) % F.p;
      seq.push_back(static_cast<uint32_t>(dot));
      applyB(cur);
    }
    gen = berlekamp_massey(seq, F);
    size_t L = gen.size() - 1;
    if (seq.size() >= 2 * L + 32) break;
  }
  size_t L = gen.size() - 1;
  // minpoly lambda(x) = x^L C(1/x); the multiplicity of the root 0 equals the
  // number of trailing zero coefficients of C
  size_t zero_mult = 0;
  while (zero_mult < L && gen[L - zero_mult] == 0) ++zero_mult;
  return L - zero_mult;
}

struct DiagPrecond {
  PrimeField F;
  std::vector<uint32_t> d1, d2;
  std::vector<uint32_t> big;
  bool small_side_is_rows;

  DiagPrecond(uint64_t rows, uint64_t cols, uint32_t p, uint64_t seed)
      : F(p), small_side_is_rows(rows < cols) {
    uint64_t N = std::min(rows, cols), M = std::max(rows, cols);
    std::mt19937_64 rng(seed ^ 0xabcdef1234567890ull);
    auto rnd = [&] { return static_cast<uint32_t>(rng() % (F.p - 1)) + 1; };
    d1.resize(N);
    d2.resize(M);
    for (auto& x : d1) x = rnd();
    for (auto& x : d2) x = rnd();
    big.resize(M);
  }
};

uint64_t blackbox_rank_mod_p(const IntCsc& m, uint32_t p, uint64_t seed) {
  if (m.rows == 0 || m.cols == 0 || m.nnz() == 0) return 0;
  PrimeField F(p);
  auto pre = std::make_shared<DiagPrecond>(m.rows, m.cols, p, seed);
  auto apply_A = [&m, F](const std::vector<uint32_t>& x, std::vector<uint32_t>& y) {
    std::fill(y.begin(), y.end(), 0);
    for (uint64_t c = 0; c < m.cols; ++c) {
      uint32_t xc = x[c];
      if (!xc) continue;
      for (uint64_t k = m.colptr[c]; k < m.colptr[c + 1]; ++k) {
        uint32_t v = F.from_int(m.val[k]);
        y[m.rowidx[k]] = F.add(y[m.rowidx[k]], F.mul(v, xc));
      }
    }
  };
  auto apply_At = [&m, F](const std::vector<uint32_t>& x, std::vector<uint32_t>& y) {
    for (uint64_t c = 0; c < m.cols; ++c) {
      uint64_t acc = 0;
      for (uint64_t k = m.colptr[c]; k < m.colptr[c + 1]; ++k) {
        uint32_t v = F.from_int(m.val[k]);
        acc = (acc + (uint64_t)F.mul(v, x[m.rowidx[k]])) % F.p;
      }
      y[c] = static_cast<uint32_t>(acc);
    }
  };
  auto applyB = [pre, apply_A, apply_At, F](std::vector<uint32_t>& x) {
    const uint64_t N = pre->d1.size();
    for (uint64_t i = 0; i < N; ++i) x[i] = F.mul(x[i], pre->d1[i]);
    if (pre->small_side_is_rows) {
      apply_At(x, pre->big);
      for (size_t i = 0; i < pre->big.size(); ++i)
        pre->big[i] = F.mul(pre->big[i], pre->d2[i]);
      apply_A(pre->big, x);
    } else {
      apply_A(x, pre->big);
      for (size_t i = 0; i < pre->big.size(); ++i)
        pre->big[i] = F.mul(pre->big[i], pre->d2[i]);
      apply_At(pre->big, x);
    }
    for (uint64_t i = 0; i < N; ++i) x[i] = F.mul(x[i], pre->d1[i]);
  };
  return wiedemann_core(std::min(m.rows, m.cols), F, seed, applyB);
}

}  // namespace

uint64_t blackbox_rank_stream(ColumnStream& s, uint32_t p, uint64_t seed) {
  const uint64_t R = s.rows(), C = s.cols();
  if (R == 0 || C == 0) return 0;
  PrimeField F(p);
  auto pre = std::make_shared<DiagPrecond>(R, C, p, seed);
  std::vector<IntEntry> buf;
  auto apply_A = [&](const std::vector<uint32_t>& x, std::vector<uint32_t>& y) {
    std::fill(y.begin(), y.end(), 0);
    s.reset();
    uint64_t c = 0;
    while (s.next(buf)) {
      uint32_t xc = x[c++];
      if (!xc) continue;
      for (const auto& e : buf) {
        uint32_t v = F.from_int(e.v);
        y[e.row] = F.add(y[e.row], F.mul(v, xc));
      }
    }
  };
  auto apply_At = [&](const std::vector<uint32_t>& x, std::vector<uint32_t>& y) {
    s.reset();
    uint64_t c = 0;
    while (s.next(buf)) {
      uint64_t acc = 0;
      for (const auto& e : buf) {
        uint32_t v = F.from_int(e.v);
        acc = (acc + (uint64_t)F.mul(v, x[e.row])) % F.p;
      }
      y[c++] = static_cast<uint32_t>(acc);
    }
  };
  auto applyB = [&, pre](std::vector<uint32_t>& x) {
    const uint64_t N = pre->d1.size();
    for (uint64_t i = 0; i < N; ++i) x[i] = F.mul(x[i], pre->d1[i]);
    if (pre->small_side_is_rows) {
      apply_At(x, pre->big);
      for (size_t i = 0; i < pre->big.size(); ++i)
        pre->big[i] = F.mul(pre->big[i], pre->d2[i]);
      apply_A(pre->big, x);
    } else {
      apply_A(x, pre->big);
      for (size_t i = 0; i < pre->big.size(); ++i)
        pre->big[i] = F.mul(pre->big[i], pre->d2[i]);
      apply_At(pre->big, x);
    }
    for (uint64_t i = 0; i < N; ++i) x[i] = F.mul(x[i], pre->d1[i]);
  };
  return wiedemann_core(std::min(R, C), F, seed, applyB);
}

uint64_t rank_mod_p(const IntCsc& m, uint32_t p, StrategyKind kind, uint64_t seed,
                    uint64_t memory_cap) {
  if (m.rows == 0 || m.cols == 0) return 0;
  switch (kind) {
    case StrategyKind::Dense:
      return dense_rank_mod_p(m, p);
    case StrategyKind::Sparse:
      return sparse_rank_mod_p(m, p, memory_cap);
    case StrategyKind::Blackbox:
      return blackbox_rank_mod_p(m, p, seed);
    case StrategyKind::Auto: {
      if (m.cols < 512 && m.rows * m.cols <= kDenseMaxEntries)
        return dense_rank_mod_p(m, p);
      if (m.cols <= kSparseMaxCols) {
        try {
          return sparse_rank_mod_p(m, p, memory_cap);
        } catch (const BudgetError&) {
          return blackbox_rank_mod_p(m, p, seed);
        }
      }
      return blackbox_rank_mod_p(m, p, seed);
    }
  }
  return 0;
}

uint64_t rank_rational(const SparseMatrix& m, uint64_t memory_cap) {
  RatOps ops;
  SparseElim<RatOps> elim(ops, m.rows, memory_cap);
  elim.reserve_rows();
  std::vector<SparseElim<RatOps>::Entry> col;
  for (uint64_t c = 0; c < m.cols; ++c) {
    col.clear();
    for (const auto& e : m.col[c]) col.push_back({static_cast<uint32_t>(e.row), e.v});
    elim.add_column(col);
  }
  return elim.run();
}

RankCertificate rank(const SparseMatrix& m, const RankStrategy& strategy) {
  RankCertificate cert;
  if (strategy.field == FieldKind::Rationals) {
    cert.rank = rank_rational(m, strategy.memory_cap);
    cert.method = m.cols < 512 ? RankMethod::DenseEchelon : RankMethod::SparseElimination;
    cert.agreement = true;
    return cert;
  }
  if (strategy.prime_count < 1)
    throw std::invalid_argument("modular rank needs at least one prime");
  IntCsc csc = IntCsc::from_matrix(m);
  std::vector<uint32_t> primes = strategy.primes;
  if (primes.empty())
    primes = random_primes(strategy.seed, strategy.prime_count);
  auto run_all = [&](const std::vector<uint32_t>& ps) {
    std::vector<uint64_t> ranks;
    for (uint32_t p : ps)
      ranks.push_back(rank_mod_p(csc, p, strategy.kind, strategy.seed,
                                 strategy.memory_cap));
    return ranks;
  };
  std::vector<uint64_t> ranks = run_all(primes);
  bool agree = std::all_of(ranks.begin(), ranks.end(),
                           [&](uint64_t r) { return r == ranks[0]; });
  if (!agree) {
    // unlucky prime: retry with a fresh third prime
    auto extra = random_primes(strategy.seed + 1, 1, primes);
    primes.insert(primes.end(), extra.begin(), extra.end());
    ranks.push_back(rank_mod_p(csc, extra[0], strategy.kind, strategy.seed,
                               strategy.memory_cap));
  }
  cert.rank = *std::max_element(ranks.begin(), ranks.end());
  cert.primes_used = primes;
  cert.agreement = std::all_of(ranks.begin(), ranks.end(),
                               [&](uint64_t r) { return r == cert.rank; });
  switch (strategy.kind) {
    case StrategyKind::Dense: cert.method = RankMethod::DenseEchelon; break;
    case StrategyKind::Sparse: cert.method = RankMethod::SparseElimination; break;
    case StrategyKind::Blackbox: cert.method = RankMethod::Blackbox; break;
    case StrategyKind::Auto:
      cert.method = m.cols < 512 ? RankMethod::DenseEchelon
                    : m.cols <= kSparseMaxCols ? RankMethod::SparseElimination
                                               : RankMethod::Blackbox;
      break;
  }
  return cert;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m, uint64_t memory_cap) {
  // sparse RREF by rows, leftmost-column pivots; kernel from free columns
  std::map<uint64_t, std::vector<std::pair<uint64_t, Rational>>> rows;
  for (uint64_t c = 0; c < m.cols; ++c)
    for (const auto& e : m.col[c]) rows[e.row].push_back({c, e.v});

  std::map<uint64_t, std::vector<std::pair<uint64_t, Rational>>> pivots;
  uint64_t nnz = 0;
  for (auto& [r, row0] : rows) {
    std::map<uint64_t, Rational> row(row0.begin(), row0.end());
    while (!row.empty()) {
      auto it = row.begin();
      if (it->second == 0) { row.erase(it); continue; }
      uint64_t c = it->first;
      auto piv = pivots.find(c);
      if (piv == pivots.end()) {
        Rational inv = 1 / it->second;
        std::vector<std::pair<uint64_t, Rational>> stored;
        for (auto& [cc, v] : row)
          if (v != 0) stored.push_back({cc, v * inv});
        nnz += stored.size();
        if (nnz * (sizeof(uint64_t) + sizeof(Rational)) > memory_cap)
          throw BudgetError("kernel elimination exceeded the memory cap",
                            pivots.size(), nnz);
        pivots[c] = std::move(stored);
        break;
      }
      Rational f = it->second;
      for (const auto& [cc, v] : piv->second) {
        auto& slot = row[cc];
        slot -= f * v;
        if (slot == 0) row.erase(cc);
      }
    }
  }
  // back substitution, descending pivot columns
  std::vector<uint64_t> pivcols;
  for (const auto& [c, _] : pivots) pivcols.push_back(c);
  for (size_t i = pivcols.size(); i-- > 0;) {
    uint64_t c = pivcols[i];
    for (size_t j = 0; j < i; ++j) {
      auto& upper = pivots[pivcols[j]];
      auto it = std::find_if(upper.begin(), upper.end(),
                             [&](const auto& e) { return e.first == c; });
      if (it == upper.end()) continue;
      Rational f = it->second;
      std::map<uint64_t, Rational> merged(upper.begin(), upper.end());
      for (const auto& [cc, v] : pivots[c]) {
        auto& slot = merged[cc];
        slot -= f * v;
        if (slot == 0) merged.erase(cc);
      }
      upper.assign(merged.begin(), merged.end());
    }
  }
  std::vector<SparseVector> kernel;
  std::vector<bool> is_piv(m.cols, false);
  for (uint64_t c : pivcols) is_piv[c] = true;
  for (uint64_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    SparseVector v;
    for (uint64_t c : pivcols) {
      const auto& row = pivots[c];
      auto it = std::find_if(row.begin(), row.end(),
                             [&](const auto& e) { return e.first == f; });
      if (it != row.end()) v.terms.push_back({c, -it->second});
    }
    v.terms.push_back({f, Rational(1)});
    std::sort(v.terms.begin(), v.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return kernel;
}

bool in_column_span(const SparseMatrix& m, const SparseVector& b) {
  uint64_t r0 = rank_rational(m);
  SparseMatrix aug(m.rows, m.cols + 1);
  aug.col = m.col;
  aug.col.push_back({});
  for (const auto& [r, v] : b.terms) aug.col[m.cols].push_back({r, v});
  return rank_rational(aug) == r0;
}

}  // namespace schalg
