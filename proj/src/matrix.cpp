#include "hhkit/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace hhkit {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols,
                           std::vector<Row> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_) throw InternalError("matrix: row count mismatch");
  for (const Row& r : data_)
    for (const Entry& e : r)
      if (e.first >= cols_) throw InternalError("matrix: column out of range");
}

SparseMatrix SparseMatrix::zero(std::size_t rows, std::size_t cols) {
  return SparseMatrix(rows, cols, std::vector<Row>(rows));
}

SparseMatrix SparseMatrix::identity(std::size_t n, const Field& field) {
  std::vector<Row> data(n);
  for (std::size_t i = 0; i < n; ++i) data[i] = {{i, field.one()}};
  return SparseMatrix(n, n, std::move(data));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const Row& r : data_) total += r.size();
  return total;
}

Scalar SparseMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = data_.at(r);
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Scalar();
}

SparseMatrix SparseMatrix::times(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw InternalError("matrix: size mismatch in *");
  std::vector<Row> out(rows_);
  std::map<std::size_t, Scalar> acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    acc.clear();
    for (const auto& [k, v] : data_[i])
      for (const auto& [j, w] : other.data_[k]) {
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, v * w);
        else
          it->second += v * w;
      }
    Row r;
    for (const auto& [j, v] : acc)
      if (!v.is_zero()) r.emplace_back(j, v);
    out[i] = std::move(r);
  }
  return SparseMatrix(rows_, other.cols_, std::move(out));
}

SparseMatrix SparseMatrix::plus(const SparseMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InternalError("matrix: size mismatch in +");
  std::vector<Row> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Row r;
    auto a = data_[i].begin(), ae = data_[i].end();
    auto b = other.data_[i].begin(), be = other.data_[i].end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        r.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        r.push_back(*b++);
      } else {
        Scalar v = a->second + b->second;
        if (!v.is_zero()) r.emplace_back(a->first, v);
        ++a;
        ++b;
      }
    }
    out[i] = std::move(r);
  }
  return SparseMatrix(rows_, cols_, std::move(out));
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  std::vector<Row> out(rows_);
  if (!s.is_zero())
    for (std::size_t i = 0; i < rows_; ++i) {
      out[i] = data_[i];
      for (Entry& e : out[i]) e.second *= s;
    }
  return SparseMatrix(rows_, cols_, std::move(out));
}

SparseMatrix SparseMatrix::transposed() const {
  std::vector<Row> out(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, v] : data_[i]) out[j].emplace_back(i, v);
  return SparseMatrix(cols_, rows_, std::move(out));
}

bool SparseMatrix::is_zero() const {
  for (const Row& r : data_)
    if (!r.empty()) return false;
  return true;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

// ---- rank over Q: fraction-free elimination on integer rows --------------

using IntRow = std::vector<std::pair<std::size_t, BigInt>>;  // sorted by col

void strip_content(IntRow& row) {
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

// new_row = pv_val * row - row_c * pv_row, then content-stripped.
IntRow eliminate_int(const IntRow& row, const BigInt& row_c, const IntRow& pv,
                     const BigInt& pv_val) {
  IntRow out;
  out.reserve(row.size() + pv.size());
  auto a = row.begin(), ae = row.end();
  auto b = pv.begin(), be = pv.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.emplace_back(a->first, pv_val * a->second);
      ++a;
    } else if (a == ae || b->first < a->first) {
      out.emplace_back(b->first, -row_c * b->second);
      ++b;
    } else {
      BigInt v = pv_val * a->second - row_c * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  strip_content(out);
  return out;
}

long rank_char0(const SparseMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).empty()) continue;
    BigInt l = 1;
    for (const auto& [c, v] : m.row(i)) l = boost::multiprecision::lcm(l, v.den());
    IntRow r;
    r.reserve(m.row(i).size());
    for (const auto& [c, v] : m.row(i)) r.emplace_back(c, v.num() * (l / v.den()));
    strip_content(r);
    rows.push_back(std::move(r));
  }

  long rank = 0;
  while (!rows.empty()) {
    // Pivot row: fewest entries.  Pivot column within it: fewest occurrences
    // across remaining rows, ties broken by smaller magnitude then index.
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best].size()) best = i;

    std::map<std::size_t, std::size_t> col_count;
    for (const IntRow& r : rows)
      for (const auto& [c, v] : r) ++col_count[c];

    const IntRow pv_row = rows[best];
    std::size_t pc = pv_row.front().first;
    BigInt pv_val = pv_row.front().second;
    for (const auto& [c, v] : pv_row) {
      BigInt av = boost::multiprecision::abs(v);
      BigInt apv = boost::multiprecision::abs(pv_val);
      if (col_count[c] < col_count[pc] ||
          (col_count[c] == col_count[pc] && av < apv))
        pc = c, pv_val = v;
    }

    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    ++rank;

    std::vector<IntRow> next;
    next.reserve(rows.size());
    for (IntRow& r : rows) {
      auto it = std::lower_bound(
          r.begin(), r.end(), pc,
          [](const auto& e, std::size_t col) { return e.first < col; });
      if (it == r.end() || it->first != pc) {
        next.push_back(std::move(r));
        continue;
      }
      IntRow reduced = eliminate_int(r, it->second, pv_row, pv_val);
      reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                                   [pc](const auto& e) { return e.first == pc; }),
                    reduced.end());
      if (!reduced.empty()) next.push_back(std::move(reduced));
    }
    rows = std::move(next);
  }
  return rank;
}

// ---- rank mod p -----------------------------------------------------------

using FpRow = std::vector<std::pair<std::size_t, long long>>;

long long fp_mul(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

long long fp_inv(long long a, long long p) {
  long long r0 = p, r1 = a % p, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (r0 != 1) throw InternalError("matrix: non-invertible pivot mod p");
  return ((t0 % p) + p) % p;
}

long rank_charp(const SparseMatrix& m, long long p) {
  std::vector<FpRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    FpRow r;
    for (const auto& [c, v] : m.row(i)) {
      long long val = static_cast<long long>(v.num() % p);
      if (val < 0) val += p;
      if (val != 0) r.emplace_back(c, val);
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }

  long rank = 0;
  while (!rows.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best].size()) best = i;

    std::map<std::size_t, std::size_t> col_count;
    for (const FpRow& r : rows)
      for (const auto& [c, v] : r) ++col_count[c];

    const FpRow pv_row = rows[best];
    std::size_t pc = pv_row.front().first;
    long long pv_val = pv_row.front().second;
    for (const auto& [c, v] : pv_row)
      if (col_count[c] < col_count[pc]) pc = c, pv_val = v;

    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    ++rank;

    long long inv = fp_inv(pv_val, p);
    std::vector<FpRow> next;
    next.reserve(rows.size());
    for (FpRow& r : rows) {
      auto it = std::lower_bound(
          r.begin(), r.end(), pc,
          [](const auto& e, std::size_t col) { return e.first < col; });
      if (it == r.end() || it->first != pc) {
        next.push_back(std::move(r));
        continue;
      }
      long long factor = fp_mul(it->second, inv, p);
      FpRow out;
      out.reserve(r.size() + pv_row.size());
      auto a = r.begin(), ae = r.end();
      auto b = pv_row.begin(), be = pv_row.end();
      while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
          out.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
          long long v = (p - fp_mul(factor, b->second, p)) % p;
          if (v != 0) out.emplace_back(b->first, v);
          ++b;
        } else {
          long long v = (a->second - fp_mul(factor, b->second, p) + p) % p;
          if (v != 0) out.emplace_back(a->first, v);
          ++a;
          ++b;
        }
      }
      out.erase(std::remove_if(out.begin(), out.end(),
                               [pc](const auto& e) { return e.first == pc; }),
                out.end());
      if (!out.empty()) next.push_back(std::move(out));
    }
    rows = std::move(next);
  }
  return rank;
}

long detect_char(const SparseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i))
      if (!v.is_zero()) return v.characteristic();
  return -1;  // no entries
}

}  // namespace

long SparseMatrix::rank() const {
  long p = detect_char(*this);
  if (p < 0) return 0;
  if (p == 0) return rank_char0(*this);
  return rank_charp(*this, p);
}

void MatrixBuilder::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw InternalError("builder: out of range");
  if (v.is_zero()) return;
  auto key = std::make_pair(r, c);
  auto it = acc_.find(key);
  if (it == acc_.end())
    acc_.emplace(key, v);
  else
    it->second += v;
}

void MatrixBuilder::add_block(std::size_t r0, std::size_t c0,
                              const SparseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) add(r0 + i, c0 + c, v);
}

SparseMatrix MatrixBuilder::build() const {
  std::vector<SparseMatrix::Row> data(rows_);
  for (const auto& [key, v] : acc_)
    if (!v.is_zero()) data[key.first].emplace_back(key.second, v);
  return SparseMatrix(rows_, cols_, std::move(data));
}

namespace {

// Dense row-reduction shared by kernel_basis and solve_columns.  Returns the
// reduced rows and the pivot column of each reduced row.
struct Echelon {
  std::vector<DenseVec> rows;
  std::vector<std::size_t> pivot_col;
};

Echelon reduce(const SparseMatrix& m, const std::vector<DenseVec>* aug,
               const Field& field) {
  std::size_t width = m.cols() + (aug ? aug->size() : 0);
  std::vector<DenseVec> rows(m.rows(), DenseVec(width, field.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [c, v] : m.row(i)) rows[i][c] = v;
    if (aug)
      for (std::size_t k = 0; k < aug->size(); ++k)
        rows[i][m.cols() + k] = (*aug)[k][i];
  }

  Echelon ech;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < rows.size(); ++col) {
    std::size_t pr = next_row;
    while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[next_row]);
    Scalar inv = rows[next_row][col].inverse();
    for (Scalar& v : rows[next_row]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next_row || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (std::size_t j = 0; j < width; ++j)
        rows[i][j] -= f * rows[next_row][j];
    }
    ech.pivot_col.push_back(col);
    ++next_row;
  }
  rows.resize(next_row, DenseVec());
  ech.rows = std::move(rows);
  return ech;
}

}  // namespace

std::vector<DenseVec> kernel_basis(const SparseMatrix& m, const Field& field) {
  Echelon ech = reduce(m, nullptr, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_col) is_pivot[c] = true;

  std::vector<DenseVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    DenseVec v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivot_col[r]] = -ech.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<DenseVec> solve_columns(const SparseMatrix& m,
                                    const std::vector<DenseVec>& rhs,
                                    const Field& field) {
  for (const DenseVec& b : rhs)
    if (b.size() != m.rows()) throw InternalError("solve: rhs size mismatch");
  Echelon ech = reduce(m, &rhs, field);
  if (ech.pivot_col.size() != m.cols())
    throw InternalError("solve: matrix does not have full column rank");
  // Consistency: any leftover nonzero in augmented part below the pivots
  // would have shown up as a pivotless nonzero row; check directly.
  std::vector<DenseVec> out(rhs.size(), DenseVec(m.cols(), field.zero()));
  for (std::size_t r = 0; r < ech.rows.size(); ++r)
    for (std::size_t k = 0; k < rhs.size(); ++k)
      out[k][ech.pivot_col[r]] = ech.rows[r][m.cols() + k];
  // Verify M * x == b exactly (cheap at these sizes, catches inconsistency).
  for (std::size_t k = 0; k < rhs.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Scalar acc = field.zero();
      for (const auto& [c, v] : m.row(i)) acc += v * out[k][c];
      if (acc != rhs[k][i]) throw InternalError("solve: inconsistent system");
    }
  return out;
}

std::vector<long> homology_dims(const BoundarySequence& seq) {
  const std::size_t big_n = seq.dims.empty() ? 0 : seq.dims.size() - 1;
  if (seq.boundaries.size() != seq.dims.size())
    throw InternalError("homology: boundary count mismatch");
  for (std::size_t n = 1; n <= big_n; ++n) {
    const SparseMatrix& m = seq.boundaries[n];
    if (m.cols() != static_cast<std::size_t>(seq.dims[n]) ||
        m.rows() != static_cast<std::size_t>(seq.dims[n - 1]))
      throw InternalError("homology: boundary shape mismatch at degree " +
                          std::to_string(n));
  }
  for (std::size_t n = 1; n + 1 <= big_n; ++n)
    if (!seq.boundaries[n].times(seq.boundaries[n + 1]).is_zero())
      throw ComputeError("homology: d*d != 0 between degrees " +
                         std::to_string(n + 1) + " and " + std::to_string(n - 1));

  std::vector<long> ranks(big_n + 2, 0);
  for (std::size_t n = 1; n <= big_n; ++n) ranks[n] = seq.boundaries[n].rank();

  std::vector<long> h(big_n, 0);
  for (std::size_t n = 0; n < big_n; ++n) {
    h[n] = seq.dims[n] - ranks[n] - ranks[n + 1];
    if (h[n] < 0) throw InternalError("homology: negative dimension");
  }

  // Euler bookkeeping across the truncated range.
  if (big_n > 0) {
    long lhs = 0, rhs = 0, sign = 1;
    for (std::size_t n = 0; n < big_n; ++n, sign = -sign) {
      lhs += sign * h[n];
      rhs += sign * seq.dims[n];
    }
    rhs -= (big_n % 2 == 1 ? 1 : -1) * ranks[big_n];
    if (lhs != rhs) throw InternalError("homology: Euler bookkeeping failed");
  }
  return h;
}

}  // namespace hhkit
