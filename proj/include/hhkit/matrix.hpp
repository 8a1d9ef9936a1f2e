#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hhkit/scalar.hpp"

namespace hhkit {

// Largest number of basis elements a single complex computation may allocate
// before it refuses with a ComputeError instead of silently truncating.
inline constexpr std::size_t kDefaultComplexCap = 2'000'000;

// Row-major sparse matrix over exact scalars.  Immutable once built; all
// operations return new matrices.  Boundary matrices of the complexes built
// here are dominated by entries in {0, +-1, +-2}, so ranks are computed by
// sparse elimination: fraction-free cross-multiplication with per-row content
// stripping in characteristic 0, ordinary elimination mod p otherwise.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Scalar>;  // (column, value)
  using Row = std::vector<Entry>;                // sorted by column

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Row> data);

  static SparseMatrix zero(std::size_t rows, std::size_t cols);
  static SparseMatrix identity(std::size_t n, const Field& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  const Row& row(std::size_t i) const { return data_[i]; }

  // Entry lookup; absent entries come back as an exact zero.
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix times(const SparseMatrix& other) const;
  SparseMatrix plus(const SparseMatrix& other) const;
  SparseMatrix scaled(const Scalar& s) const;
  SparseMatrix transposed() const;

  bool is_zero() const;
  bool operator==(const SparseMatrix& other) const;

  // Exact rank.  Characteristic is read off the entries; an entryless matrix
  // has rank 0.
  long rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

// Accumulating builder: repeated add() on the same cell sums the values.
class MatrixBuilder {
 public:
  MatrixBuilder(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  void add(std::size_t r, std::size_t c, const Scalar& v);
  void add_block(std::size_t r0, std::size_t c0, const SparseMatrix& m);
  SparseMatrix build() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_, cols_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc_;
};

using DenseVec = std::vector<Scalar>;

// Basis of the null space {x : Mx = 0}, as dense column vectors.
// Deterministic: free columns in increasing order, pivot at first nonzero.
std::vector<DenseVec> kernel_basis(const SparseMatrix& m, const Field& field);

// Solves M x = b for each right-hand side.  M must have full column rank and
// every system must be consistent; otherwise InternalError.
std::vector<DenseVec> solve_columns(const SparseMatrix& m,
                                    const std::vector<DenseVec>& rhs,
                                    const Field& field);

// A chain of boundary maps M_n : C_n -> C_{n-1}, n = 1..N, together with the
// chain dimensions dim C_0 .. dim C_N.  boundaries[0] is a placeholder (the
// zero map out of C_0); boundaries[n] must be dims[n-1] x dims[n].
struct BoundarySequence {
  std::vector<long> dims;
  std::vector<SparseMatrix> boundaries;
};

// Homology dimensions H_0 .. H_{N-1} by exact rank-nullity:
//   dim H_n = dim C_n - rank M_n - rank M_{n+1},   rank M_0 := 0.
// Checks M_n * M_{n+1} = 0 (ComputeError names the offending degree) and the
// Euler bookkeeping identity
//   sum (-1)^n dim H_n = sum (-1)^n dim C_n - (-1)^{N-1} rank M_N
// over n = 0..N-1 (InternalError on violation).
std::vector<long> homology_dims(const BoundarySequence& seq);

}  // namespace hhkit
