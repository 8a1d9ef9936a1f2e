#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hhkit/matrix.hpp"
#include "hhkit/quiver.hpp"

namespace hhkit {

// Basis element of the normalized chain space in homological degree n: a
// tuple (p_0, p_1, ..., p_n) of basis-path indices where p_1..p_n have
// length >= 1 and the entries compose cyclically (the concatenation
// p_0 p_1 ... p_n is a closed walk).  Its internal degree is the total path
// length, which every operator below preserves.
struct ChainTuple {
  std::vector<int> paths;

  bool operator==(const ChainTuple& o) const { return paths == o.paths; }
  bool operator<(const ChainTuple& o) const { return paths < o.paths; }
};

struct ChainBasis {
  int degree_n = 0;                  // homological degree
  std::vector<ChainTuple> elems;     // deterministic (index-lexicographic)
  std::map<std::vector<int>, int> index;

  long dim() const { return static_cast<long>(elems.size()); }
  int find(const std::vector<int>& t) const {
    auto it = index.find(t);
    return it == index.end() ? -1 : it->second;
  }
};

// All degree-n tuples, optionally restricted to internal degree q.
ChainBasis chain_basis(const MonomialAlgebra& a, int n,
                       std::optional<int> degree_filter = std::nullopt,
                       std::size_t cap = kDefaultComplexCap);

// Hochschild boundary b_n : C_n -> C_{n-1} (n = from.degree_n >= 1),
//   b(p_0,...,p_n) = sum_{i<n} (-1)^i (p_0,...,p_i p_{i+1},...,p_n)
//                  + (-1)^n (p_n p_0, p_1, ..., p_{n-1}),
// terms dropped when the product vanishes in the algebra.
SparseMatrix boundary_matrix(const MonomialAlgebra& a, const ChainBasis& from,
                             const ChainBasis& to);

// Connes operator B_n : C_n -> C_{n+1},
//   B(p_0,...,p_n) = sum_i (-1)^{in} (1, p_i, ..., p_n, p_0, ..., p_{i-1}),
// where the leading 1 is the trivial path at the start of p_i and the whole
// column vanishes when p_0 is a trivial path (its radical part is zero).
SparseMatrix connes_matrix(const MonomialAlgebra& a, const ChainBasis& from,
                           const ChainBasis& to);

// The chain spaces and both operators through homological degree n_top.
struct MixedComplex {
  std::vector<ChainBasis> basis;      // 0..n_top
  std::vector<SparseMatrix> b;        // b[n] : C_n -> C_{n-1}, b[0] empty
  std::vector<SparseMatrix> connes;   // connes[n] : C_n -> C_{n+1}, n < n_top
};
MixedComplex mixed_complex(const MonomialAlgebra& a, int n_top,
                           std::size_t cap = kDefaultComplexCap);

struct HochschildDims {
  std::vector<long> total;                  // hh_0 .. hh_{n_max}
  std::map<int, std::map<int, long>> graded;  // p -> q -> dim (nonzero only)
};

// HH_p(A) for p <= n_max, computed block-by-block in the internal degree q
// (the boundary preserves q, so each block is an independent complex).
HochschildDims hochschild_homology(const MonomialAlgebra& a, int n_max,
                                   std::size_t cap = kDefaultComplexCap);

// HC_n(A) for n <= n_max: homology of the total complex
//   D_n = C_n + C_{n-2} + ...,  d(x_n, x_{n-2}, ...) = (b x_n + B x_{n-2}, ...).
std::vector<long> cyclic_homology(const MonomialAlgebra& a, int n_max,
                                  std::size_t cap = kDefaultComplexCap);

}  // namespace hhkit
