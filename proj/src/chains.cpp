#include "hhkit/chains.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "hhkit/errors.hpp"

// The normalized chain spaces of a monomial algebra have a basis of cyclic
// path tuples (the trivial-path directions are divided out), which keeps the
// complexes small enough for exact ranks.  Everything here works with basis
// indices; the paths themselves live in the algebra.

namespace hhkit {

namespace {

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw ComputeError(
        "complex size cap exceeded (" + std::to_string(count) + " > " +
        std::to_string(cap) + " basis elements); rerun with a larger cap");
}

}  // namespace

ChainBasis chain_basis(const MonomialAlgebra& a, int n,
                       std::optional<int> degree_filter, std::size_t cap) {
  if (n < 0) throw InternalError("chain_basis: negative degree");
  const Quiver& q = a.quiver();
  const int big_l = a.max_path_length();

  // Nonzero paths of length >= 1 grouped by source vertex, in basis order.
  std::vector<std::vector<int>> radical_from(q.num_vertices());
  for (int i = 0; i < a.dim(); ++i) {
    const Path& p = a.basis()[i];
    if (p.length() >= 1) radical_from[p.source()].push_back(i);
  }

  ChainBasis out;
  out.degree_n = n;
  std::vector<int> tuple(static_cast<std::size_t>(n) + 1);

  // Positions 1..n need length in [1, L] each; prune on the residual degree.
  std::function<void(int, int, int)> extend = [&](int pos, int at, int used) {
    int remaining = n + 1 - pos;
    if (degree_filter) {
      int residual = *degree_filter - used;
      if (residual < remaining || residual > remaining * big_l) return;
    }
    if (pos == n + 1) {
      const Path& p0 = a.basis()[tuple[0]];
      if (at != p0.source()) return;
      check_cap(out.elems.size() + 1, cap);
      out.index.emplace(tuple, static_cast<int>(out.elems.size()));
      out.elems.push_back(ChainTuple{tuple});
      return;
    }
    for (int idx : radical_from[at]) {
      tuple[pos] = idx;
      extend(pos + 1, a.basis()[idx].target(q), used + a.basis()[idx].length());
    }
  };

  for (int i = 0; i < a.dim(); ++i) {
    const Path& p0 = a.basis()[i];
    if (degree_filter && p0.length() > *degree_filter) break;
    tuple[0] = i;
    if (n == 0) {
      if (p0.target(q) != p0.source()) continue;
      if (degree_filter && p0.length() != *degree_filter) continue;
      check_cap(out.elems.size() + 1, cap);
      out.index.emplace(tuple, static_cast<int>(out.elems.size()));
      out.elems.push_back(ChainTuple{tuple});
    } else {
      extend(1, p0.target(q), p0.length());
    }
  }
  return out;
}

SparseMatrix boundary_matrix(const MonomialAlgebra& a, const ChainBasis& from,
                             const ChainBasis& to) {
  const int n = from.degree_n;
  if (n < 1 || to.degree_n != n - 1)
    throw InternalError("boundary_matrix: degree mismatch");
  const Field& k = a.field();
  MatrixBuilder out(static_cast<std::size_t>(to.dim()),
                    static_cast<std::size_t>(from.dim()));

  auto emit = [&](const std::vector<int>& target, int col, int sign) {
    int row = to.find(target);
    if (row < 0) throw InternalError("boundary_matrix: target tuple missing");
    out.add(static_cast<std::size_t>(row), static_cast<std::size_t>(col),
            k.from_int(sign));
  };

  for (int col = 0; col < from.dim(); ++col) {
    const std::vector<int>& t = from.elems[col].paths;
    int sign = 1;
    for (int i = 0; i < n; ++i, sign = -sign) {
      auto prod = a.product(a.basis()[t[i]], a.basis()[t[i + 1]]);
      if (!prod) continue;
      std::vector<int> target;
      target.reserve(t.size() - 1);
      target.insert(target.end(), t.begin(), t.begin() + i);
      target.push_back(a.path_index(*prod));
      target.insert(target.end(), t.begin() + i + 2, t.end());
      emit(target, col, sign);
    }
    auto wrap = a.product(a.basis()[t[n]], a.basis()[t[0]]);
    if (wrap) {
      std::vector<int> target;
      target.reserve(t.size() - 1);
      target.push_back(a.path_index(*wrap));
      target.insert(target.end(), t.begin() + 1, t.end() - 1);
      emit(target, col, sign);
    }
  }
  return out.build();
}

SparseMatrix connes_matrix(const MonomialAlgebra& a, const ChainBasis& from,
                           const ChainBasis& to) {
  const int n = from.degree_n;
  if (to.degree_n != n + 1) throw InternalError("connes_matrix: degree mismatch");
  const Field& k = a.field();
  MatrixBuilder out(static_cast<std::size_t>(to.dim()),
                    static_cast<std::size_t>(from.dim()));

  for (int col = 0; col < from.dim(); ++col) {
    const std::vector<int>& t = from.elems[col].paths;
    if (a.basis()[t[0]].is_trivial()) continue;  // radical part of p_0 is zero
    for (int i = 0; i <= n; ++i) {
      int start = a.basis()[t[i]].source();
      std::vector<int> target;
      target.reserve(t.size() + 1);
      target.push_back(a.path_index(Path::trivial(start)));
      target.insert(target.end(), t.begin() + i, t.end());
      target.insert(target.end(), t.begin(), t.begin() + i);
      int row = to.find(target);
      if (row < 0) throw InternalError("connes_matrix: target tuple missing");
      int sign = (static_cast<long>(i) * n) % 2 == 0 ? 1 : -1;
      out.add(static_cast<std::size_t>(row), static_cast<std::size_t>(col),
              k.from_int(sign));
    }
  }
  return out.build();
}

MixedComplex mixed_complex(const MonomialAlgebra& a, int n_top,
                           std::size_t cap) {
  MixedComplex mc;
  std::size_t total = 0;
  for (int n = 0; n <= n_top; ++n) {
    mc.basis.push_back(chain_basis(a, n, std::nullopt, cap));
    total += static_cast<std::size_t>(mc.basis.back().dim());
    check_cap(total, cap);
  }
  mc.b.push_back(SparseMatrix::zero(0, static_cast<std::size_t>(mc.basis[0].dim())));
  for (int n = 1; n <= n_top; ++n)
    mc.b.push_back(boundary_matrix(a, mc.basis[n], mc.basis[n - 1]));
  for (int n = 0; n + 1 <= n_top; ++n)
    mc.connes.push_back(connes_matrix(a, mc.basis[n], mc.basis[n + 1]));
  return mc;
}

HochschildDims hochschild_homology(const MonomialAlgebra& a, int n_max,
                                   std::size_t cap) {
  if (n_max < 0) throw InternalError("hochschild_homology: negative degree");
  const int big_l = a.max_path_length();
  HochschildDims out;
  out.total.assign(static_cast<std::size_t>(n_max) + 1, 0);

  std::size_t allocated = 0;
  const int q_max = (n_max + 1) * big_l;
  for (int q = 0; q <= q_max; ++q) {
    std::vector<ChainBasis> slice;
    bool any = false;
    for (int n = 0; n <= n_max + 1; ++n) {
      slice.push_back(chain_basis(a, n, q, cap));
      allocated += static_cast<std::size_t>(slice.back().dim());
      check_cap(allocated, cap);
      if (n <= n_max && slice.back().dim() > 0) any = true;
    }
    if (!any) continue;

    BoundarySequence seq;
    for (const ChainBasis& cb : slice) seq.dims.push_back(cb.dim());
    seq.boundaries.push_back(
        SparseMatrix::zero(0, static_cast<std::size_t>(slice[0].dim())));
    for (int n = 1; n <= n_max + 1; ++n)
      seq.boundaries.push_back(boundary_matrix(a, slice[n], slice[n - 1]));

    std::vector<long> h = homology_dims(seq);
    for (int p = 0; p <= n_max; ++p) {
      if (h[p] == 0) continue;
      out.total[p] += h[p];
      out.graded[p][q] += h[p];
    }
  }
  return out;
}

std::vector<long> cyclic_homology(const MonomialAlgebra& a, int n_max,
                                  std::size_t cap) {
  if (n_max < 0) throw InternalError("cyclic_homology: negative degree");
  MixedComplex mc = mixed_complex(a, n_max + 1, cap);

  // Total complex D_n = C_n + C_{n-2} + ...; column block j of d_n holds
  // b_{n-2j} (into row block j) stacked with B_{n-2j} (into row block j-1).
  BoundarySequence seq;
  std::vector<std::vector<long>> offsets(static_cast<std::size_t>(n_max) + 2);
  for (int n = 0; n <= n_max + 1; ++n) {
    long dim = 0;
    for (int m = n; m >= 0; m -= 2) {
      offsets[n].push_back(dim);
      dim += mc.basis[m].dim();
    }
    seq.dims.push_back(dim);
  }

  seq.boundaries.push_back(
      SparseMatrix::zero(0, static_cast<std::size_t>(seq.dims[0])));
  for (int n = 1; n <= n_max + 1; ++n) {
    MatrixBuilder d(static_cast<std::size_t>(seq.dims[n - 1]),
                    static_cast<std::size_t>(seq.dims[n]));
    for (int j = 0, m = n; m >= 0; ++j, m -= 2) {
      long col0 = offsets[n][j];
      if (m >= 1)  // b_m : C_m -> C_{m-1}, row block j of D_{n-1}
        d.add_block(static_cast<std::size_t>(offsets[n - 1][j]),
                    static_cast<std::size_t>(col0), mc.b[m]);
      if (j >= 1)  // B_m : C_m -> C_{m+1}, row block j-1 of D_{n-1}
        d.add_block(static_cast<std::size_t>(offsets[n - 1][j - 1]),
                    static_cast<std::size_t>(col0), mc.connes[m]);
    }
    seq.boundaries.push_back(d.build());
  }

  std::vector<long> h = homology_dims(seq);
  h.resize(static_cast<std::size_t>(n_max) + 1);
  return h;
}

}  // namespace hhkit
