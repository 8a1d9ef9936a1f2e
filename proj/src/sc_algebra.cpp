#include "hhkit/sc_algebra.hpp"

#include <string>

#include "hhkit/errors.hpp"

namespace hhkit {

namespace {

DenseVec zero_vec(std::size_t d, const Field& k) {
  return DenseVec(d, k.zero());
}

void axpy(DenseVec& acc, const Scalar& c, const DenseVec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

}  // namespace

void SCAlgebra::validate() const {
  const std::size_t d = dim();
  if (unit.size() != d || mult.size() != d)
    throw InternalError("sc: table shape mismatch");
  for (const auto& row : mult)
    if (row.size() != d) throw InternalError("sc: table shape mismatch");

  for (std::size_t i = 0; i < d; ++i) {
    DenseVec left = zero_vec(d, field), right = zero_vec(d, field);
    for (std::size_t k = 0; k < d; ++k) {
      axpy(left, unit[k], mult[k][i]);
      axpy(right, unit[k], mult[i][k]);
    }
    for (std::size_t m = 0; m < d; ++m) {
      Scalar want = m == i ? field.one() : field.zero();
      if (left[m] != want || right[m] != want)
        throw InternalError("sc: unit law fails at basis element " + labels[i]);
    }
  }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        DenseVec lhs = zero_vec(d, field), rhs = zero_vec(d, field);
        for (std::size_t m = 0; m < d; ++m) {
          axpy(lhs, mult[i][j][m], mult[m][k]);
          axpy(rhs, mult[j][k][m], mult[i][m]);
        }
        if (lhs != rhs)
          throw InternalError("sc: associativity fails at (" + labels[i] +
                              ", " + labels[j] + ", " + labels[k] + ")");
      }
}

SCAlgebra sc_from_monomial(const MonomialAlgebra& a) {
  SCAlgebra s;
  s.field = a.field();
  const std::size_t d = static_cast<std::size_t>(a.dim());
  s.unit = zero_vec(d, s.field);
  for (std::size_t i = 0; i < d; ++i) {
    const Path& p = a.basis()[i];
    s.labels.push_back(p.str(a.quiver()));
    if (p.is_trivial()) s.unit[i] = s.field.one();
  }
  s.mult.assign(d, std::vector<DenseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      DenseVec v = zero_vec(d, s.field);
      auto prod = a.product(a.basis()[i], a.basis()[j]);
      if (prod) v[static_cast<std::size_t>(a.path_index(*prod))] = s.field.one();
      s.mult[i][j] = std::move(v);
    }
  s.validate();
  return s;
}

SCAlgebra sc_disjoint(const SCAlgebra& s, const SCAlgebra& t) {
  if (!(s.field == t.field))
    throw UsageError("sc_disjoint: factors live over different fields");
  SCAlgebra out;
  out.field = s.field;
  const std::size_t ds = s.dim(), dt = t.dim(), d = ds + dt;
  for (const std::string& l : s.labels) out.labels.push_back("1." + l);
  for (const std::string& l : t.labels) out.labels.push_back("2." + l);
  out.unit = zero_vec(d, out.field);
  for (std::size_t i = 0; i < ds; ++i) out.unit[i] = s.unit[i];
  for (std::size_t i = 0; i < dt; ++i) out.unit[ds + i] = t.unit[i];
  out.mult.assign(d, std::vector<DenseVec>(d, zero_vec(d, out.field)));
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t j = 0; j < ds; ++j)
      for (std::size_t m = 0; m < ds; ++m) out.mult[i][j][m] = s.mult[i][j][m];
  for (std::size_t i = 0; i < dt; ++i)
    for (std::size_t j = 0; j < dt; ++j)
      for (std::size_t m = 0; m < dt; ++m)
        out.mult[ds + i][ds + j][ds + m] = t.mult[i][j][m];
  out.validate();
  return out;
}

SCAlgebra sc_tensor(const SCAlgebra& s, const SCAlgebra& t) {
  if (!(s.field == t.field))
    throw UsageError("sc_tensor: factors live over different fields");
  SCAlgebra out;
  out.field = s.field;
  const std::size_t ds = s.dim(), dt = t.dim(), d = ds * dt;
  auto fuse = [dt](std::size_t i, std::size_t j) { return i * dt + j; };
  out.labels.resize(d);
  out.unit = zero_vec(d, out.field);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t j = 0; j < dt; ++j) {
      out.labels[fuse(i, j)] = s.labels[i] + "*" + t.labels[j];
      out.unit[fuse(i, j)] = s.unit[i] * t.unit[j];
    }
  out.mult.assign(d, std::vector<DenseVec>(d, zero_vec(d, out.field)));
  for (std::size_t i1 = 0; i1 < ds; ++i1)
    for (std::size_t i2 = 0; i2 < dt; ++i2)
      for (std::size_t j1 = 0; j1 < ds; ++j1)
        for (std::size_t j2 = 0; j2 < dt; ++j2) {
          DenseVec& v = out.mult[fuse(i1, i2)][fuse(j1, j2)];
          for (std::size_t m1 = 0; m1 < ds; ++m1)
            for (std::size_t m2 = 0; m2 < dt; ++m2)
              v[fuse(m1, m2)] = s.mult[i1][j1][m1] * t.mult[i2][j2][m2];
        }
  out.validate();
  return out;
}

namespace {

// Shared machinery for the normalized and raw bar complexes.  "Slots" are
// the tensor positions past the zeroth: all of S in the raw complex, S with
// the pivot basis vector (one with nonzero unit coordinate) removed in the
// normalized one.
struct BarContext {
  const SCAlgebra& s;
  bool normalized;
  std::size_t pivot = 0;

  explicit BarContext(const SCAlgebra& alg, bool norm)
      : s(alg), normalized(norm) {
    if (s.dim() == 0) throw InternalError("bar: zero algebra");
    if (normalized) {
      while (pivot < s.dim() && s.unit[pivot].is_zero()) ++pivot;
      if (pivot == s.dim())
        throw InternalError("bar: unit has no nonzero coordinate");
    }
  }

  std::size_t slots() const { return normalized ? s.dim() - 1 : s.dim(); }
  std::size_t slot_to_basis(std::size_t j) const {
    if (!normalized) return j;
    return j < pivot ? j : j + 1;
  }

  // Coordinates of v in the slot space; the normalized quotient subtracts
  // the unit multiple that clears the pivot coordinate.
  DenseVec slot_coords(const DenseVec& v) const {
    if (!normalized) return v;
    DenseVec out(slots(), s.field.zero());
    Scalar f = v[pivot] / s.unit[pivot];
    for (std::size_t j = 0; j < slots(); ++j) {
      std::size_t m = slot_to_basis(j);
      out[j] = v[m] - f * s.unit[m];
    }
    return out;
  }

  // dim of chain level n = d * slots^n, guarded by the cap.
  std::size_t chain_dim(int n, std::size_t cap) const {
    std::size_t dim = s.dim();
    for (int i = 0; i < n; ++i) {
      if (slots() != 0 && dim > cap / slots() + 1)
        throw ComputeError("complex size cap exceeded in bar complex");
      dim *= slots();
    }
    if (dim > cap) throw ComputeError("complex size cap exceeded in bar complex");
    return dim;
  }
};

// Chain tuple (i0, j_1..j_n) encoded as i0 * slots^n + sum j_k slots^{n-k}.
std::vector<std::size_t> decode_chain(const BarContext& ctx, std::size_t idx,
                                      int n) {
  std::vector<std::size_t> t(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 1; --k) {
    t[static_cast<std::size_t>(k)] = idx % ctx.slots();
    idx /= ctx.slots();
  }
  t[0] = idx;
  return t;
}

std::size_t encode_from(const std::vector<std::size_t>& t) { return t[0]; }

std::size_t encode_chain(const BarContext& ctx,
                         const std::vector<std::size_t>& t) {
  std::size_t idx = t[0];
  for (std::size_t k = 1; k < t.size(); ++k) idx = idx * ctx.slots() + t[k];
  return idx;
}

SparseMatrix bar_boundary(const BarContext& ctx, int n, std::size_t cap) {
  const SCAlgebra& s = ctx.s;
  const std::size_t rows = ctx.chain_dim(n - 1, cap);
  const std::size_t cols = ctx.chain_dim(n, cap);
  MatrixBuilder out(rows, cols);

  for (std::size_t col = 0; col < cols; ++col) {
    std::vector<std::size_t> t = decode_chain(ctx, col, n);
    // i = 0: the product lands in the full S slot, no projection.
    {
      const DenseVec& x = s.mult[t[0]][ctx.slot_to_basis(t[1])];
      std::vector<std::size_t> target(t.begin() + 1, t.end());
      for (std::size_t m = 0; m < s.dim(); ++m) {
        if (x[m].is_zero()) continue;
        target[0] = m;  // reuse: target = (m, j_2..j_n)
        out.add(encode_chain(ctx, target), col, x[m]);
      }
    }
    int sign = -1;
    for (int i = 1; i <= n - 1; ++i, sign = -sign) {
      DenseVec y = ctx.slot_coords(
          s.mult[ctx.slot_to_basis(t[static_cast<std::size_t>(i)])]
                [ctx.slot_to_basis(t[static_cast<std::size_t>(i) + 1])]);
      std::vector<std::size_t> target;
      target.reserve(t.size() - 1);
      target.insert(target.end(), t.begin(), t.begin() + i);
      target.push_back(0);
      target.insert(target.end(), t.begin() + i + 2, t.end());
      for (std::size_t m = 0; m < ctx.slots(); ++m) {
        if (y[m].is_zero()) continue;
        target[static_cast<std::size_t>(i)] = m;
        out.add(encode_chain(ctx, target), col,
                sign > 0 ? y[m] : -y[m]);
      }
    }
    {
      const DenseVec& z =
          s.mult[ctx.slot_to_basis(t[static_cast<std::size_t>(n)])][t[0]];
      std::vector<std::size_t> target;
      target.reserve(t.size() - 1);
      target.push_back(0);
      target.insert(target.end(), t.begin() + 1, t.end() - 1);
      for (std::size_t m = 0; m < s.dim(); ++m) {
        if (z[m].is_zero()) continue;
        target[0] = m;
        out.add(encode_chain(ctx, target), col, sign > 0 ? z[m] : -z[m]);
      }
    }
  }
  return out.build();
}

std::vector<long> bar_homology(const SCAlgebra& s, bool normalized, int n_max,
                               std::size_t cap) {
  if (n_max < 0) throw InternalError("bar: negative degree");
  BarContext ctx(s, normalized);
  BoundarySequence seq;
  for (int n = 0; n <= n_max + 1; ++n)
    seq.dims.push_back(static_cast<long>(ctx.chain_dim(n, cap)));
  seq.boundaries.push_back(
      SparseMatrix::zero(0, static_cast<std::size_t>(seq.dims[0])));
  for (int n = 1; n <= n_max + 1; ++n)
    seq.boundaries.push_back(bar_boundary(ctx, n, cap));
  std::vector<long> h = homology_dims(seq);
  h.resize(static_cast<std::size_t>(n_max) + 1);
  return h;
}

// Cochain basis at level n: (j_1..j_n slots, output m), encoded with the
// output index least significant.
std::size_t cochain_dim(const BarContext& ctx, int n, std::size_t cap) {
  std::size_t dim = ctx.s.dim();
  for (int i = 0; i < n; ++i) {
    if (ctx.slots() != 0 && dim > cap / ctx.slots() + 1)
      throw ComputeError("complex size cap exceeded in cochain complex");
    dim *= ctx.slots();
  }
  if (dim > cap) throw ComputeError("complex size cap exceeded in cochain complex");
  return dim;
}

SparseMatrix bar_coboundary(const BarContext& ctx, int n, std::size_t cap) {
  const SCAlgebra& s = ctx.s;
  const std::size_t d = s.dim();
  const std::size_t rows = cochain_dim(ctx, n + 1, cap);
  const std::size_t cols = cochain_dim(ctx, n, cap);
  MatrixBuilder out(rows, cols);

  auto encode = [&](const std::vector<std::size_t>& tuple, std::size_t m) {
    std::size_t idx = 0;
    for (std::size_t j : tuple) idx = idx * ctx.slots() + j;
    return idx * d + m;
  };

  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t rest = col;
    std::size_t m = rest % d;
    rest /= d;
    std::vector<std::size_t> tau(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
      tau[static_cast<std::size_t>(k)] = rest % ctx.slots();
      rest /= ctx.slots();
    }

    // (df)(a_0,...,a_n) = a_0 f(a_1..a_n) + sum (-1)^{i+1} f(..a_i a_{i+1}..)
    //                    + (-1)^{n+1} f(a_0..a_{n-1}) a_n
    std::vector<std::size_t> sigma(static_cast<std::size_t>(n) + 1);
    for (std::size_t j0 = 0; j0 < ctx.slots(); ++j0) {
      const DenseVec& w = s.mult[ctx.slot_to_basis(j0)][m];
      sigma[0] = j0;
      std::copy(tau.begin(), tau.end(), sigma.begin() + 1);
      for (std::size_t v = 0; v < d; ++v)
        if (!w[v].is_zero()) out.add(encode(sigma, v), col, w[v]);
    }
    for (int i = 0; i < n; ++i) {
      int sign = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1}
      std::copy(tau.begin(), tau.begin() + i, sigma.begin());
      std::copy(tau.begin() + i + 1, tau.end(), sigma.begin() + i + 2);
      for (std::size_t alpha = 0; alpha < ctx.slots(); ++alpha)
        for (std::size_t beta = 0; beta < ctx.slots(); ++beta) {
          DenseVec prod = ctx.slot_coords(
              s.mult[ctx.slot_to_basis(alpha)][ctx.slot_to_basis(beta)]);
          const Scalar& c = prod[tau[static_cast<std::size_t>(i)]];
          if (c.is_zero()) continue;
          sigma[static_cast<std::size_t>(i)] = alpha;
          sigma[static_cast<std::size_t>(i) + 1] = beta;
          out.add(encode(sigma, m), col, sign > 0 ? c : -c);
        }
    }
    {
      int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
      std::copy(tau.begin(), tau.end(), sigma.begin());
      for (std::size_t jn = 0; jn < ctx.slots(); ++jn) {
        const DenseVec& w = s.mult[m][ctx.slot_to_basis(jn)];
        sigma[static_cast<std::size_t>(n)] = jn;
        for (std::size_t v = 0; v < d; ++v)
          if (!w[v].is_zero())
            out.add(encode(sigma, v), col, sign > 0 ? w[v] : -w[v]);
      }
    }
  }
  return out.build();
}

std::vector<long> bar_cohomology(const SCAlgebra& s, bool normalized, int n_max,
                                 std::size_t cap) {
  if (n_max < 0) throw InternalError("bar: negative degree");
  BarContext ctx(s, normalized);
  // Feed the transposed coboundaries through the homology plumbing: with
  // M_k := (d^{k-1})^T the rank bookkeeping is identical.
  BoundarySequence seq;
  for (int n = 0; n <= n_max + 1; ++n)
    seq.dims.push_back(static_cast<long>(cochain_dim(ctx, n, cap)));
  seq.boundaries.push_back(
      SparseMatrix::zero(0, static_cast<std::size_t>(seq.dims[0])));
  for (int n = 1; n <= n_max + 1; ++n)
    seq.boundaries.push_back(bar_coboundary(ctx, n - 1, cap).transposed());
  std::vector<long> h = homology_dims(seq);
  h.resize(static_cast<std::size_t>(n_max) + 1);
  return h;
}

}  // namespace

std::vector<long> sc_hochschild_homology(const SCAlgebra& s, int n_max,
                                         std::size_t cap) {
  return bar_homology(s, /*normalized=*/true, n_max, cap);
}

std::vector<long> sc_hochschild_homology_raw(const SCAlgebra& s, int n_max,
                                             std::size_t cap) {
  return bar_homology(s, /*normalized=*/false, n_max, cap);
}

std::vector<long> sc_hochschild_cohomology(const SCAlgebra& s, int n_max,
                                           std::size_t cap) {
  return bar_cohomology(s, /*normalized=*/true, n_max, cap);
}

std::vector<long> sc_hochschild_cohomology_raw(const SCAlgebra& s, int n_max,
                                               std::size_t cap) {
  return bar_cohomology(s, /*normalized=*/false, n_max, cap);
}

}  // namespace hhkit
