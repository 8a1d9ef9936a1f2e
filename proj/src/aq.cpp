#include "hhkit/aq.hpp"

#include <string>

#include "hhkit/errors.hpp"

namespace hhkit {
namespace aq {

namespace {
enum Basis { kOne = 0, kX = 1, kY = 2, kYX = 3 };
}

SCAlgebra algebra(const Scalar& q) {
  Field k(q.characteristic());
  SCAlgebra s;
  s.field = k;
  s.labels = {"1", "x", "y", "yx"};
  s.unit = {k.one(), k.zero(), k.zero(), k.zero()};
  DenseVec zero(4, k.zero());
  s.mult.assign(4, std::vector<DenseVec>(4, zero));
  auto set = [&](int i, int j, int m, const Scalar& c) {
    s.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
          [static_cast<std::size_t>(m)] = c;
  };
  for (int i = 0; i < 4; ++i) {
    set(kOne, i, i, k.one());
    if (i != kOne) set(i, kOne, i, k.one());
  }
  set(kX, kY, kYX, -q);
  set(kY, kX, kYX, k.one());
  s.validate();
  return s;
}

SparseMatrix tau_matrix(int n, const Scalar& q) {
  if (n < 1) throw UsageError("tau is defined for n >= 1");
  Field k(q.characteristic());
  SCAlgebra a = algebra(q);
  Scalar sign_n = k.from_int(n % 2 == 0 ? 1 : -1);

  MatrixBuilder out(static_cast<std::size_t>(4 * n),
                    static_cast<std::size_t>(4 * (n + 1)));
  auto emit = [&](int i_target, const DenseVec& value, const Scalar& coeff,
                  std::size_t col) {
    if (i_target < 0 || i_target > n - 1) return;  // f^{n-1} index range
    for (std::size_t m = 0; m < 4; ++m) {
      Scalar v = coeff * value[m];
      if (!v.is_zero())
        out.add(static_cast<std::size_t>(4 * i_target) + m, col, v);
    }
  };

  for (int i = 0; i <= n; ++i) {
    Scalar q_i = q.pow(static_cast<unsigned long>(i));
    Scalar q_ni = q.pow(static_cast<unsigned long>(n - i));
    for (int lam = 0; lam < 4; ++lam) {
      std::size_t col = static_cast<std::size_t>(4 * i + lam);
      const auto l = static_cast<std::size_t>(lam);
      emit(i, a.mult[l][kX], k.one(), col);             // v x
      emit(i, a.mult[kX][l], sign_n * q_i, col);        // (-1)^n q^i x v
      emit(i - 1, a.mult[l][kY], q_ni, col);            // q^{n-i} v y
      emit(i - 1, a.mult[kY][l], sign_n, col);          // (-1)^n y v
    }
  }
  return out.build();
}

std::vector<long> tau_ranks(int n_top, const Scalar& q) {
  std::vector<long> out;
  for (int n = 1; n <= n_top; ++n) out.push_back(tau_matrix(n, q).rank());
  return out;
}

std::vector<long> hochschild_homology(int n_max, const Scalar& q) {
  if (n_max < 0) throw UsageError("negative degree");
  std::vector<long> ranks = tau_ranks(n_max + 1, q);  // tau^1..tau^{n_max+1}
  std::vector<long> out;
  for (int n = 0; n <= n_max; ++n) {
    long below = n == 0 ? 0 : ranks[static_cast<std::size_t>(n) - 1];
    out.push_back(4L * (n + 1) - below - ranks[static_cast<std::size_t>(n)]);
  }
  return out;
}

SparseMatrix coboundary_matrix(int n, const Scalar& q) {
  if (n < 0) throw UsageError("coboundary is defined for n >= 0");
  Field k(q.characteristic());
  SCAlgebra a = algebra(q);
  Scalar sign = k.from_int((n + 1) % 2 == 0 ? 1 : -1);  // (-1)^{n+1}

  MatrixBuilder out(static_cast<std::size_t>(4 * (n + 2)),
                    static_cast<std::size_t>(4 * (n + 1)));
  auto emit = [&](int i_target, const DenseVec& value, const Scalar& coeff,
                  std::size_t col) {
    for (std::size_t m = 0; m < 4; ++m) {
      Scalar v = coeff * value[m];
      if (!v.is_zero())
        out.add(static_cast<std::size_t>(4 * i_target) + m, col, v);
    }
  };

  for (int j = 0; j <= n; ++j) {
    Scalar q_j = q.pow(static_cast<unsigned long>(j));
    Scalar q_nj = q.pow(static_cast<unsigned long>(n - j));
    for (int lam = 0; lam < 4; ++lam) {
      std::size_t col = static_cast<std::size_t>(4 * j + lam);
      const auto l = static_cast<std::size_t>(lam);
      // value v_j feeds targets i = j (terms in v_i) and i = j+1 (v_{i-1}).
      emit(j, a.mult[kX][l], k.one(), col);          // x v_i
      emit(j, a.mult[l][kX], sign * q_j, col);       // (-1)^{n+1} q^i v_i x
      emit(j + 1, a.mult[kY][l], q_nj, col);         // q^{n+1-i} y v_{i-1}
      emit(j + 1, a.mult[l][kY], sign, col);         // (-1)^{n+1} v_{i-1} y
    }
  }
  return out.build();
}

std::vector<long> hochschild_cohomology(int n_max, const Scalar& q) {
  if (n_max < 0) throw UsageError("negative degree");
  std::vector<long> ranks;  // rank d^0 .. d^{n_max}
  for (int n = 0; n <= n_max; ++n)
    ranks.push_back(coboundary_matrix(n, q).rank());
  std::vector<long> out;
  for (int n = 0; n <= n_max; ++n) {
    long below = n == 0 ? 0 : ranks[static_cast<std::size_t>(n) - 1];
    out.push_back(4L * (n + 1) - below - ranks[static_cast<std::size_t>(n)]);
  }
  return out;
}

long commutator_quotient_dim(const Scalar& q) {
  SCAlgebra a = algebra(q);
  MatrixBuilder b(16, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t m = 0; m < 4; ++m)
        b.add(4 * i + j, m, a.mult[i][j][m] - a.mult[j][i][m]);
  return 4 - b.build().rank();
}

int unit_root_order(const Scalar& q, int limit) {
  Field k(q.characteristic());
  Scalar acc = k.one();
  for (int m = 1; m <= limit; ++m) {
    acc = acc * q;
    if (acc == k.one()) return m;
  }
  return 0;
}

CrossCheck crosscheck(const Scalar& q, int n_max) {
  CrossCheck out;
  out.hh = hochschild_homology(n_max, q);
  out.hch = hochschild_cohomology(n_max, q);
  SCAlgebra a = algebra(q);
  std::vector<long> bar_hh = sc_hochschild_homology(a, n_max);
  std::vector<long> bar_hch = sc_hochschild_cohomology(a, n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (out.hh[static_cast<std::size_t>(n)] !=
        bar_hh[static_cast<std::size_t>(n)])
      throw CrossCheckError(
          "A_q hh routes disagree at n = " + std::to_string(n) +
          ": resolution " + std::to_string(out.hh[static_cast<std::size_t>(n)]) +
          ", bar complex " +
          std::to_string(bar_hh[static_cast<std::size_t>(n)]));
    if (out.hch[static_cast<std::size_t>(n)] !=
        bar_hch[static_cast<std::size_t>(n)])
      throw CrossCheckError(
          "A_q hch routes disagree at n = " + std::to_string(n) +
          ": resolution " +
          std::to_string(out.hch[static_cast<std::size_t>(n)]) +
          ", bar complex " +
          std::to_string(bar_hch[static_cast<std::size_t>(n)]));
  }
  return out;
}

}  // namespace aq
}  // namespace hhkit
