#pragma once

#include <vector>

#include "hhkit/matrix.hpp"
#include "hhkit/sc_algebra.hpp"

namespace hhkit {
namespace aq {

// The four-dimensional family k<x,y>/(x^2, xy + q yx, y^2) on the basis
// {1, x, y, yx}.  Rewriting with the three relations gives the whole table:
// x y = -q yx, y x = yx, and every product with yx on either side vanishes.
// q = 0 is allowed but degenerate (xy = 0 makes the family monomial).
SCAlgebra algebra(const Scalar& q);

// The minimal-resolution boundary tensored down to A (x) f^n, as a matrix on
// the basis {1, x, y, yx} x {f^n_0..f^n_n}:
//   tau^n(v (x) f^n_i) = v x (x) f^{n-1}_i + (-1)^n q^i x v (x) f^{n-1}_i
//                      + q^{n-i} v y (x) f^{n-1}_{i-1}
//                      + (-1)^n y v (x) f^{n-1}_{i-1}.
// Generated from this single formula; the printed per-basis specializations
// are asserted in the tests to guard against transcription drift.
SparseMatrix tau_matrix(int n, const Scalar& q);

// rank tau^1 .. tau^{n_top}.
std::vector<long> tau_ranks(int n_top, const Scalar& q);

// hh_n = 4(n+1) - rank tau^n - rank tau^{n+1}  (tau^0 := 0).
std::vector<long> hochschild_homology(int n_max, const Scalar& q);

// Coboundary of the dual complex on cochain values (v_0..v_n), v_i in A:
//   (d phi)(f~^{n+1}_i) = x v_i + q^{n+1-i} y v_{i-1}
//                       + (-1)^{n+1} v_{i-1} y + (-1)^{n+1} q^i v_i x.
SparseMatrix coboundary_matrix(int n, const Scalar& q);

// hch^n = 4(n+1) - rank d^n - rank d^{n-1}  (d^{-1} := 0).
std::vector<long> hochschild_cohomology(int n_max, const Scalar& q);

// dim A/[A,A]: 4 when the commutator space vanishes (q = -1, or q = 1 in
// characteristic 2), else 3.  Computed from the span of basis commutators,
// not assumed.
long commutator_quotient_dim(const Scalar& q);

// Smallest m in [1, limit] with q^m = 1, or 0 when none (reporting only).
int unit_root_order(const Scalar& q, int limit = 24);

// Resolution route vs the structure-constant bar complex, degreewise for
// n <= n_max (meant for n_max <= 4; the bar complex grows as 4 * 3^n).
// Throws CrossCheckError on any mismatch.
struct CrossCheck {
  std::vector<long> hh;
  std::vector<long> hch;
};
CrossCheck crosscheck(const Scalar& q, int n_max);

}  // namespace aq
}  // namespace hhkit
