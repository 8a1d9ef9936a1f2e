#pragma once

#include <string>
#include <vector>

#include "hhkit/chains.hpp"
#include "hhkit/quiver.hpp"
#include "hhkit/truncated.hpp"

namespace hhkit {

// The minimal cycle algebra attached to a proper cycle orbit: the basic
// cycle quiver of the orbit's length with relations pulled back along the
// arrow map c_i -> a_i (a path of the cycle is a relation exactly when its
// image word is zero in the ambient algebra).
struct CycleAlgebra {
  CycleWord orbit;              // canonical representative in the ambient quiver
  MonomialAlgebra algebra;      // on Quiver::basic_cycle(orbit length)
  std::vector<int> arrow_image; // cycle arrow i -> ambient arrow
  bool truncated_form = false;  // relations are exactly all windows of one length
  int truncation = 0;           // that length when truncated_form
};

CycleAlgebra minimal_cycle_algebra(const MonomialAlgebra& a,
                                   const CycleWord& orbit);

// Proper cycle orbits that can contribute to HH_n: a degree-n chain of a
// cycle algebra has internal degree q = m r with n <= q <= (n+1) L, so
// orbits longer than (n+1) L contribute nothing.
std::vector<CycleWord> contributing_orbits(const MonomialAlgebra& a, int n);

// One orbit's share of the homology, degrees 1..n_max (index 0 unused).
struct OrbitContribution {
  std::string label;
  CycleAlgebra cycle;
  bool formula_route = false;   // closed formula vs direct complex
  std::vector<long> dims;       // dims[n] for 1 <= n <= n_max; dims[0] = 0
};

struct DecomposedDims {
  std::vector<OrbitContribution> orbits;
  std::vector<long> totals;     // totals[n] for 1 <= n <= n_max; totals[0] = 0
};

// HH_n(A) for 1 <= n <= n_max as the sum over minimal cycle algebras.
// Degree 0 is excluded: trivial cycles belong to no proper-cycle orbit, so
// hh_0 is always computed directly on A.  When `use_formula` is set, orbits
// whose cycle algebra is a truncated basic cycle are evaluated by the closed
// formula (cross-checked against the graded formula sum; a mismatch is a
// CrossCheckError, never silently resolved).
DecomposedDims hh_decomposed(const MonomialAlgebra& a, int n_max,
                             bool use_formula = true,
                             std::size_t cap = kDefaultComplexCap);

// HC_n(A) for 1 <= n <= n_max by the same orbit decomposition.  The trivial
// chains (one per vertex) lie outside every orbit and contribute k^{|Q_0|}
// to each even degree, both in A and in each cycle algebra; so each orbit's
// share is the reduced value hc_n(Z) - [n even] |Z_0| and the totals carry
// [n even] |Q_0| on top of the orbit sum.  This is what makes the totals
// equal the direct route on every input.
DecomposedDims hc_decomposed(const MonomialAlgebra& a, int n_max,
                             std::size_t cap = kDefaultComplexCap);

// The end-to-end orbit-decomposition computation: orbit set, minimal cycle
// algebras, per-orbit HH (formula fast path where available), totals with
// direct hh_0, HC totals, and an optional direct-route cross-check of every
// total (CrossCheckError on disagreement).
struct AlgorithmReport {
  std::vector<long> hh;                   // 0..n_max
  std::vector<std::string> hh_method;     // "direct" | "decomposition"
  std::vector<long> hc;                   // 0..n_max
  std::vector<std::string> hc_method;
  DecomposedDims hh_orbits;
  DecomposedDims hc_orbits;
  bool cross_checked = false;             // direct route compared and equal
};
AlgorithmReport run_decomposition(const MonomialAlgebra& a, int n_max,
                                  bool cross_check_direct,
                                  std::size_t cap = kDefaultComplexCap);

}  // namespace hhkit
