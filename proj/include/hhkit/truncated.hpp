#pragma once

#include <optional>
#include <vector>

#include "hhkit/quiver.hpp"

namespace hhkit {

// kQ/k^nQ: every path of length n is a relation.
struct TruncatedPresentation {
  Quiver quiver;
  int n;                 // truncation index >= 2
  long characteristic;   // 0 or prime
};

// dim HH_{p,q} of a truncated quiver algebra by the closed graded formula
// (Skoldberg).  Writing q = cn + e with 0 <= e <= n-1:
//   1 <= e      : a_q when 2c <= p <= 2c+1, else 0
//   e = 0, q > 0: sum over r | q of b_r ((n,r) - 1 + [char | n/(n,r)])
//                 when p = 2c-1 or p = 2c, else 0
//   p = q = 0   : |Q_0|.
// The cycle-orbit counts a_q, b_r come from the quiver.
long truncated_hh_pq(const TruncatedPresentation& t, int p, int q);

// hh_p = sum over q; every nonzero case has q <= (floor(p/2) + 1) n.
std::vector<long> truncated_hh_totals(const TruncatedPresentation& t,
                                      int p_max);

// Closed formula for the truncated basic cycle algebra kC/k^nC on a cycle of
// length l.
long basic_cycle_hh(int l, int n, int p, long characteristic);

// Degrees p >= 1 in which the homology of a truncated basic cycle algebra is
// certified nonzero: either every p >= 1, or an arithmetic progression.
struct NonvanishingProgression {
  bool all_p = false;
  long start = 0;
  long step = 0;

  // The first `count` members (1, 2, 3, ... in the all_p case).
  std::vector<long> members(int count) const;
};
NonvanishingProgression infinite_witness(int l, int n);

// The equivalent finiteness conditions for a truncated quiver algebra.  All
// three booleans coincide and are decided by acyclicity; a cyclic quiver
// additionally yields the shortest cycle (necessarily basic) and the
// nonvanishing progression of its truncated basic cycle subalgebra.
struct TruncatedClassification {
  bool acyclic = false;
  bool gldim_finite = false;
  bool hhdim_zero = false;
  std::optional<CycleWord> shortest;
  int witness_length = 0;
  std::optional<NonvanishingProgression> witness;
};
TruncatedClassification classify_truncated(const TruncatedPresentation& t);

}  // namespace hhkit
