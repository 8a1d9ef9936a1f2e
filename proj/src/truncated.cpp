#include "hhkit/truncated.hpp"

#include <cstdlib>
#include <numeric>

#include "hhkit/errors.hpp"

namespace hhkit {

namespace {

bool char_divides(long characteristic, long m) {
  return characteristic == 0 ? m == 0 : m % characteristic == 0;
}

long orbit_count(const Quiver& q, int len) {
  return static_cast<long>(cycle_orbits(q, len).size());
}

long proper_orbit_count(const Quiver& q, int len) {
  return static_cast<long>(proper_cycle_orbits(q, len).size());
}

// The shared e = 0 case: both p = 2c-1 and p = 2c contribute
//   sum_{r | q} b_r ((n,r) - 1 + [char | n/(n,r)]),
// the bracket being the dimension of Ker (equivalently Coker) of
// multiplication by n/(n,r) on the ground field.
long divisor_sum(const Quiver& quiver, int n, int q, long characteristic) {
  long total = 0;
  for (int r = 1; r <= q; ++r) {
    if (q % r != 0) continue;
    long b_r = proper_orbit_count(quiver, r);
    if (b_r == 0) continue;
    long g = std::gcd(static_cast<long>(n), static_cast<long>(r));
    long term = g - 1 + (char_divides(characteristic, n / g) ? 1 : 0);
    total += b_r * term;
  }
  return total;
}

}  // namespace

long truncated_hh_pq(const TruncatedPresentation& t, int p, int q) {
  if (t.n < 2) throw UsageError("truncation index must be >= 2");
  if (p < 0 || q < 0) return 0;
  if (q == 0) return p == 0 ? t.quiver.num_vertices() : 0;

  const int c = q / t.n;
  const int e = q % t.n;
  if (e >= 1) {
    if (2 * c <= p && p <= 2 * c + 1) return orbit_count(t.quiver, q);
    return 0;
  }
  if (p > 0 && (p == 2 * c - 1 || p == 2 * c))
    return divisor_sum(t.quiver, t.n, q, t.characteristic);
  return 0;
}

std::vector<long> truncated_hh_totals(const TruncatedPresentation& t,
                                      int p_max) {
  std::vector<long> out;
  for (int p = 0; p <= p_max; ++p) {
    long total = 0;
    int q_max = (p / 2 + 1) * t.n;
    for (int q = 0; q <= q_max; ++q) total += truncated_hh_pq(t, p, q);
    out.push_back(total);
  }
  return out;
}

long basic_cycle_hh(int l, int n, int p, long characteristic) {
  if (l < 1 || n < 2) throw UsageError("basic cycle needs l >= 1, n >= 2");
  if (p < 0) return 0;
  if (p == 0) return l + (n - 1) / l;

  const long c = p / 2;
  const long base = (c * n + n - 1) / l - (c * n) / l;
  const long half_up = ((static_cast<long>(p) + 1) / 2) * n;
  if (half_up % l != 0) return base;
  long g = std::gcd(static_cast<long>(n), static_cast<long>(l));
  return base + g - (char_divides(characteristic, n / g) ? 0 : 1);
}

std::vector<long> NonvanishingProgression::members(int count) const {
  std::vector<long> out;
  for (int k = 0; k < count; ++k)
    out.push_back(all_p ? k + 1 : start + step * k);
  return out;
}

NonvanishingProgression infinite_witness(int l, int n) {
  if (l < 1 || n < 2) throw UsageError("basic cycle needs l >= 1, n >= 2");
  NonvanishingProgression out;
  long g = std::gcd(static_cast<long>(n), static_cast<long>(l));
  if (g >= 2) {
    // p = 2ml - 1, m >= 1: the divisibility bump contributes (n,l) - 1 >= 1.
    out.start = 2L * l - 1;
    out.step = 2L * l;
    return out;
  }
  if (l <= n - 1) {
    out.all_p = true;
    return out;
  }
  // gcd 1 and l > n-1: pick u, v with un + vl = 1; for p = 2(ml + u - 1) the
  // floor difference equals 1 once m is large enough to keep p positive.
  long u = 0, v = 0;
  {
    long r0 = n, r1 = l, u0 = 1, u1 = 0;
    while (r1 != 0) {
      long quot = r0 / r1;
      long r2 = r0 - quot * r1, u2 = u0 - quot * u1;
      r0 = r1, r1 = r2, u0 = u1, u1 = u2;
    }
    u = u0;
    v = (1 - u * n) / l;
  }
  long m0 = std::labs(u) + std::labs(v) + 1;
  out.start = 2 * (m0 * l + u - 1);
  out.step = 2L * l;
  return out;
}

TruncatedClassification classify_truncated(const TruncatedPresentation& t) {
  TruncatedClassification out;
  std::optional<CycleWord> cycle = shortest_cycle(t.quiver);
  out.acyclic = !cycle.has_value();
  out.gldim_finite = out.acyclic;
  out.hhdim_zero = out.acyclic;
  if (cycle) {
    out.shortest = cycle;
    out.witness_length = cycle->length();
    out.witness = infinite_witness(cycle->length(), t.n);
  }
  return out;
}

}  // namespace hhkit
