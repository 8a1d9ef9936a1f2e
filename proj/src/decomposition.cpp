#include "hhkit/decomposition.hpp"

#include <algorithm>
#include <string>

#include "hhkit/errors.hpp"

namespace hhkit {

CycleAlgebra minimal_cycle_algebra(const MonomialAlgebra& a,
                                   const CycleWord& orbit) {
  if (!orbit.is_proper())
    throw UsageError("cycle '" + orbit.str(a.quiver()) +
                     "' is a proper power; only proper cycles give minimal "
                     "cycle algebras");
  const int r = orbit.length();
  const int big_l = a.max_path_length();
  Quiver cycle = Quiver::basic_cycle(r);

  // Pull back relations: scan the wrap-around windows at each start; the
  // first zero window is the minimal relation beginning there, and a window
  // of length L+1 is always zero, so the scan terminates.
  std::vector<std::vector<int>> relations;
  for (int s = 0; s < r; ++s) {
    for (int m = 2; m <= big_l + 1; ++m) {
      std::vector<int> image;
      std::vector<int> window;
      for (int k = 0; k < m; ++k) {
        image.push_back(orbit.arrows()[static_cast<std::size_t>((s + k) % r)]);
        window.push_back((s + k) % r);
      }
      if (a.word_is_zero(image)) {
        relations.push_back(std::move(window));
        break;
      }
      if (m == big_l + 1)
        throw InternalError("cycle algebra: no zero window at start " +
                            std::to_string(s));
    }
  }

  // Truncated form: one relation per start, all of the same length.
  bool truncated_form = static_cast<int>(relations.size()) == r;
  int u = relations.empty() ? 0 : static_cast<int>(relations.front().size());
  for (const auto& w : relations)
    truncated_form = truncated_form && static_cast<int>(w.size()) == u;

  CycleAlgebra out{
      orbit,
      truncated_form
          ? MonomialAlgebra::truncated(cycle, u, a.field())
          : MonomialAlgebra::with_relations(cycle, relations, a.field()),
      orbit.arrows(), truncated_form, truncated_form ? u : 0};
  return out;
}

std::vector<CycleWord> contributing_orbits(const MonomialAlgebra& a, int n) {
  if (n < 1) throw UsageError("contributing_orbits: degree must be >= 1");
  std::vector<CycleWord> out;
  const int max_len = (n + 1) * a.max_path_length();
  for (int r = 1; r <= max_len; ++r)
    for (const CycleWord& w : proper_cycle_orbits(a.quiver(), r))
      out.push_back(w);
  return out;
}

namespace {

// Per-orbit homology by the closed formula when the cycle algebra is a
// truncated basic cycle, by the direct complex otherwise.  The formula route
// is cross-checked against the graded formula sum, including the two
// different hh_0 expressions.
std::vector<long> orbit_hh(const CycleAlgebra& z, int n_max, bool use_formula,
                           std::size_t cap, bool* formula_route) {
  *formula_route = use_formula && z.truncated_form;
  if (!*formula_route) {
    std::vector<long> dims = hochschild_homology(z.algebra, n_max, cap).total;
    dims[0] = 0;
    return dims;
  }
  const int l = z.orbit.length();
  const long characteristic = z.algebra.field().characteristic();
  TruncatedPresentation pres{Quiver::basic_cycle(l), z.truncation,
                             characteristic};
  std::vector<long> graded_sum = truncated_hh_totals(pres, n_max);
  std::vector<long> dims(static_cast<std::size_t>(n_max) + 1, 0);
  for (int p = 0; p <= n_max; ++p) {
    long value = basic_cycle_hh(l, z.truncation, p, characteristic);
    if (value != graded_sum[static_cast<std::size_t>(p)])
      throw CrossCheckError(
          "basic cycle formula disagrees with the graded sum at p = " +
          std::to_string(p) + " (" + std::to_string(value) + " vs " +
          std::to_string(graded_sum[static_cast<std::size_t>(p)]) + ")");
    if (p >= 1) dims[static_cast<std::size_t>(p)] = value;
  }
  return dims;
}

DecomposedDims decompose(const MonomialAlgebra& a, int n_max, bool use_formula,
                         bool cyclic, std::size_t cap) {
  if (n_max < 1) throw UsageError("decomposition: n_max must be >= 1");
  DecomposedDims out;
  out.totals.assign(static_cast<std::size_t>(n_max) + 1, 0);
  for (const CycleWord& w : contributing_orbits(a, n_max)) {
    OrbitContribution c{w.str(a.quiver()), minimal_cycle_algebra(a, w), false,
                        {}};
    if (cyclic) {
      c.dims = cyclic_homology(c.cycle.algebra, n_max, cap);
      c.dims[0] = 0;
      // Reduced share: the cycle algebra's own trivial chains account for
      // |Z_0| dimensions in every even degree.
      for (int n = 2; n <= n_max; n += 2)
        c.dims[static_cast<std::size_t>(n)] -= w.length();
    } else {
      c.dims = orbit_hh(c.cycle, n_max, use_formula, cap, &c.formula_route);
    }
    for (int n = 1; n <= n_max; ++n)
      out.totals[static_cast<std::size_t>(n)] +=
          c.dims[static_cast<std::size_t>(n)];
    out.orbits.push_back(std::move(c));
  }
  if (cyclic) {
    for (int n = 2; n <= n_max; n += 2)
      out.totals[static_cast<std::size_t>(n)] += a.quiver().num_vertices();
  }
  return out;
}

}  // namespace

DecomposedDims hh_decomposed(const MonomialAlgebra& a, int n_max,
                             bool use_formula, std::size_t cap) {
  return decompose(a, n_max, use_formula, /*cyclic=*/false, cap);
}

DecomposedDims hc_decomposed(const MonomialAlgebra& a, int n_max,
                             std::size_t cap) {
  return decompose(a, n_max, /*use_formula=*/false, /*cyclic=*/true, cap);
}

AlgorithmReport run_decomposition(const MonomialAlgebra& a, int n_max,
                                  bool cross_check_direct, std::size_t cap) {
  AlgorithmReport rep;
  rep.hh.assign(static_cast<std::size_t>(n_max) + 1, 0);
  rep.hc.assign(static_cast<std::size_t>(n_max) + 1, 0);
  rep.hh_method.assign(static_cast<std::size_t>(n_max) + 1, "decomposition");
  rep.hc_method.assign(static_cast<std::size_t>(n_max) + 1, "decomposition");

  // Degree 0 is outside the orbit decomposition; both hh_0 and hc_0 come
  // from the complex on A itself (and agree with each other).
  rep.hh[0] = hochschild_homology(a, 0, cap).total[0];
  rep.hc[0] = rep.hh[0];
  rep.hh_method[0] = "direct";
  rep.hc_method[0] = "direct";

  if (n_max >= 1) {
    rep.hh_orbits = hh_decomposed(a, n_max, /*use_formula=*/true, cap);
    rep.hc_orbits = hc_decomposed(a, n_max, cap);
    for (int n = 1; n <= n_max; ++n) {
      rep.hh[static_cast<std::size_t>(n)] =
          rep.hh_orbits.totals[static_cast<std::size_t>(n)];
      rep.hc[static_cast<std::size_t>(n)] =
          rep.hc_orbits.totals[static_cast<std::size_t>(n)];
    }
  }

  if (cross_check_direct) {
    std::vector<long> direct_hh = hochschild_homology(a, n_max, cap).total;
    std::vector<long> direct_hc = cyclic_homology(a, n_max, cap);
    for (int n = 0; n <= n_max; ++n) {
      if (direct_hh[static_cast<std::size_t>(n)] !=
          rep.hh[static_cast<std::size_t>(n)])
        throw CrossCheckError(
            "hh routes disagree at n = " + std::to_string(n) + ": direct " +
            std::to_string(direct_hh[static_cast<std::size_t>(n)]) +
            ", decomposition " +
            std::to_string(rep.hh[static_cast<std::size_t>(n)]));
      if (direct_hc[static_cast<std::size_t>(n)] !=
          rep.hc[static_cast<std::size_t>(n)])
        throw CrossCheckError(
            "hc routes disagree at n = " + std::to_string(n) + ": direct " +
            std::to_string(direct_hc[static_cast<std::size_t>(n)]) +
            ", decomposition " +
            std::to_string(rep.hc[static_cast<std::size_t>(n)]));
    }
    rep.cross_checked = true;
  }
  return rep;
}

}  // namespace hhkit
