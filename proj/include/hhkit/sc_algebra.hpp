#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hhkit/matrix.hpp"
#include "hhkit/quiver.hpp"

namespace hhkit {

// A finite-dimensional algebra presented by structure constants: a labelled
// basis, the coordinates of the unit, and the full multiplication table.
// This is the fallback representation for algebras that are not monomial
// (A_q, tensor products) and the reference route for cross-checking the
// quiver engine.
struct SCAlgebra {
  Field field = Field(0);
  std::vector<std::string> labels;
  DenseVec unit;                            // coordinates of 1
  std::vector<std::vector<DenseVec>> mult;  // mult[i][j] = coords of b_i * b_j

  std::size_t dim() const { return labels.size(); }

  // Throws InternalError unless the table is associative on all basis
  // triples and the unit acts as a two-sided identity.
  void validate() const;
};

// The algebra itself, on its path basis.
SCAlgebra sc_from_monomial(const MonomialAlgebra& a);

// Product algebra S x T (disjoint-union of quivers when both come from
// path presentations).  Basis labels get "1."/"2." prefixes.
SCAlgebra sc_disjoint(const SCAlgebra& s, const SCAlgebra& t);

// Tensor product over the ground field, (s1 (x) t1)(s2 (x) t2) = s1s2 (x) t1t2.
SCAlgebra sc_tensor(const SCAlgebra& s, const SCAlgebra& t);

// Hochschild homology through degree n_max via the normalized complex
// S (x) (S/k1)^{(x) n}.  The quotient needs a basis vector with a nonzero
// unit coordinate to drop; any choice gives the same homology.
std::vector<long> sc_hochschild_homology(const SCAlgebra& s, int n_max,
                                         std::size_t cap = kDefaultComplexCap);

// Hochschild cohomology through degree n_max via normalized cochains
// Hom((S/k1)^{(x) n}, S).  Degree 0 is the center.
std::vector<long> sc_hochschild_cohomology(
    const SCAlgebra& s, int n_max, std::size_t cap = kDefaultComplexCap);

// Unnormalized reference complexes straight from the definitions.  They grow
// like dim^{n+1}, so these are only for cross-checks at tiny degrees.
std::vector<long> sc_hochschild_homology_raw(
    const SCAlgebra& s, int n_max, std::size_t cap = kDefaultComplexCap);
std::vector<long> sc_hochschild_cohomology_raw(
    const SCAlgebra& s, int n_max, std::size_t cap = kDefaultComplexCap);

}  // namespace hhkit
