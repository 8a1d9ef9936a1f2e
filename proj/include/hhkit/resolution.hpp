#pragma once

#include <string>
#include <vector>

#include "hhkit/matrix.hpp"
#include "hhkit/quiver.hpp"

namespace hhkit {

// A finite-dimensional right module over a monomial algebra: a based space
// per vertex and an action matrix per arrow, M_{s(a)} -> M_{e(a)} (paths act
// on the right, composing left to right, so the matrix of a path is the
// product of its arrow matrices applied innermost-first).
struct RightModule {
  std::vector<long> dim_v;            // per vertex
  std::vector<SparseMatrix> action;   // per arrow

  long dim() const;
  bool is_zero() const { return dim() == 0; }
};

RightModule zero_module(const MonomialAlgebra& a);
RightModule simple_module(const MonomialAlgebra& a, int vertex);
// e_v A with basis the nonzero paths starting at v, acting by concatenation.
RightModule projective_module(const MonomialAlgebra& a, int vertex);

// Checks shapes and that every relation acts as zero (all length-n walks in
// the truncated case); throws InternalError when violated.
void validate_module(const MonomialAlgebra& a, const RightModule& m);

// Projective cover: one copy of P_v per basis vector of (M/M r)_v, with the
// surjection sending each generator to a lift of that vector.
struct ProjectiveCover {
  RightModule cover;
  std::vector<int> summand_vertex;      // generator vertex per summand
  std::vector<long> multiplicity;       // copies of P_v per vertex
  std::vector<SparseMatrix> surjection; // per vertex: M_v x cover_v
};
ProjectiveCover projective_cover(const MonomialAlgebra& a,
                                 const RightModule& m);

// Kernel of the projective cover, as a module with induced action maps.
RightModule syzygy(const MonomialAlgebra& a, const RightModule& m);

// One resolution step: the cover multiplicities and the syzygy dimension.
struct ResolutionStep {
  std::vector<long> multiplicity;
  long cover_dim = 0;
  long syzygy_dim = 0;
};

// "= d" when the module resolves within max_steps syzygies, "> max_steps"
// otherwise; the trace records every step taken.
struct DimProbe {
  bool exact = false;
  long value = 0;
  std::vector<ResolutionStep> steps;

  std::string str() const;
};
DimProbe projdim_probe(const MonomialAlgebra& a, const RightModule& m,
                       int max_steps);

// Max of projdim_probe over the simple modules; exact only when every
// simple resolves within the step budget.
struct GlobalDimProbe {
  bool exact = false;
  long value = 0;
  std::vector<DimProbe> per_simple;

  std::string str() const;
};
GlobalDimProbe gldim_probe(const MonomialAlgebra& a, int max_steps);

}  // namespace hhkit
