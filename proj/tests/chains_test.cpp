#include <vector>

#include "doctest.h"
#include "hhkit/chains.hpp"
#include "hhkit/sc_algebra.hpp"
#include "oracle.hpp"

using namespace hhkit;

namespace {

MonomialAlgebra dual_numbers(long p = 0) {
  return MonomialAlgebra::truncated(Quiver::loop_bouquet(1), 2, Field(p));
}

MonomialAlgebra two_loops_rad2(long p = 0) {
  return MonomialAlgebra::truncated(Quiver::loop_bouquet(2), 2, Field(p));
}

MonomialAlgebra flip_flop_algebra(long p = 0) {
  Quiver q({"1", "2"}, {{"alpha", 0, 1}, {"beta", 1, 0}});
  return MonomialAlgebra::with_relations(q, {{1, 0}}, Field(p));
}

MonomialAlgebra line3_trunc2(long p = 0) {
  Quiver q({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}});
  return MonomialAlgebra::truncated(q, 2, Field(p));
}

// Total internal degree of a chain tuple.
int tuple_degree(const MonomialAlgebra& a, const ChainTuple& t) {
  int d = 0;
  for (int idx : t.paths) d += a.basis()[idx].length();
  return d;
}

void check_mixed_axioms(const MonomialAlgebra& a, int n_top) {
  MixedComplex mc = mixed_complex(a, n_top);
  for (int n = 2; n <= n_top; ++n)
    CHECK(mc.b[n - 1].times(mc.b[n]).is_zero());
  for (int n = 0; n + 2 <= n_top; ++n)
    CHECK(mc.connes[n + 1].times(mc.connes[n]).is_zero());
  for (int n = 1; n + 1 <= n_top; ++n) {
    SparseMatrix anti =
        mc.b[n + 1].times(mc.connes[n]).plus(mc.connes[n - 1].times(mc.b[n]));
    CHECK(anti.is_zero());
  }
  // Both operators preserve the internal degree.
  for (int n = 1; n <= n_top; ++n)
    for (std::size_t r = 0; r < mc.b[n].rows(); ++r)
      for (const auto& [c, v] : mc.b[n].row(r))
        CHECK(tuple_degree(a, mc.basis[n - 1].elems[r]) ==
              tuple_degree(a, mc.basis[n].elems[c]));
  for (int n = 0; n + 1 <= n_top; ++n)
    for (std::size_t r = 0; r < mc.connes[n].rows(); ++r)
      for (const auto& [c, v] : mc.connes[n].row(r))
        CHECK(tuple_degree(a, mc.basis[n + 1].elems[r]) ==
              tuple_degree(a, mc.basis[n].elems[c]));
}

}  // namespace

TEST_CASE("chain basis of the dual numbers") {
  MonomialAlgebra a = dual_numbers();
  ChainBasis c1 = chain_basis(a, 1);
  REQUIRE(c1.dim() == 2);
  CHECK(c1.elems[0].paths == std::vector<int>{0, 1});  // (e, x)
  CHECK(c1.elems[1].paths == std::vector<int>{1, 1});  // (x, x)

  ChainBasis c2q2 = chain_basis(a, 2, 2);
  REQUIRE(c2q2.dim() == 1);
  CHECK(c2q2.elems[0].paths == std::vector<int>{0, 1, 1});  // (e, x, x)

  // Degree window: q must lie in [n, (n+1) L].
  CHECK(chain_basis(a, 2, 4).dim() == 0);
  CHECK(chain_basis(a, 2, 3).dim() == 1);
}

TEST_CASE("no cycles means no positive-degree chains") {
  Quiver q({"1", "2"}, {{"a", 0, 1}});
  MonomialAlgebra a =
      MonomialAlgebra::with_relations(q, {}, Field(0));  // kQ, acyclic
  CHECK(chain_basis(a, 1).dim() == 0);
  CHECK(chain_basis(a, 0).dim() == 2);  // the two trivial paths
}

TEST_CASE("boundary of the dual numbers is the frozen matrix") {
  for (long p : {0L, 2L}) {
    MonomialAlgebra a = dual_numbers(p);
    ChainBasis c0 = chain_basis(a, 0), c1 = chain_basis(a, 1),
               c2 = chain_basis(a, 2);
    SparseMatrix b1 = boundary_matrix(a, c1, c0);
    CHECK(b1.is_zero());  // b(e,x) = x - x, b(x,x) = 0 - 0

    // b(e,x,x) = (x,x) + (x,x) = 2 (x,x); b(x,x,x) = 0.
    SparseMatrix b2 = boundary_matrix(a, c2, c1);
    CHECK(b2.at(1, 0) == Field(p).from_int(2));
    CHECK(b2.rank() == (p == 0 ? 1 : 0));
  }
}

TEST_CASE("boundary drops products that hit a relation") {
  MonomialAlgebra a = flip_flop_algebra();
  ChainBasis c0 = chain_basis(a, 0), c1 = chain_basis(a, 1);
  REQUIRE(c0.dim() == 3);  // e_1, e_2, alpha beta
  REQUIRE(c1.dim() == 4);  // (e_1, ab), (a, b), (b, a), (ab, ab)
  SparseMatrix b1 = boundary_matrix(a, c1, c0);
  // b(alpha, beta) = alpha beta - [beta alpha] = alpha beta.
  CHECK(b1.at(2, 1) == a.field().one());
  // b(beta, alpha) = [beta alpha] - alpha beta = -alpha beta.
  CHECK(b1.at(2, 2) == -a.field().one());
  CHECK(b1.rank() == 1);
}

TEST_CASE("Connes operator on the dual numbers") {
  MonomialAlgebra a = dual_numbers();
  ChainBasis c0 = chain_basis(a, 0), c1 = chain_basis(a, 1),
             c2 = chain_basis(a, 2), c3 = chain_basis(a, 3);
  SparseMatrix b0 = connes_matrix(a, c0, c1);
  CHECK(b0.at(0, 1) == a.field().one());  // B(x) = (e, x)
  for (std::size_t r = 0; r < b0.rows(); ++r)
    CHECK(b0.at(r, 0).is_zero());  // B(e) = 0

  CHECK(connes_matrix(a, c1, c2).is_zero());  // B(e,x) = 0, B(x,x) cancels
  // B(x,x,x) = 3 (e,x,x,x); B(e,x,x) = 0.
  SparseMatrix b2 = connes_matrix(a, c2, c3);
  CHECK(b2.at(0, 1) == a.field().from_int(3));
}

TEST_CASE("mixed complex axioms hold on the fixtures") {
  check_mixed_axioms(dual_numbers(), 5);
  check_mixed_axioms(dual_numbers(2), 5);
  check_mixed_axioms(two_loops_rad2(), 5);
  check_mixed_axioms(flip_flop_algebra(), 5);
  check_mixed_axioms(line3_trunc2(), 4);
  check_mixed_axioms(
      MonomialAlgebra::truncated(Quiver::basic_cycle(3), 2, Field(0)), 5);
}

TEST_CASE("hh of the dual numbers across characteristics") {
  HochschildDims h0 = hochschild_homology(dual_numbers(0), 4);
  CHECK(h0.total == std::vector<long>{2, 1, 1, 1, 1});
  HochschildDims h2 = hochschild_homology(dual_numbers(2), 4);
  CHECK(h2.total == std::vector<long>{2, 2, 2, 2, 2});
  // Graded refinement, seen from the formula side elsewhere: hh_0 lives in
  // degrees 0 and 1, positive p in degrees 2c(+e) only.
  CHECK(h0.graded.at(0).at(0) == 1);
  CHECK(h0.graded.at(0).at(1) == 1);
  CHECK(h0.graded.at(1).at(1) == 1);
  CHECK(h0.graded.at(1).count(2) == 0);
  CHECK(h0.graded.at(2).at(3) == 1);
}

TEST_CASE("hh of the radical-square-zero two-loop algebra") {
  HochschildDims h = hochschild_homology(two_loops_rad2(), 2);
  CHECK(h.total == std::vector<long>{3, 3, 5});
  CHECK(h.graded.at(1).at(1) == 2);
  CHECK(h.graded.at(1).at(2) == 1);
  CHECK(h.graded.at(2).at(2) == 1);
  CHECK(h.graded.at(2).at(3) == 4);
}

TEST_CASE("hh of a truncated acyclic quiver vanishes in positive degrees") {
  HochschildDims h = hochschild_homology(line3_trunc2(), 4);
  CHECK(h.total == std::vector<long>{3, 0, 0, 0, 0});
}

TEST_CASE("hh of the flip-flop algebra vanishes in positive degrees") {
  HochschildDims h = hochschild_homology(flip_flop_algebra(), 4);
  CHECK(h.total == std::vector<long>{2, 0, 0, 0, 0});
}

TEST_CASE("engine agrees with the raw bar-complex oracle") {
  for (long p : {0L, 2L}) {
    for (const MonomialAlgebra& a :
         {dual_numbers(p), two_loops_rad2(p), flip_flop_algebra(p)}) {
      std::vector<long> engine = hochschild_homology(a, 2).total;
      std::vector<long> ref = oracle::hh(sc_from_monomial(a), 2);
      CHECK(engine == ref);
    }
  }
}

TEST_CASE("cyclic homology basics") {
  // Vertices only (after truncation the arrow survives but no cycles exist):
  // HC alternates |Q_0|, 0.
  Quiver q({"1", "2"}, {{"a", 0, 1}});
  MonomialAlgebra a = MonomialAlgebra::truncated(q, 2, Field(0));
  CHECK(cyclic_homology(a, 4) == std::vector<long>{2, 0, 2, 0, 2});

  // Dual numbers, char 0: reduced HC is k in even degrees.
  CHECK(cyclic_homology(dual_numbers(), 4) == std::vector<long>{2, 0, 2, 0, 2});

  // HC_0 = HH_0 on every fixture.
  for (const MonomialAlgebra& alg :
       {dual_numbers(), two_loops_rad2(), flip_flop_algebra(),
        line3_trunc2()}) {
    CHECK(cyclic_homology(alg, 1)[0] == hochschild_homology(alg, 0).total[0]);
  }
}

TEST_CASE("complex size cap raises a ComputeError") {
  CHECK_THROWS_AS(hochschild_homology(two_loops_rad2(), 3, /*cap=*/5),
                  ComputeError);
  CHECK_THROWS_AS(chain_basis(two_loops_rad2(), 3, std::nullopt, /*cap=*/3),
                  ComputeError);
}
