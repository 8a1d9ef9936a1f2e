#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "hhkit/quiver.hpp"

using namespace hhkit;

namespace {

// The five standing fixtures used across the suite.
Quiver one_loop() { return Quiver::loop_bouquet(1); }
Quiver two_loops() { return Quiver::loop_bouquet(2); }
Quiver flip_flop() {  // 1 <-> 2
  return Quiver({"1", "2"}, {{"alpha", 0, 1}, {"beta", 1, 0}});
}
Quiver line3() { return Quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}}); }

MonomialAlgebra dual_numbers(long p = 0) {
  return MonomialAlgebra::truncated(one_loop(), 2, Field(p));
}

// gl.dim-2 algebra on the 2-cycle: arrows alpha then beta compose to the
// nonzero loop at vertex 1, the opposite composite is the relation.
MonomialAlgebra flip_flop_algebra(long p = 0) {
  return MonomialAlgebra::with_relations(flip_flop(), {{1, 0}}, Field(p));
}

long euler_phi(long n) {
  long out = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out -= out / d;
    while (n % d == 0) n /= d;
  }
  if (n > 1) out -= out / n;
  return out;
}

}  // namespace

TEST_CASE("quiver construction validates ids") {
  CHECK_THROWS_AS(Quiver({"v", "v"}, {}), UsageError);
  CHECK_THROWS_AS(Quiver({"v"}, {{"x", 0, 0}, {"x", 0, 0}}), UsageError);
  CHECK_THROWS_AS(Quiver({"v"}, {{"x", 0, 1}}), UsageError);
}

TEST_CASE("basis of the dual numbers") {
  MonomialAlgebra a = dual_numbers();
  CHECK(a.dim() == 2);
  CHECK(a.max_path_length() == 1);
  CHECK(a.basis()[0].is_trivial());
  CHECK(a.basis()[1].arrows() == std::vector<int>{0});
}

TEST_CASE("basis of the flip-flop algebra") {
  MonomialAlgebra a = flip_flop_algebra();
  REQUIRE(a.dim() == 5);
  const Quiver& q = a.quiver();
  std::vector<std::string> names;
  for (const Path& p : a.basis()) names.push_back(p.str(q));
  CHECK(names == std::vector<std::string>{"e_1", "e_2", "alpha", "beta",
                                          "alpha beta"});
  // alpha beta is the nonzero length-2 path; beta alpha is the relation.
  CHECK(a.word_is_zero({1, 0}));
  CHECK(!a.word_is_zero({0, 1}));
  CHECK(!a.product(Path::word(q, {1}), Path::word(q, {0})).has_value());
  auto ab = a.product(Path::word(q, {0}), Path::word(q, {1}));
  REQUIRE(ab.has_value());
  CHECK(ab->length() == 2);
}

TEST_CASE("radical-square-zero bouquet basis") {
  MonomialAlgebra a = MonomialAlgebra::truncated(two_loops(), 2, Field(0));
  CHECK(a.dim() == 3);  // e, x, y
  CHECK(a.max_path_length() == 1);
}

TEST_CASE("relations of length < 2 are rejected") {
  CHECK_THROWS_AS(
      MonomialAlgebra::with_relations(one_loop(), {{0}}, Field(0)),
      UsageError);
}

TEST_CASE("finite-dimensionality certificates") {
  SUBCASE("loop with square relation is finite") {
    auto cert = finite_dimensional(one_loop(), {{0, 0}});
    CHECK(cert.finite);
  }
  SUBCASE("free loop is infinite with witness x") {
    auto cert = finite_dimensional(one_loop(), {});
    REQUIRE(!cert.finite);
    CHECK(cert.witness->arrows() == std::vector<int>{0});
    CHECK_THROWS_AS(
        MonomialAlgebra::with_relations(one_loop(), {}, Field(0)),
        ComputeError);
  }
  SUBCASE("two loops with xx, yy, yx is finite") {
    // Candidate pump xy fails: (xy)^2 contains the factor yx.
    auto cert = finite_dimensional(two_loops(), {{0, 0}, {1, 1}, {1, 0}});
    CHECK(cert.finite);
    MonomialAlgebra a = MonomialAlgebra::with_relations(
        two_loops(), {{0, 0}, {1, 1}, {1, 0}}, Field(0));
    // Cross-check by enumeration: every word of length >= 3 dies.
    CHECK(a.max_path_length() == 2);
    for (int l1 = 0; l1 < 2; ++l1)
      for (int l2 = 0; l2 < 2; ++l2)
        for (int l3 = 0; l3 < 2; ++l3) CHECK(a.word_is_zero({l1, l2, l3}));
  }
  SUBCASE("finiteness matches basis enumeration on fixtures") {
    MonomialAlgebra a = flip_flop_algebra();
    int max_len = a.max_path_length();
    // Every walk of length max_len + 1 contains a relation.
    const Quiver& q = a.quiver();
    std::vector<std::vector<int>> walks{{}};
    for (int step = 0; step <= max_len; ++step) {
      std::vector<std::vector<int>> next;
      for (const auto& w : walks) {
        int at = w.empty() ? 0 : q.target(w.back());
        for (int arr : q.arrows_from(at)) {
          auto ext = w;
          ext.push_back(arr);
          next.push_back(ext);
        }
      }
      walks = next;
    }
    for (const auto& w : walks)
      if (!w.empty() && q.source(w.front()) == 0)
        CHECK(a.word_is_zero(w));
  }
}

TEST_CASE("cycle orbit counts") {
  CHECK(cycle_orbits(one_loop(), 3).size() == 1);

  auto orbits2 = cycle_orbits(two_loops(), 2);
  REQUIRE(orbits2.size() == 3);  // xx, xy ~ yx, yy
  CHECK(orbits2[0].arrows() == std::vector<int>{0, 0});
  CHECK(orbits2[1].arrows() == std::vector<int>{0, 1});
  CHECK(orbits2[2].arrows() == std::vector<int>{1, 1});

  CHECK(cycle_orbits(Quiver::basic_cycle(3), 4).empty());
  CHECK(cycle_orbits(Quiver::basic_cycle(3), 6).size() == 1);
}

TEST_CASE("necklace counts match the Burnside formula on two loops") {
  Quiver q = two_loops();
  for (long n = 1; n <= 8; ++n) {
    long necklaces = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) necklaces += euler_phi(d) << (n / d);
    necklaces /= n;
    CHECK(static_cast<long>(cycle_orbits(q, static_cast<int>(n)).size()) ==
          necklaces);
  }
}

TEST_CASE("proper cycle orbits") {
  Quiver q = two_loops();
  CHECK(proper_cycle_orbits(q, 2).size() == 1);  // xy only
  auto b3 = proper_cycle_orbits(q, 3);
  REQUIRE(b3.size() == 2);  // xxy, xyy
  CHECK(b3[0].arrows() == std::vector<int>{0, 0, 1});
  CHECK(b3[1].arrows() == std::vector<int>{0, 1, 1});

  for (int l : {1, 2, 3, 4}) {
    Quiver c = Quiver::basic_cycle(l);
    for (int r = 1; r <= 6; ++r)
      CHECK(proper_cycle_orbits(c, r).size() == (r == l ? 1u : 0u));
  }
}

TEST_CASE("b_r <= a_r and unique proper root per cycle") {
  for (const Quiver& q : {two_loops(), flip_flop(), Quiver::basic_cycle(2)}) {
    for (int len = 1; len <= 6; ++len) {
      auto all = cycle_orbits(q, len);
      auto proper = proper_cycle_orbits(q, len);
      CHECK(proper.size() <= all.size());
      // Every length-len cycle is a power of exactly one proper orbit rep.
      for (const CycleWord& w : all) {
        int roots = 0;
        for (int d = 1; d <= len; ++d) {
          if (len % d != 0) continue;
          for (const CycleWord& p : proper_cycle_orbits(q, d)) {
            std::vector<int> power;
            for (int rep = 0; rep < len / d; ++rep)
              power.insert(power.end(), p.arrows().begin(), p.arrows().end());
            CycleWord pw(q, power);
            if (pw.canonical(q) == w) ++roots;
          }
        }
        CHECK(roots == 1);
      }
    }
  }
}

TEST_CASE("cycle classification") {
  Quiver q2 = two_loops();
  CycleWord xy(q2, {0, 1});
  CHECK(!classify_cycle(q2, xy).basic);  // both letters start at v
  CHECK(classify_cycle(q2, xy).proper);

  CycleWord xx(q2, {0, 0});
  CHECK(!classify_cycle(q2, xx).proper);

  Quiver ff = flip_flop();
  CycleWord ab(ff, {0, 1});
  CHECK(classify_cycle(ff, ab).basic);
  CHECK(classify_cycle(ff, ab).proper);
}

TEST_CASE("canonicalization is rotation-invariant") {
  Quiver q = two_loops();
  std::vector<std::vector<int>> words{{0, 1, 1}, {1, 0, 1}, {0, 0, 1, 0, 1}};
  for (const auto& w : words) {
    CycleWord cw(q, w);
    CycleWord canon = cw.canonical(q);
    for (int k = 0; k < cw.length(); ++k) {
      CHECK(cw.rotated(q, k).canonical(q) == canon);
      CHECK(classify_cycle(q, cw.rotated(q, k)).proper ==
            classify_cycle(q, cw).proper);
      CHECK(classify_cycle(q, cw.rotated(q, k)).basic ==
            classify_cycle(q, cw).basic);
    }
  }
}

TEST_CASE("shortest cycle") {
  CHECK(!shortest_cycle(line3()).has_value());

  auto ff = shortest_cycle(flip_flop());
  REQUIRE(ff.has_value());
  CHECK(ff->length() == 2);
  CHECK(ff->is_basic(flip_flop()));

  auto loops = shortest_cycle(two_loops());
  REQUIRE(loops.has_value());
  CHECK(loops->length() == 1);
  CHECK(loops->arrows() == std::vector<int>{0});
}

TEST_CASE("relation sets are reduced") {
  // xx is a factor of xxy, so the longer relation is dropped.
  MonomialAlgebra a = MonomialAlgebra::with_relations(
      two_loops(), {{0, 0, 1}, {0, 0}, {1, 1}, {1, 0}}, Field(0));
  CHECK(a.relations().size() == 3);
  for (const auto& r : a.relations()) CHECK(r.size() == 2);
}
