#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhkit/scalar.hpp"

namespace hhkit {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

// Finite directed multigraph.  Vertices and arrows are referred to by their
// declaration index; names are kept for input/output only.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

  static Quiver basic_cycle(int length);   // z0 -> z1 -> ... -> z0
  static Quiver loop_bouquet(int count);   // one vertex, `count` loops

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  int source(int a) const { return arrows_.at(a).source; }
  int target(int a) const { return arrows_.at(a).target; }
  const std::vector<int>& arrows_from(int v) const { return out_.at(v); }

  // Target of a walk; nullopt when the arrow sequence is not composable or
  // does not start at `from`.
  std::optional<int> walk_target(int from, const std::vector<int>& word) const;
  bool word_is_walk(const std::vector<int>& word) const;

  std::string word_str(const std::vector<int>& word) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;  // arrow indices by source vertex
};

// A composable arrow sequence, or a trivial path at a vertex.  `base` is the
// start vertex; arrows compose left to right (the path a1 a2 runs along a1
// first, then a2).
class Path {
 public:
  static Path trivial(int vertex);
  static Path word(const Quiver& q, std::vector<int> arrows);

  int length() const { return static_cast<int>(arrows_.size()); }
  bool is_trivial() const { return arrows_.empty(); }
  int source() const { return base_; }
  int target(const Quiver& q) const;
  const std::vector<int>& arrows() const { return arrows_; }

  bool operator==(const Path& o) const {
    return base_ == o.base_ && arrows_ == o.arrows_;
  }
  // (length, arrow word, base) -- the basis order used everywhere.
  bool operator<(const Path& o) const;

  std::string str(const Quiver& q) const;

 private:
  int base_ = 0;
  std::vector<int> arrows_;
};

// A closed arrow word of length >= 1 considered up to rotation.
class CycleWord {
 public:
  CycleWord(const Quiver& q, std::vector<int> arrows);

  int length() const { return static_cast<int>(arrows_.size()); }
  const std::vector<int>& arrows() const { return arrows_; }

  CycleWord rotated(const Quiver& q, int k) const;
  CycleWord canonical(const Quiver& q) const;  // lexicographically least rotation

  bool is_basic(const Quiver& q) const;  // start vertices pairwise distinct
  bool is_proper() const;                // not a power (>= 2) of a shorter word

  bool operator==(const CycleWord& o) const { return arrows_ == o.arrows_; }
  bool operator<(const CycleWord& o) const { return arrows_ < o.arrows_; }

  std::string str(const Quiver& q) const;

 private:
  std::vector<int> arrows_;
};

struct CycleFlags {
  bool basic = false;
  bool proper = false;
};
CycleFlags classify_cycle(const Quiver& q, const CycleWord& w);

// All rotation orbits of length-q cycles, one canonical representative each,
// sorted.  The orbit count is reps.size() (the a_q of cycle counting).
std::vector<CycleWord> cycle_orbits(const Quiver& q, int length);

// Orbits of proper cycles only (the b_r count).
std::vector<CycleWord> proper_cycle_orbits(const Quiver& q, int length);

// A cycle of minimal length (canonical representative; necessarily basic),
// or nullopt when the quiver is acyclic.
std::optional<CycleWord> shortest_cycle(const Quiver& q);

// Result of the finite-dimensionality decision: either finite, or a cycle
// witness all of whose powers avoid the relations.
struct FinitenessCertificate {
  bool finite = false;
  std::optional<CycleWord> witness;
};

// Decides whether the factor-avoiding path language is finite, by cycle
// detection in the forbidden-factor automaton whose states pair a vertex with
// the longest suffix read that is a proper prefix of a relation.
FinitenessCertificate finite_dimensional(
    const Quiver& q, const std::vector<std::vector<int>>& relations);

// kQ/I for a monomial ideal I: relations are paths of length >= 2, or the
// truncation "all paths of length n".  Construction validates the input,
// reduces the relation set, certifies finite-dimensionality and enumerates
// the path basis.
class MonomialAlgebra {
 public:
  static MonomialAlgebra with_relations(Quiver q,
                                        std::vector<std::vector<int>> relations,
                                        Field field);
  static MonomialAlgebra truncated(Quiver q, int n, Field field);

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  bool is_truncated() const { return trunc_ > 0; }
  int truncation() const { return trunc_; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }

  const std::vector<Path>& basis() const { return basis_; }
  long dim() const { return static_cast<long>(basis_.size()); }
  int max_path_length() const { return max_len_; }

  // Basis paths of the given length, in basis order.
  std::vector<Path> basis_of_length(int len) const;

  int path_index(const Path& p) const;  // -1 when absent

  // True when the walk word is zero in the algebra (contains a relation as a
  // factor, or has length >= n in the truncated case).
  bool word_is_zero(const std::vector<int>& word) const;

  // p * q: the concatenation when composable and nonzero, else nullopt.
  std::optional<Path> product(const Path& p, const Path& q) const;

 private:
  MonomialAlgebra(Quiver q, std::vector<std::vector<int>> relations, int trunc,
                  Field field);

  Quiver quiver_;
  std::vector<std::vector<int>> relations_;  // reduced; empty if truncated
  int trunc_ = 0;                            // 0 = explicit relations
  Field field_;
  std::vector<Path> basis_;
  int max_len_ = 0;
  std::map<std::vector<int>, int> word_index_;  // nontrivial basis paths
  std::vector<int> trivial_index_;              // per vertex
};

}  // namespace hhkit
