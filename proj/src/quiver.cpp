#include "hhkit/quiver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hhkit/errors.hpp"

namespace hhkit {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const std::string& v : vertex_names_)
    if (!seen.insert(v).second)
      throw UsageError("duplicate vertex id '" + v + "'");
  seen.clear();
  out_.assign(vertex_names_.size(), {});
  for (int a = 0; a < num_arrows(); ++a) {
    const Arrow& ar = arrows_[a];
    if (!seen.insert(ar.name).second)
      throw UsageError("duplicate arrow id '" + ar.name + "'");
    if (ar.source < 0 || ar.source >= num_vertices() || ar.target < 0 ||
        ar.target >= num_vertices())
      throw UsageError("arrow '" + ar.name + "' references unknown vertex");
    out_[ar.source].push_back(a);
  }
}

Quiver Quiver::basic_cycle(int length) {
  if (length < 1) throw InternalError("basic_cycle: length must be >= 1");
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 0; i < length; ++i) vs.push_back("z" + std::to_string(i + 1));
  for (int i = 0; i < length; ++i)
    as.push_back({"c" + std::to_string(i + 1), i, (i + 1) % length});
  return Quiver(std::move(vs), std::move(as));
}

Quiver Quiver::loop_bouquet(int count) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<Arrow> as;
  for (int i = 0; i < count; ++i) {
    std::string nm = i < 4 ? names[i] : "l" + std::to_string(i + 1);
    as.push_back({nm, 0, 0});
  }
  return Quiver({"v"}, std::move(as));
}

std::optional<int> Quiver::walk_target(int from,
                                       const std::vector<int>& word) const {
  int at = from;
  for (int a : word) {
    if (a < 0 || a >= num_arrows() || source(a) != at) return std::nullopt;
    at = target(a);
  }
  return at;
}

bool Quiver::word_is_walk(const std::vector<int>& word) const {
  if (word.empty()) return true;
  return walk_target(source(word.front()), word).has_value();
}

std::string Quiver::word_str(const std::vector<int>& word) const {
  std::string out;
  for (int a : word) {
    if (!out.empty()) out += " ";
    out += arrow(a).name;
  }
  return out;
}

Path Path::trivial(int vertex) {
  Path p;
  p.base_ = vertex;
  return p;
}

Path Path::word(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty()) throw InternalError("Path::word: empty word");
  if (!q.word_is_walk(arrows)) throw InternalError("Path::word: not composable");
  Path p;
  p.base_ = q.source(arrows.front());
  p.arrows_ = std::move(arrows);
  return p;
}

int Path::target(const Quiver& q) const {
  return arrows_.empty() ? base_ : q.target(arrows_.back());
}

bool Path::operator<(const Path& o) const {
  if (length() != o.length()) return length() < o.length();
  if (arrows_ != o.arrows_) return arrows_ < o.arrows_;
  return base_ < o.base_;
}

std::string Path::str(const Quiver& q) const {
  if (is_trivial()) return "e_" + q.vertex_name(base_);
  return q.word_str(arrows_);
}

CycleWord::CycleWord(const Quiver& q, std::vector<int> arrows)
    : arrows_(std::move(arrows)) {
  if (arrows_.empty()) throw InternalError("cycle: length must be >= 1");
  auto end = q.walk_target(q.source(arrows_.front()), arrows_);
  if (!end || *end != q.source(arrows_.front()))
    throw InternalError("cycle: word is not a closed walk");
}

CycleWord CycleWord::rotated(const Quiver& q, int k) const {
  int n = length();
  k = ((k % n) + n) % n;
  std::vector<int> w(arrows_.begin() + k, arrows_.end());
  w.insert(w.end(), arrows_.begin(), arrows_.begin() + k);
  return CycleWord(q, std::move(w));
}

CycleWord CycleWord::canonical(const Quiver& q) const {
  std::vector<int> best = arrows_;
  for (int k = 1; k < length(); ++k) {
    std::vector<int> w = rotated(q, k).arrows_;
    if (w < best) best = std::move(w);
  }
  return CycleWord(q, std::move(best));
}

bool CycleWord::is_basic(const Quiver& q) const {
  std::set<int> starts;
  for (int a : arrows_)
    if (!starts.insert(q.source(a)).second) return false;
  return true;
}

bool CycleWord::is_proper() const {
  int n = length();
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (int i = 0; i < n && periodic; ++i)
      periodic = arrows_[i] == arrows_[(i + d) % n];
    if (periodic) return false;
  }
  return true;
}

std::string CycleWord::str(const Quiver& q) const { return q.word_str(arrows_); }

CycleFlags classify_cycle(const Quiver& q, const CycleWord& w) {
  return {w.is_basic(q), w.is_proper()};
}

std::vector<CycleWord> cycle_orbits(const Quiver& q, int length) {
  if (length < 1) throw InternalError("cycle_orbits: length must be >= 1");
  std::set<std::vector<int>> canon;
  std::vector<int> word;
  std::function<void(int, int)> extend = [&](int start, int at) {
    if (static_cast<int>(word.size()) == length) {
      if (at == start)
        canon.insert(CycleWord(q, word).canonical(q).arrows());
      return;
    }
    for (int a : q.arrows_from(at)) {
      word.push_back(a);
      extend(start, q.target(a));
      word.pop_back();
    }
  };
  for (int v = 0; v < q.num_vertices(); ++v) extend(v, v);

  std::vector<CycleWord> reps;
  reps.reserve(canon.size());
  for (const std::vector<int>& w : canon) reps.emplace_back(q, w);
  return reps;
}

std::vector<CycleWord> proper_cycle_orbits(const Quiver& q, int length) {
  std::vector<CycleWord> reps = cycle_orbits(q, length);
  std::erase_if(reps, [](const CycleWord& w) { return !w.is_proper(); });
  return reps;
}

std::optional<CycleWord> shortest_cycle(const Quiver& q) {
  for (int len = 1; len <= q.num_vertices(); ++len) {
    std::vector<CycleWord> reps = cycle_orbits(q, len);
    if (!reps.empty()) return reps.front();
  }
  return std::nullopt;
}

namespace {

bool ends_with(const std::vector<int>& w, const std::vector<int>& suffix) {
  if (suffix.size() > w.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

bool is_proper_prefix_of_relation(
    const std::vector<int>& w, const std::vector<std::vector<int>>& relations) {
  for (const std::vector<int>& r : relations)
    if (w.size() < r.size() && std::equal(w.begin(), w.end(), r.begin()))
      return true;
  return false;
}

// Longest suffix of w that is a proper prefix of some relation.
std::vector<int> live_suffix(const std::vector<int>& w,
                             const std::vector<std::vector<int>>& relations,
                             std::size_t max_rel_len) {
  std::size_t cap = std::min(w.size(), max_rel_len == 0 ? 0 : max_rel_len - 1);
  for (std::size_t len = cap; len > 0; --len) {
    std::vector<int> cand(w.end() - static_cast<std::ptrdiff_t>(len), w.end());
    if (is_proper_prefix_of_relation(cand, relations)) return cand;
  }
  return {};
}

bool relation_is_suffix(const std::vector<int>& w,
                        const std::vector<std::vector<int>>& relations) {
  for (const std::vector<int>& r : relations)
    if (ends_with(w, r)) return true;
  return false;
}

}  // namespace

FinitenessCertificate finite_dimensional(
    const Quiver& q, const std::vector<std::vector<int>>& relations) {
  std::size_t max_rel = 0;
  for (const auto& r : relations) max_rel = std::max(max_rel, r.size());

  using State = std::pair<int, std::vector<int>>;  // (vertex, live suffix)
  std::map<State, int> ids;
  std::vector<State> states;
  auto state_id = [&](State s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(states.size());
    ids.emplace(s, id);
    states.push_back(std::move(s));
    return id;
  };

  // Iterative DFS with tricolor marking; stack remembers the arrow that
  // entered each state so a back edge yields the witness word.
  std::vector<int> color;  // 0 new, 1 on stack, 2 done
  struct Frame {
    int state;
    std::size_t next_arrow;
    int in_arrow;  // arrow that entered this state; -1 at roots
  };

  for (int v = 0; v < q.num_vertices(); ++v) {
    int root = state_id({v, {}});
    color.resize(states.size(), 0);
    if (color[root] != 0) continue;
    std::vector<Frame> stack{{root, 0, -1}};
    color[root] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const State st = states[f.state];
      const auto& outgoing = q.arrows_from(st.first);
      if (f.next_arrow >= outgoing.size()) {
        color[f.state] = 2;
        stack.pop_back();
        continue;
      }
      int a = outgoing[f.next_arrow++];
      std::vector<int> w = st.second;
      w.push_back(a);
      if (relation_is_suffix(w, relations)) continue;  // word dies here
      State nxt{q.target(a), live_suffix(w, relations, max_rel)};
      int nid = state_id(std::move(nxt));
      color.resize(states.size(), 0);
      if (color[nid] == 2) continue;
      if (color[nid] == 1) {
        // Found a pumpable cycle; read the word off the stack.
        std::vector<int> word;
        std::size_t from = 0;
        for (std::size_t i = 0; i < stack.size(); ++i)
          if (stack[i].state == nid) from = i;
        for (std::size_t i = from + 1; i < stack.size(); ++i)
          word.push_back(stack[i].in_arrow);
        word.push_back(a);
        return {false, CycleWord(q, std::move(word)).canonical(q)};
      }
      color[nid] = 1;
      stack.push_back({nid, 0, a});
    }
  }
  return {true, std::nullopt};
}

MonomialAlgebra MonomialAlgebra::with_relations(
    Quiver q, std::vector<std::vector<int>> relations, Field field) {
  for (const std::vector<int>& r : relations) {
    if (r.size() < 2)
      throw UsageError("relation '" + q.word_str(r) +
                       "' has length < 2; the ideal must sit inside paths of "
                       "length >= 2");
    if (!q.word_is_walk(r))
      throw UsageError("relation '" + q.word_str(r) + "' is not a path");
  }

  // Reduce: drop duplicates and any relation containing another as a factor.
  std::sort(relations.begin(), relations.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  relations.erase(std::unique(relations.begin(), relations.end()),
                  relations.end());
  std::vector<std::vector<int>> reduced;
  for (const std::vector<int>& r : relations) {
    bool redundant = false;
    for (const std::vector<int>& kept : reduced) {
      for (std::size_t i = 0; i + kept.size() <= r.size() && !redundant; ++i)
        redundant = std::equal(kept.begin(), kept.end(), r.begin() + i);
      if (redundant) break;
    }
    if (!redundant) reduced.push_back(r);
  }

  FinitenessCertificate cert = finite_dimensional(q, reduced);
  if (!cert.finite)
    throw ComputeError("algebra is infinite-dimensional: all powers of the "
                       "cycle '" +
                       cert.witness->str(q) + "' are nonzero");
  return MonomialAlgebra(std::move(q), std::move(reduced), 0, field);
}

MonomialAlgebra MonomialAlgebra::truncated(Quiver q, int n, Field field) {
  if (n < 2) throw UsageError("truncation index must be >= 2");
  return MonomialAlgebra(std::move(q), {}, n, field);
}

MonomialAlgebra::MonomialAlgebra(Quiver q,
                                 std::vector<std::vector<int>> relations,
                                 int trunc, Field field)
    : quiver_(std::move(q)),
      relations_(std::move(relations)),
      trunc_(trunc),
      field_(field) {
  trivial_index_.assign(quiver_.num_vertices(), -1);
  for (int v = 0; v < quiver_.num_vertices(); ++v) {
    trivial_index_[v] = static_cast<int>(basis_.size());
    basis_.push_back(Path::trivial(v));
  }
  // Extend length by length; a new word can only die through a relation
  // ending at its last letter, so a suffix test suffices.
  std::vector<Path> current = basis_;
  while (!current.empty()) {
    std::vector<Path> next;
    for (const Path& p : current) {
      if (trunc_ > 0 && p.length() + 1 >= trunc_) continue;
      for (int a : quiver_.arrows_from(p.target(quiver_))) {
        std::vector<int> w = p.arrows();
        w.push_back(a);
        if (trunc_ == 0 && relation_is_suffix(w, relations_)) continue;
        next.push_back(Path::word(quiver_, std::move(w)));
      }
    }
    for (const Path& p : next) {
      word_index_.emplace(p.arrows(), static_cast<int>(basis_.size()));
      basis_.push_back(p);
      max_len_ = p.length();
    }
    current = std::move(next);
  }
}

std::vector<Path> MonomialAlgebra::basis_of_length(int len) const {
  std::vector<Path> out;
  for (const Path& p : basis_)
    if (p.length() == len) out.push_back(p);
  return out;
}

int MonomialAlgebra::path_index(const Path& p) const {
  if (p.is_trivial()) {
    if (p.source() < 0 || p.source() >= quiver_.num_vertices()) return -1;
    return trivial_index_[p.source()];
  }
  auto it = word_index_.find(p.arrows());
  return it == word_index_.end() ? -1 : it->second;
}

bool MonomialAlgebra::word_is_zero(const std::vector<int>& word) const {
  if (trunc_ > 0) return static_cast<int>(word.size()) >= trunc_;
  for (const std::vector<int>& r : relations_) {
    if (r.size() > word.size()) continue;
    for (std::size_t i = 0; i + r.size() <= word.size(); ++i)
      if (std::equal(r.begin(), r.end(), word.begin() + i)) return true;
  }
  return false;
}

std::optional<Path> MonomialAlgebra::product(const Path& p,
                                             const Path& q) const {
  if (p.target(quiver_) != q.source()) return std::nullopt;
  if (p.is_trivial()) return q;
  if (q.is_trivial()) return p;
  std::vector<int> w = p.arrows();
  w.insert(w.end(), q.arrows().begin(), q.arrows().end());
  if (word_is_zero(w)) return std::nullopt;
  return Path::word(quiver_, std::move(w));
}

}  // namespace hhkit
