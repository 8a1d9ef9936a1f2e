#include "hhkit/resolution.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "hhkit/errors.hpp"

namespace hhkit {

namespace {

DenseVec apply(const SparseMatrix& m, const DenseVec& x, const Field& k) {
  DenseVec y(m.rows(), k.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) y[i] += v * x[c];
  return y;
}

// Incremental row echelon over the field; add() reports independence.
struct Echelon {
  const Field& k;
  std::vector<DenseVec> rows;          // reduced, one pivot each
  std::vector<std::size_t> pivots;

  explicit Echelon(const Field& field) : k(field) {}

  bool add(DenseVec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Scalar& c = v[pivots[r]];
      if (c.is_zero()) continue;
      Scalar f = c;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    Scalar inv = v[p].inverse();
    for (Scalar& x : v) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

long RightModule::dim() const {
  return std::accumulate(dim_v.begin(), dim_v.end(), 0L);
}

RightModule zero_module(const MonomialAlgebra& a) {
  RightModule m;
  m.dim_v.assign(a.quiver().num_vertices(), 0);
  for (int arr = 0; arr < a.quiver().num_arrows(); ++arr)
    m.action.push_back(SparseMatrix::zero(0, 0));
  return m;
}

RightModule simple_module(const MonomialAlgebra& a, int vertex) {
  RightModule m = zero_module(a);
  m.dim_v[vertex] = 1;
  const Quiver& q = a.quiver();
  for (int arr = 0; arr < q.num_arrows(); ++arr)
    m.action[arr] = SparseMatrix::zero(
        static_cast<std::size_t>(m.dim_v[q.target(arr)]),
        static_cast<std::size_t>(m.dim_v[q.source(arr)]));
  return m;
}

RightModule projective_module(const MonomialAlgebra& a, int vertex) {
  const Quiver& q = a.quiver();
  // Basis of (e_v A)_u: nonzero paths from `vertex` to u, in basis order.
  std::vector<std::vector<int>> block(q.num_vertices());
  std::map<int, std::pair<int, int>> place;  // basis index -> (u, position)
  for (int i = 0; i < a.dim(); ++i) {
    const Path& p = a.basis()[i];
    if (p.source() != vertex) continue;
    int u = p.target(q);
    place[i] = {u, static_cast<int>(block[u].size())};
    block[u].push_back(i);
  }

  RightModule m;
  m.dim_v.assign(q.num_vertices(), 0);
  for (int u = 0; u < q.num_vertices(); ++u)
    m.dim_v[u] = static_cast<long>(block[u].size());
  for (int arr = 0; arr < q.num_arrows(); ++arr) {
    int u = q.source(arr), w = q.target(arr);
    MatrixBuilder b(static_cast<std::size_t>(m.dim_v[w]),
                    static_cast<std::size_t>(m.dim_v[u]));
    for (int col = 0; col < m.dim_v[u]; ++col) {
      const Path& p = a.basis()[block[u][static_cast<std::size_t>(col)]];
      std::vector<int> word = p.arrows();
      word.push_back(arr);
      if (a.word_is_zero(word)) continue;
      Path pa = Path::word(q, std::move(word));
      auto it = place.find(a.path_index(pa));
      if (it == place.end())
        throw InternalError("projective: product path missing from basis");
      b.add(static_cast<std::size_t>(it->second.second),
            static_cast<std::size_t>(col), a.field().one());
    }
    m.action.push_back(b.build());
  }
  return m;
}

void validate_module(const MonomialAlgebra& a, const RightModule& m) {
  const Quiver& q = a.quiver();
  if (static_cast<int>(m.dim_v.size()) != q.num_vertices() ||
      static_cast<int>(m.action.size()) != q.num_arrows())
    throw InternalError("module: shape mismatch");
  for (int arr = 0; arr < q.num_arrows(); ++arr) {
    if (m.action[arr].rows() !=
            static_cast<std::size_t>(m.dim_v[q.target(arr)]) ||
        m.action[arr].cols() !=
            static_cast<std::size_t>(m.dim_v[q.source(arr)]))
      throw InternalError("module: action shape mismatch at arrow " +
                          q.arrow(arr).name);
  }

  auto word_action = [&](const std::vector<int>& word) {
    SparseMatrix acc = m.action[static_cast<std::size_t>(word.front())];
    for (std::size_t i = 1; i < word.size(); ++i)
      acc = m.action[static_cast<std::size_t>(word[i])].times(acc);
    return acc;
  };

  if (a.is_truncated()) {
    // All walks of length n must act as zero.
    std::function<void(std::vector<int>&)> walk = [&](std::vector<int>& w) {
      if (static_cast<int>(w.size()) == a.truncation()) {
        if (!word_action(w).is_zero())
          throw InternalError("module: truncation acts nontrivially via " +
                              q.word_str(w));
        return;
      }
      int at = q.target(w.back());
      for (int arr : q.arrows_from(at)) {
        w.push_back(arr);
        walk(w);
        w.pop_back();
      }
    };
    for (int arr = 0; arr < q.num_arrows(); ++arr) {
      std::vector<int> w{arr};
      walk(w);
    }
  } else {
    for (const std::vector<int>& r : a.relations())
      if (!word_action(r).is_zero())
        throw InternalError("module: relation " + q.word_str(r) +
                            " acts nontrivially");
  }
}

ProjectiveCover projective_cover(const MonomialAlgebra& a,
                                 const RightModule& m) {
  const Quiver& q = a.quiver();
  const Field& k = a.field();

  // Lifts of a basis of top(M) = M / M r, vertex by vertex: the radical part
  // of M_u is spanned by the images of the incoming arrow actions.
  std::vector<std::vector<DenseVec>> lifts(q.num_vertices());
  for (int u = 0; u < q.num_vertices(); ++u) {
    Echelon ech(k);
    for (int arr = 0; arr < q.num_arrows(); ++arr) {
      if (q.target(arr) != u) continue;
      for (std::size_t c = 0; c < m.action[arr].cols(); ++c) {
        DenseVec col(static_cast<std::size_t>(m.dim_v[u]), k.zero());
        for (std::size_t r = 0; r < m.action[arr].rows(); ++r) {
          Scalar v = m.action[arr].at(r, c);
          if (!v.is_zero()) col[r] = v;
        }
        ech.add(std::move(col));
      }
    }
    for (long i = 0; i < m.dim_v[u]; ++i) {
      DenseVec e(static_cast<std::size_t>(m.dim_v[u]), k.zero());
      e[static_cast<std::size_t>(i)] = k.one();
      if (ech.add(e)) {
        DenseVec lift(static_cast<std::size_t>(m.dim_v[u]), k.zero());
        lift[static_cast<std::size_t>(i)] = k.one();
        lifts[u].push_back(std::move(lift));
      }
    }
  }

  ProjectiveCover out;
  out.multiplicity.assign(q.num_vertices(), 0);
  for (int u = 0; u < q.num_vertices(); ++u)
    out.multiplicity[u] = static_cast<long>(lifts[u].size());
  std::vector<RightModule> proj_of(q.num_vertices(), zero_module(a));
  for (int u = 0; u < q.num_vertices(); ++u)
    if (!lifts[u].empty()) proj_of[u] = projective_module(a, u);

  // Assemble the direct sum and remember each summand's block offsets.
  out.cover = zero_module(a);
  struct Summand {
    int vertex;
    DenseVec lift;
    std::vector<long> offset;  // block start per vertex
  };
  std::vector<Summand> summands;
  for (int u = 0; u < q.num_vertices(); ++u)
    for (const DenseVec& lift : lifts[u]) {
      Summand s{u, lift, std::vector<long>(q.num_vertices(), 0)};
      for (int w = 0; w < q.num_vertices(); ++w) {
        s.offset[w] = out.cover.dim_v[w];
        out.cover.dim_v[w] += proj_of[u].dim_v[w];
      }
      out.summand_vertex.push_back(u);
      summands.push_back(std::move(s));
    }
  out.cover.action.clear();
  for (int arr = 0; arr < q.num_arrows(); ++arr) {
    MatrixBuilder b(
        static_cast<std::size_t>(out.cover.dim_v[q.target(arr)]),
        static_cast<std::size_t>(out.cover.dim_v[q.source(arr)]));
    for (const Summand& s : summands)
      b.add_block(static_cast<std::size_t>(s.offset[q.target(arr)]),
                  static_cast<std::size_t>(s.offset[q.source(arr)]),
                  proj_of[s.vertex].action[arr]);
    out.cover.action.push_back(b.build());
  }

  // The surjection sends the generator of each summand to its lift and each
  // path basis vector to the lift pushed along that path.
  std::vector<MatrixBuilder> phi;
  for (int w = 0; w < q.num_vertices(); ++w)
    phi.emplace_back(static_cast<std::size_t>(m.dim_v[w]),
                     static_cast<std::size_t>(out.cover.dim_v[w]));
  for (const Summand& s : summands) {
    // Walk the basis paths of P_{s.vertex} in order, extending vectors along
    // parent paths (basis order lists prefixes first).
    std::map<int, DenseVec> vec;  // algebra basis index -> value in M
    std::vector<long> next(q.num_vertices(), 0);
    for (int i = 0; i < a.dim(); ++i) {
      const Path& p = a.basis()[i];
      if (p.source() != s.vertex) continue;
      int w = p.target(q);
      DenseVec value;
      if (p.is_trivial()) {
        value = s.lift;
      } else {
        std::vector<int> parent_word(p.arrows().begin(), p.arrows().end() - 1);
        int parent = parent_word.empty()
                         ? a.path_index(Path::trivial(s.vertex))
                         : a.path_index(Path::word(q, parent_word));
        value = apply(m.action[static_cast<std::size_t>(p.arrows().back())],
                      vec.at(parent), k);
      }
      long col = s.offset[w] + next[w]++;
      for (std::size_t r = 0; r < value.size(); ++r)
        phi[w].add(r, static_cast<std::size_t>(col), value[r]);
      vec[i] = std::move(value);
    }
  }
  for (int w = 0; w < q.num_vertices(); ++w) {
    out.surjection.push_back(phi[static_cast<std::size_t>(w)].build());
    if (out.surjection.back().rank() != m.dim_v[w])
      throw InternalError("cover: surjection is not onto at vertex " +
                          q.vertex_name(w));
  }
  return out;
}

RightModule syzygy(const MonomialAlgebra& a, const RightModule& m) {
  const Quiver& q = a.quiver();
  const Field& k = a.field();
  ProjectiveCover pc = projective_cover(a, m);

  std::vector<std::vector<DenseVec>> kernels;
  for (int w = 0; w < q.num_vertices(); ++w)
    kernels.push_back(kernel_basis(pc.surjection[w], k));

  RightModule out;
  out.dim_v.assign(q.num_vertices(), 0);
  std::vector<SparseMatrix> kernel_mats;
  for (int w = 0; w < q.num_vertices(); ++w) {
    out.dim_v[w] = static_cast<long>(kernels[w].size());
    MatrixBuilder b(static_cast<std::size_t>(pc.cover.dim_v[w]),
                    kernels[w].size());
    for (std::size_t c = 0; c < kernels[w].size(); ++c)
      for (std::size_t r = 0; r < kernels[w][c].size(); ++r)
        b.add(r, c, kernels[w][c][r]);
    kernel_mats.push_back(b.build());
  }

  for (int arr = 0; arr < q.num_arrows(); ++arr) {
    int u = q.source(arr), w = q.target(arr);
    // Image of each kernel basis vector lies in the kernel again; express it
    // in the target kernel basis.
    std::vector<DenseVec> images;
    for (const DenseVec& kv : kernels[u])
      images.push_back(apply(pc.cover.action[arr], kv, k));
    std::vector<DenseVec> coords =
        images.empty() ? std::vector<DenseVec>{}
                       : solve_columns(kernel_mats[w], images, k);
    MatrixBuilder b(static_cast<std::size_t>(out.dim_v[w]),
                    static_cast<std::size_t>(out.dim_v[u]));
    for (std::size_t c = 0; c < coords.size(); ++c)
      for (std::size_t r = 0; r < coords[c].size(); ++r)
        b.add(r, c, coords[c][r]);
    out.action.push_back(b.build());
  }
  return out;
}

std::string DimProbe::str() const {
  return exact ? "= " + std::to_string(value) : "> " + std::to_string(value);
}

DimProbe projdim_probe(const MonomialAlgebra& a, const RightModule& m,
                       int max_steps) {
  if (max_steps < 0) throw UsageError("projdim_probe: negative step budget");
  validate_module(a, m);
  DimProbe out;
  if (m.is_zero()) {
    out.exact = true;
    out.value = 0;
    return out;
  }
  RightModule cur = m;
  for (int step = 0; step <= max_steps; ++step) {
    ProjectiveCover pc = projective_cover(a, cur);
    RightModule next = syzygy(a, cur);
    ResolutionStep rec{pc.multiplicity, pc.cover.dim(), next.dim()};
    if (rec.cover_dim != cur.dim() + rec.syzygy_dim)
      throw InternalError("resolution: dimension bookkeeping failed");
    out.steps.push_back(std::move(rec));
    if (next.is_zero()) {
      out.exact = true;
      out.value = step;
      return out;
    }
    cur = std::move(next);
  }
  out.exact = false;
  out.value = max_steps;
  return out;
}

std::string GlobalDimProbe::str() const {
  return exact ? "= " + std::to_string(value) : "> " + std::to_string(value);
}

GlobalDimProbe gldim_probe(const MonomialAlgebra& a, int max_steps) {
  GlobalDimProbe out;
  out.exact = true;
  for (int v = 0; v < a.quiver().num_vertices(); ++v) {
    DimProbe p = projdim_probe(a, simple_module(a, v), max_steps);
    out.exact = out.exact && p.exact;
    out.value = std::max(out.value, p.value);
    out.per_simple.push_back(std::move(p));
  }
  if (!out.exact) out.value = max_steps;
  return out;
}

}  // namespace hhkit
