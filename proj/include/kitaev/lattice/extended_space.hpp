#pragma once
// Extended state space attached to a labelled graph: one tensor leg per
// edge, each leg carrying a copy of an involutive bimodule M over a Hopf
// algebra H.  Half-edge operators touch only the leg of their own edge --
// the left action at a target end, the right action by the antipode at a
// source end, and dually for the functional operators -- while vertex
// operators and face coactions chain them along the cycles read off the
// graph, distributing iterated coproduct legs over the cycle in order,
// the leg at the cilium first.
//
// Legs are ordered by edge order (ascending smaller half-edge); the first
// leg is the most significant digit of the mixed-radix basis index.  The
// smaller (odd) half-edge of every edge is its source.
//
// Operators are kept as column-sparse maps (SparseMap below) so that large
// spaces stay cheap; dense matrices are materialised on demand for small
// spaces only.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kitaev/common.hpp"
#include "kitaev/exact/matrix.hpp"
#include "kitaev/graphs/kitaev_graph.hpp"
#include "kitaev/hopf/hopf_algebra.hpp"
#include "kitaev/reps/bimodule.hpp"

namespace kitaev::lattice {

using exact::FieldSpec;
using exact::Matrix;
using exact::Scalar;
using exact::SparseVec;
using exact::Vec;

// ---------------------------------------------------------------- sparse maps

// Column-sparse linear map: column j is the image of the j-th basis vector.
// Columns are canonical (entries sorted by row, zeroes dropped), so equality
// is plain memberwise comparison.
struct SparseMap {
  int rows = 0;
  std::vector<SparseVec> col;
  bool operator==(const SparseMap&) const = default;
};

inline SparseMap sp_zero(int rows, int cols) {
  SparseMap m;
  m.rows = rows;
  m.col.resize(static_cast<size_t>(cols));
  return m;
}

inline SparseMap sp_identity(int n) {
  SparseMap m = sp_zero(n, n);
  for (int j = 0; j < n; ++j) m.col[static_cast<size_t>(j)].e.emplace_back(j, exact::s_one());
  return m;
}

// `after` composed with `first`: apply `first`, then `after`.
inline SparseMap sp_compose(const FieldSpec& F, const SparseMap& after,
                            const SparseMap& first) {
  check(static_cast<int>(after.col.size()) == first.rows,
        "sparse map shapes do not compose");
  SparseMap out = sp_zero(after.rows, static_cast<int>(first.col.size()));
  for (size_t j = 0; j < first.col.size(); ++j)
    for (const auto& [k, s] : first.col[j].e)
      out.col[j] = exact::sv_axpy(F, out.col[j], s, after.col[static_cast<size_t>(k)]);
  return out;
}

inline SparseMap sp_add(const FieldSpec& F, const SparseMap& a, const SparseMap& b) {
  check(a.rows == b.rows && a.col.size() == b.col.size(), "sparse map shape mismatch");
  SparseMap out = a;
  for (size_t j = 0; j < b.col.size(); ++j)
    out.col[j] = exact::sv_axpy(F, out.col[j], exact::s_one(), b.col[j]);
  return out;
}

inline SparseMap sp_scale(const FieldSpec& F, const Scalar& c, const SparseMap& a) {
  SparseMap out = sp_zero(a.rows, static_cast<int>(a.col.size()));
  for (size_t j = 0; j < a.col.size(); ++j) out.col[j] = exact::sv_scale(F, c, a.col[j]);
  return out;
}

inline Vec sp_apply(const FieldSpec& F, const SparseMap& m, const Vec& v) {
  check(v.size() == m.col.size(), "sparse map applied to a vector of the wrong size");
  Vec out(static_cast<size_t>(m.rows));
  for (size_t j = 0; j < v.size(); ++j) {
    if (exact::is_zero(v[j])) continue;
    for (const auto& [i, s] : m.col[j].e)
      out[static_cast<size_t>(i)] = exact::add(out[static_cast<size_t>(i)], exact::mul(F, s, v[j]));
  }
  return out;
}

// Dense materialisation is deliberately capped: beyond this many entries the
// sparse representation is the supported interface.
constexpr long long kDenseEntryLimit = 4'194'304;

inline Matrix sp_dense(const SparseMap& m) {
  const long long entries = static_cast<long long>(m.rows) * static_cast<long long>(m.col.size());
  check(entries <= kDenseEntryLimit,
        "dense materialisation of this operator would be too large; use the sparse maps");
  Matrix out(m.rows, static_cast<int>(m.col.size()));
  for (size_t j = 0; j < m.col.size(); ++j)
    for (const auto& [i, s] : m.col[j].e) out.at(i, static_cast<int>(j)) = s;
  return out;
}

// ------------------------------------------------------------ extended space

struct ExtendedSpace {
  const reps::InvolutiveHopfBimodule* bimodule = nullptr;
  graphs::KitaevGraph graph;
  graphs::GraphData data;
  int total_dim = 0;
  std::vector<int> stride;    // per leg; leg 0 is the most significant digit
  std::map<int, int> leg_of;  // half-edge -> leg position of its edge
};

inline const hopf::HopfAlgebra& algebra_of(const ExtendedSpace& s) {
  check(s.bimodule != nullptr && s.bimodule->over != nullptr,
        "the extended space has no underlying algebra");
  return *s.bimodule->over;
}

inline int leg_count(const ExtendedSpace& s) { return static_cast<int>(s.data.edges.size()); }

// The smaller (odd) half-edge of an edge is its source end.
inline bool at_source(int half_edge) { return half_edge % 2 == 1; }

inline ExtendedSpace make_extended_space(const reps::InvolutiveHopfBimodule& B,
                                         const graphs::KitaevGraph& g) {
  check(B.over != nullptr && B.dim >= 1, "the bimodule must be built over a Hopf algebra");
  ExtendedSpace s;
  s.bimodule = &B;
  s.graph = g;
  s.data = graphs::derive(g);
  const int k = static_cast<int>(s.data.edges.size());
  long long total = 1;
  for (int l = 0; l < k; ++l) {
    total *= B.dim;
    check(total <= 16'777'216, "the extended space is too large");
  }
  s.total_dim = static_cast<int>(total);
  s.stride.assign(static_cast<size_t>(k), 1);
  for (int l = k - 2; l >= 0; --l)
    s.stride[static_cast<size_t>(l)] = s.stride[static_cast<size_t>(l) + 1] * B.dim;
  for (int l = 0; l < k; ++l) {
    s.leg_of[s.data.edges[static_cast<size_t>(l)].first] = l;
    s.leg_of[s.data.edges[static_cast<size_t>(l)].second] = l;
  }
  return s;
}

inline int leg_digit(const ExtendedSpace& s, int index, int leg) {
  return (index / s.stride[static_cast<size_t>(leg)]) % s.bimodule->dim;
}

inline int cilium_position(const ExtendedSpace& s, int c) {
  for (size_t i = 0; i < s.graph.cilia.size(); ++i)
    if (s.graph.cilia[i] == c) return static_cast<int>(i);
  check(false, "half-edge " + std::to_string(c) + " is not a cilium of the graph");
  return -1;
}

// ------------------------------------------------------------ leg operators

// Lift a (dim M) x (dim M) matrix acting on one tensor leg to the whole
// space, identity on every other leg.
inline SparseMap leg_map(const ExtendedSpace& s, int leg, const Matrix& local) {
  const int d = s.bimodule->dim;
  check(local.rows == d && local.cols == d, "leg operator must be square of the leg dimension");
  const int stride = s.stride[static_cast<size_t>(leg)];
  SparseMap out = sp_zero(s.total_dim, s.total_dim);
  for (int j = 0; j < s.total_dim; ++j) {
    const int m = leg_digit(s, j, leg);
    const int base = j - m * stride;
    auto& column = out.col[static_cast<size_t>(j)].e;
    for (int r = 0; r < d; ++r) {
      const Scalar& c = local.at(r, m);
      if (!exact::is_zero(c)) column.emplace_back(base + r * stride, c);
    }
  }
  return out;
}

// One-leg matrix of the edge operator attached to half-edge h acting by the
// element a: the left module action at a target end, the right action by
// the antipode of a at a source end.
inline Matrix l_leg_matrix(const ExtendedSpace& s, int h, const Vec& a) {
  const reps::InvolutiveHopfBimodule& B = *s.bimodule;
  const hopf::HopfAlgebra& H = *B.over;
  check(static_cast<int>(a.size()) == H.dim, "acting element has the wrong dimension");
  if (at_source(h)) {
    const Vec sa = exact::apply(H.field, H.antipode, a);
    return reps::detail::elem_action(H.field, B.right_action, sa);
  }
  return reps::detail::elem_action(H.field, B.left_action, a);
}

// One-leg matrix of the functional operator attached to half-edge h: a
// source end pairs alpha with the left coaction leg of the module, a target
// end pairs it with the antipode of the right coaction leg.
inline Matrix t_leg_matrix(const ExtendedSpace& s, int h, const Vec& alpha) {
  const reps::InvolutiveHopfBimodule& B = *s.bimodule;
  const hopf::HopfAlgebra& H = *B.over;
  const FieldSpec& F = H.field;
  const int n = H.dim, d = B.dim;
  check(static_cast<int>(alpha.size()) == n, "functional has the wrong dimension");
  Matrix out(d, d);
  if (at_source(h)) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Scalar acc = exact::s_zero();
        for (int u = 0; u < n; ++u) {
          if (exact::is_zero(alpha[static_cast<size_t>(u)])) continue;
          const Scalar& cc = B.left_coaction.at(u * d + b, a);
          if (exact::is_zero(cc)) continue;
          acc = exact::add(acc, exact::mul(F, alpha[static_cast<size_t>(u)], cc));
        }
        out.at(b, a) = std::move(acc);
      }
    return out;
  }
  // alpha evaluated on the antipode of the right coaction leg
  Vec beta(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Scalar acc = exact::s_zero();
    for (int u = 0; u < n; ++u) {
      if (exact::is_zero(alpha[static_cast<size_t>(u)])) continue;
      const Scalar& sv = H.antipode.at(u, i);
      if (exact::is_zero(sv)) continue;
      acc = exact::add(acc, exact::mul(F, alpha[static_cast<size_t>(u)], sv));
    }
    beta[static_cast<size_t>(i)] = std::move(acc);
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Scalar acc = exact::s_zero();
      for (int i = 0; i < n; ++i) {
        if (exact::is_zero(beta[static_cast<size_t>(i)])) continue;
        const Scalar& cc = B.right_coaction.at(b * n + i, a);
        if (exact::is_zero(cc)) continue;
        acc = exact::add(acc, exact::mul(F, beta[static_cast<size_t>(i)], cc));
      }
      out.at(b, a) = std::move(acc);
    }
  return out;
}

inline int leg_of_half_edge(const ExtendedSpace& s, int h) {
  auto it = s.leg_of.find(h);
  check(it != s.leg_of.end(),
        "half-edge " + std::to_string(h) + " is not in the graph");
  return it->second;
}

// Edge operator of element a at half-edge h on the whole space.
inline SparseMap l_map(const ExtendedSpace& s, int h, const Vec& a) {
  return leg_map(s, leg_of_half_edge(s, h), l_leg_matrix(s, h, a));
}

// Functional operator of alpha (coordinates in the dual basis) at h.
inline SparseMap t_map(const ExtendedSpace& s, int h, const Vec& alpha) {
  return leg_map(s, leg_of_half_edge(s, h), t_leg_matrix(s, h, alpha));
}

inline Matrix l_operator(const ExtendedSpace& s, int h, const Vec& a) {
  return sp_dense(l_map(s, h, a));
}

inline Matrix t_operator(const ExtendedSpace& s, int h, const Vec& alpha) {
  return sp_dense(t_map(s, h, alpha));
}

// ------------------------------------------------- coproduct chain expansion

namespace detail {

// Terms of the (count-1)-fold comultiplication of a: slot basis indices
// mapped to the coefficient of that tensor summand.  Slot r feeds the r-th
// operator of a chain.
inline std::map<std::vector<int>, Scalar> comul_chain(const hopf::HopfAlgebra& H,
                                                      const Vec& a, int count) {
  const FieldSpec& F = H.field;
  check(count >= 1, "chain length must be positive");
  std::map<std::vector<int>, Scalar> terms;
  for (int t = 0; t < H.dim; ++t)
    if (!exact::is_zero(a[static_cast<size_t>(t)])) terms[{t}] = a[static_cast<size_t>(t)];
  for (int step = 1; step < count; ++step) {
    std::map<std::vector<int>, Scalar> next;
    for (const auto& [slots, c] : terms) {
      const Matrix& D = H.comul[static_cast<size_t>(slots.back())];
      for (int j = 0; j < H.dim; ++j)
        for (int k = 0; k < H.dim; ++k) {
          const Scalar& w = D.at(j, k);
          if (exact::is_zero(w)) continue;
          std::vector<int> ns = slots;
          ns.back() = j;
          ns.push_back(k);
          Scalar v = exact::mul(F, c, w);
          auto it = next.find(ns);
          if (it == next.end())
            next.emplace(std::move(ns), std::move(v));
          else
            it->second = exact::add(it->second, v);
        }
    }
    terms = std::move(next);
  }
  return terms;
}

// The same expansion on the dual side, for the dual basis functional at
// index t: slot tuples mapped to the coefficient of the basis element t in
// their ordered product.
inline std::map<std::vector<int>, Scalar> dual_comul_chain(const hopf::HopfAlgebra& H,
                                                           int t, int count) {
  const FieldSpec& F = H.field;
  check(count >= 1, "chain length must be positive");
  std::map<std::vector<int>, Scalar> terms;
  terms[{t}] = exact::s_one();
  for (int step = 1; step < count; ++step) {
    std::map<std::vector<int>, Scalar> next;
    for (const auto& [slots, c] : terms) {
      const int last = slots.back();
      for (int p = 0; p < H.dim; ++p)
        for (int q = 0; q < H.dim; ++q) {
          const Scalar& w = H.mul[static_cast<size_t>(p)][static_cast<size_t>(q)][static_cast<size_t>(last)];
          if (exact::is_zero(w)) continue;
          std::vector<int> ns = slots;
          ns.back() = p;
          ns.push_back(q);
          Scalar v = exact::mul(F, c, w);
          auto it = next.find(ns);
          if (it == next.end())
            next.emplace(std::move(ns), std::move(v));
          else
            it->second = exact::add(it->second, v);
        }
    }
    terms = std::move(next);
  }
  return terms;
}

// Assemble a chain of one-leg operators along a cycle of half-edges: factor
// r of each term acts at halves[r], the factor of the lowest slot applied
// first; factors landing on the same leg are multiplied in application
// order.  `dual` selects the functional rule over the action rule.
inline SparseMap chain_map(const ExtendedSpace& s, const std::vector<int>& halves,
                           const std::map<std::vector<int>, Scalar>& terms, bool dual) {
  const hopf::HopfAlgebra& H = algebra_of(s);
  const FieldSpec& F = H.field;
  SparseMap out = sp_zero(s.total_dim, s.total_dim);
  for (const auto& [slots, coeff] : terms) {
    if (exact::is_zero(coeff)) continue;
    std::map<int, Matrix> per_leg;
    for (size_t r = 0; r < halves.size(); ++r) {
      const Vec arg = hopf::basis_vec(H.dim, slots[r]);
      Matrix m = dual ? t_leg_matrix(s, halves[r], arg) : l_leg_matrix(s, halves[r], arg);
      const int leg = leg_of_half_edge(s, halves[r]);
      auto it = per_leg.find(leg);
      if (it == per_leg.end())
        per_leg.emplace(leg, std::move(m));
      else
        it->second = exact::m_mul(F, m, it->second);
    }
    check(!per_leg.empty(), "operator chain along an empty cycle");
    per_leg.begin()->second = exact::m_scale(F, coeff, per_leg.begin()->second);
    SparseMap cur;
    bool first = true;
    for (const auto& [leg, m] : per_leg) {
      SparseMap lifted = leg_map(s, leg, m);
      cur = first ? std::move(lifted) : sp_compose(F, lifted, cur);
      first = false;
    }
    out = sp_add(F, out, cur);
  }
  return out;
}

}  // namespace detail

// --------------------------------------------- vertex and face constructions

// Vertex operator of element a at the cilium c: the iterated coproduct legs
// of a are fed to the edge operators along the vertex cycle, the leg at the
// cilium first.
inline SparseMap vertex_map(const ExtendedSpace& s, int c, const Vec& a) {
  const hopf::HopfAlgebra& H = algebra_of(s);
  check(static_cast<int>(a.size()) == H.dim, "acting element has the wrong dimension");
  const auto& v = s.data.vertices[static_cast<size_t>(cilium_position(s, c))];
  return detail::chain_map(s, v, detail::comul_chain(H, a, static_cast<int>(v.size())), false);
}

inline Matrix vertex_action(const ExtendedSpace& s, int c, const Vec& a) {
  return sp_dense(vertex_map(s, c, a));
}

// Face operator of the dual basis functional at index t, at the cilium c:
// the iterated dual coproduct legs are fed to the functional operators
// along the face cycle traversed backwards, so the first leg pairs with the
// half-edge at which the cycle ends.  This is the orientation for which the
// face operators and the vertex operators of the same cilium satisfy the
// Yetter-Drinfeld law.
inline SparseMap face_functional_map(const ExtendedSpace& s, int c, int t) {
  const hopf::HopfAlgebra& H = algebra_of(s);
  check(t >= 0 && t < H.dim, "dual basis index out of range");
  std::vector<int> f = s.data.faces[static_cast<size_t>(cilium_position(s, c))];
  std::reverse(f.begin(), f.end());
  return detail::chain_map(s, f, detail::dual_comul_chain(H, t, static_cast<int>(f.size())), true);
}

// Face coaction at the cilium c as a map into (algebra) x (space): row
// (t * total_dim + b) carries the coefficient of basis element t tensor
// basis vector b.  Reconstructed from the face operators over the dual
// basis.
inline SparseMap face_coaction_map(const ExtendedSpace& s, int c) {
  const hopf::HopfAlgebra& H = algebra_of(s);
  SparseMap out = sp_zero(H.dim * s.total_dim, s.total_dim);
  for (int t = 0; t < H.dim; ++t) {
    const SparseMap bt = face_functional_map(s, c, t);
    for (size_t j = 0; j < bt.col.size(); ++j)
      for (const auto& [r, sc] : bt.col[j].e)
        out.col[j].e.emplace_back(t * s.total_dim + r, sc);
  }
  return out;
}

inline Matrix face_coaction(const ExtendedSpace& s, int c) {
  return sp_dense(face_coaction_map(s, c));
}

}  // namespace kitaev::lattice
