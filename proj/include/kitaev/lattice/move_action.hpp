#pragma once
// Action of the graph moves on extended spaces.  Every move gets a linear
// map from the space of the input graph to the space of the moved graph:
//
//   edge reversal     the leg involution applied on the edge's tensor leg;
//   edge permutation  the tensor legs permuted along the relabelling;
//   slide             the sum over a basis of paired edge and functional
//                     operators (through the inverse antipode when the
//                     slide runs against the vertex order), the identity
//                     when the slide does not apply.
//
// Each result also records where every cilium of the input graph went, so
// vertex operators and face coactions can be matched through the move.
// Words of moves compose these maps left to right.

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kitaev/graphs/moves.hpp"
#include "kitaev/lattice/extended_space.hpp"

namespace kitaev::lattice {

struct MuResult {
  SparseMap map;                // space of the input graph -> space of `space`
  ExtendedSpace space;          // over the moved graph
  std::vector<int> cilium_to;   // position in the old cilia list -> new position
};

namespace detail {

inline std::vector<int> cilium_correspondence(const graphs::KitaevGraph& from,
                                              const graphs::KitaevGraph& to,
                                              const graphs::Permutation& s) {
  std::vector<int> out;
  out.reserve(from.cilia.size());
  for (int c : from.cilia) {
    const int c2 = s(c);
    int pos = -1;
    for (size_t i = 0; i < to.cilia.size(); ++i)
      if (to.cilia[i] == c2) pos = static_cast<int>(i);
    check(pos >= 0, "the move loses track of a cilium");
    out.push_back(pos);
  }
  return out;
}

// The tensor-leg permutation induced by a half-edge relabelling: the leg of
// every edge moves to the position its relabelled edge occupies in the new
// edge order.
inline SparseMap relabel_map(const ExtendedSpace& from, const ExtendedSpace& to,
                             const graphs::Permutation& s) {
  const int k = leg_count(from);
  check(leg_count(to) == k, "the relabelling changed the number of edges");
  std::vector<int> to_leg(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l) {
    const auto [o, e] = from.data.edges[static_cast<size_t>(l)];
    int so = s(o), se = s(e);
    if (so > se) std::swap(so, se);
    auto it = to.leg_of.find(so);
    check(it != to.leg_of.end() &&
              to.data.edges[static_cast<size_t>(it->second)] == std::make_pair(so, se),
          "the relabelling does not carry edges to edges");
    to_leg[static_cast<size_t>(l)] = it->second;
  }
  SparseMap out = sp_zero(to.total_dim, from.total_dim);
  for (int j = 0; j < from.total_dim; ++j) {
    int image = 0;
    for (int l = 0; l < k; ++l)
      image += leg_digit(from, j, l) * to.stride[static_cast<size_t>(to_leg[static_cast<size_t>(l)])];
    out.col[static_cast<size_t>(j)].e.emplace_back(image, exact::s_one());
  }
  return out;
}

inline std::vector<int> identity_positions(size_t count) {
  std::vector<int> out(count);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace detail

// Reversal of edge i: the leg involution on that edge's leg; the identity
// if the edge is not in the graph.
inline MuResult mu_reversal(const ExtendedSpace& s, int i) {
  check(i >= 1, "edge index must be positive");
  const auto m = graphs::Move::reversal(i);
  MuResult r;
  r.space = make_extended_space(*s.bimodule, graphs::apply_move(s.graph, m));
  r.cilium_to = detail::cilium_correspondence(s.graph, r.space.graph,
                                              graphs::reordering_permutation(m));
  const auto it = s.leg_of.find(2 * i - 1);
  r.map = (it == s.leg_of.end()) ? sp_identity(s.total_dim)
                                 : leg_map(s, it->second, s.bimodule->psi);
  return r;
}

// Adjacent transposition of edges j and j+1: pure tensor-leg permutation.
inline MuResult mu_permutation(const ExtendedSpace& s, int j) {
  check(j >= 1, "edge index must be positive");
  const auto m = graphs::Move::permutation(j);
  const auto perm = graphs::reordering_permutation(m);
  MuResult r;
  r.space = make_extended_space(*s.bimodule, graphs::apply_move(s.graph, m));
  r.cilium_to = detail::cilium_correspondence(s.graph, r.space.graph, perm);
  r.map = detail::relabel_map(s, r.space, perm);
  return r;
}

// Slide of half-edge a over its neighbour b: the basis-summed pairing of a
// functional operator at a with an edge operator at b; the identity when
// neither slide scenario applies.
inline MuResult mu_slide(const ExtendedSpace& s, int a, int b) {
  const hopf::HopfAlgebra& H = algebra_of(s);
  const FieldSpec& F = H.field;
  const bool forward = graphs::slide_scenario1(s.graph, a, b);
  const bool backward = !forward && graphs::slide_scenario2(s.graph, a, b);
  MuResult r;
  r.space = make_extended_space(*s.bimodule, graphs::apply_slide(s.graph, a, b));
  if (!forward && !backward) {
    r.map = sp_identity(s.total_dim);
    r.cilium_to = detail::identity_positions(s.graph.cilia.size());
    return r;
  }
  const auto tau = graphs::Permutation::transposition(graphs::kappa(a), b);
  r.cilium_to = detail::cilium_correspondence(s.graph, r.space.graph, tau);
  SparseMap acc = sp_zero(s.total_dim, s.total_dim);
  for (int t = 0; t < H.dim; ++t) {
    Vec hv = hopf::basis_vec(H.dim, t);
    if (backward) hv = exact::apply(F, H.antipode_inv, hv);
    acc = sp_add(F, acc, sp_compose(F, l_map(s, b, hv), t_map(s, a, hopf::basis_vec(H.dim, t))));
  }
  r.map = std::move(acc);
  return r;
}

inline MuResult mu_move(const ExtendedSpace& s, const graphs::Move& m) {
  switch (m.kind) {
    case graphs::MoveKind::EdgeReversal:
      return mu_reversal(s, m.a);
    case graphs::MoveKind::EdgePermutation:
      return mu_permutation(s, m.a);
    case graphs::MoveKind::Slide:
      return mu_slide(s, m.a, m.b);
  }
  check(false, "unknown move kind");
  return {};
}

// Compose the maps of a word of moves, tracking the evolving graph and the
// cilium correspondence.  Rejects a generator that does not fit the graph
// it is applied to, naming the offending position.
inline MuResult mu_word(const ExtendedSpace& s, const graphs::MoveWord& w) {
  const FieldSpec& F = algebra_of(s).field;
  MuResult acc;
  acc.map = sp_identity(s.total_dim);
  acc.space = s;
  acc.cilium_to = detail::identity_positions(s.graph.cilia.size());
  int pos = 0;
  for (const auto& m : w) {
    ++pos;
    const std::string where = "move " + std::to_string(pos) + ": ";
    if (m.kind == graphs::MoveKind::Slide) {
      check(acc.space.leg_of.count(m.a) == 1,
            where + "half-edge " + std::to_string(m.a) + " is not in the graph");
      check(acc.space.leg_of.count(m.b) == 1,
            where + "half-edge " + std::to_string(m.b) + " is not in the graph");
    } else {
      check(m.a >= 1, where + "edge index must be positive");
    }
    MuResult step = mu_move(acc.space, m);
    acc.map = sp_compose(F, step.map, acc.map);
    for (auto& p : acc.cilium_to) p = step.cilium_to[static_cast<size_t>(p)];
    acc.space = std::move(step.space);
  }
  return acc;
}

// Check that a transported map carries the vertex operators and face
// coactions of the input space to those of the target space, cilium by
// cilium and basis element by basis element.
inline std::vector<std::string> verify_transport(const ExtendedSpace& s, const MuResult& r) {
  std::vector<std::string> bad;
  const hopf::HopfAlgebra& H = algebra_of(s);
  const FieldSpec& F = H.field;
  const int n = H.dim, D = s.total_dim;
  for (size_t ci = 0; ci < s.graph.cilia.size(); ++ci) {
    const int c = s.graph.cilia[ci];
    const int c2 = r.space.graph.cilia[static_cast<size_t>(r.cilium_to[ci])];
    const std::string label = "cilium " + std::to_string(c) + ": ";
    bool ok = true;
    for (int t = 0; t < n && ok; ++t) {
      const SparseMap lhs = sp_compose(F, r.map, vertex_map(s, c, hopf::basis_vec(n, t)));
      const SparseMap rhs = sp_compose(F, vertex_map(r.space, c2, hopf::basis_vec(n, t)), r.map);
      if (!(lhs == rhs)) {
        bad.push_back(label + "the vertex operator at basis " + std::to_string(t) +
                      " does not match through the move");
        ok = false;
      }
    }
    const SparseMap dl = face_coaction_map(s, c);
    SparseMap lhs = sp_zero(n * D, D);  // the move map applied on the space part
    for (int j = 0; j < D; ++j) {
      std::map<int, Scalar> acc;
      for (const auto& [row, sc] : dl.col[static_cast<size_t>(j)].e) {
        const int t = row / D, b = row % D;
        for (const auto& [b2, sc2] : r.map.col[static_cast<size_t>(b)].e) {
          const Scalar v = exact::mul(F, sc, sc2);
          auto it = acc.find(t * D + b2);
          if (it == acc.end())
            acc.emplace(t * D + b2, v);
          else
            it->second = exact::add(it->second, v);
        }
      }
      SparseVec frozen;
      for (auto& [row2, v] : acc)
        if (!exact::is_zero(v)) frozen.e.emplace_back(row2, std::move(v));
      lhs.col[static_cast<size_t>(j)] = std::move(frozen);
    }
    const SparseMap rhs = sp_compose(F, face_coaction_map(r.space, c2), r.map);
    if (!(lhs == rhs))
      bad.push_back(label + "the face coaction does not match through the move");
  }
  return bad;
}

inline std::vector<std::string> verify_move_intertwining(const ExtendedSpace& s,
                                                         const graphs::Move& m) {
  return verify_transport(s, mu_move(s, m));
}

inline std::vector<std::string> verify_word_intertwining(const ExtendedSpace& s,
                                                         const graphs::MoveWord& w) {
  return verify_transport(s, mu_word(s, w));
}

}  // namespace kitaev::lattice
