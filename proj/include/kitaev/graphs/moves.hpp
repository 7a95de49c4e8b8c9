#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "kitaev_graph.hpp"

namespace kitaev::graphs {

// ---------------------------------------------------------------------- moves
//
// The generators acting on graph presentations:
//   EdgeReversal(i)      swap the two half-edges of edge i, (2i-1 2i)
//   EdgePermutation(i)   swap edges i and i+1, (2i-1 2i+1)(2i 2i+2)
//   Slide(a, b)          slide edge end b along the vertex of a (no effect
//                        unless one of the two slide scenarios applies)

enum class MoveKind { EdgeReversal, EdgePermutation, Slide };

struct Move {
  MoveKind kind = MoveKind::Slide;
  int a = 0, b = 0;  // reorderings use `a` as the edge index

  static Move reversal(int e) {
    check(e >= 1, "edge index must be positive");
    return {MoveKind::EdgeReversal, e, 0};
  }
  static Move permutation(int e) {
    check(e >= 1, "edge index must be positive");
    return {MoveKind::EdgePermutation, e, 0};
  }
  static Move slide(int a, int b) {
    check(a >= 1 && b >= 1, "half-edges must be positive");
    return {MoveKind::Slide, a, b};
  }

  bool operator==(const Move&) const = default;
};

using MoveWord = std::vector<Move>;

inline Permutation reordering_permutation(const Move& m) {
  switch (m.kind) {
    case MoveKind::EdgeReversal:
      return Permutation::transposition(2 * m.a - 1, 2 * m.a);
    case MoveKind::EdgePermutation:
      return Permutation::from_cycles({{2 * m.a - 1, 2 * m.a + 1}, {2 * m.a, 2 * m.a + 2}});
    default:
      check(false, "a slide is not a reordering");
  }
  return {};
}

inline bool commutes_with_kappa(const Permutation& s) {
  for (int x : s.support()) {
    if (s(kappa(x)) != kappa(s(x))) return false;
    int y = kappa(x);
    if (s(kappa(y)) != kappa(s(y))) return false;
  }
  return true;
}

// Conjugate the presentation by a relabeling that respects the edge pairing.
inline KitaevGraph apply_reordering(const KitaevGraph& g, const Permutation& s) {
  check(commutes_with_kappa(s), "reordering must commute with the pairing involution");
  KitaevGraph r;
  r.rho = s.after(g.rho).after(s.inverted());
  for (int c : g.cilia) r.cilia.push_back(s(c));
  std::sort(r.cilia.begin(), r.cilia.end());
  r.pt = s(g.pt);
  check_valid(r);
  return r;
}

// --------------------------------------------------------------------- slides
//
// Scenario 1: b directly follows a around a's vertex and is not a cilium;
// the edge end b hops to the vertex paired with a, in front of kappa(a).
// Scenario 2: the mirrored variant, recognised by rho(b) = kappa(a); b hops
// to just after a.  Both act as a 3-cycle composed onto rho plus the cilium
// swap (kappa(a) b), and each undoes the other, so every slide is an
// involution.

inline bool slide_scenario1(const KitaevGraph& g, int a, int b) {
  if (g.rho(a) != b) return false;
  if (std::binary_search(g.cilia.begin(), g.cilia.end(), b)) return false;
  int x = g.rho(b), y = kappa(a);
  return b != x && b != y && x != y;
}

inline bool slide_scenario2(const KitaevGraph& g, int a, int b) {
  int ka = kappa(a);
  if (g.rho(b) != ka) return false;
  if (std::binary_search(g.cilia.begin(), g.cilia.end(), ka)) return false;
  int x = g.rho(a);
  return b != ka && b != x && ka != x;
}

inline KitaevGraph apply_slide(const KitaevGraph& g, int a, int b) {
  auto gamma = half_edges(g);
  if (!std::binary_search(gamma.begin(), gamma.end(), a) ||
      !std::binary_search(gamma.begin(), gamma.end(), b))
    return g;
  Permutation s3;
  if (slide_scenario1(g, a, b))
    s3 = Permutation::from_cycles({{b, g.rho(b), kappa(a)}});
  else if (slide_scenario2(g, a, b))
    s3 = Permutation::from_cycles({{b, kappa(a), g.rho(a)}});
  else
    return g;
  Permutation tau = Permutation::transposition(kappa(a), b);
  KitaevGraph r;
  r.rho = s3.after(g.rho);
  for (int c : g.cilia) r.cilia.push_back(tau(c));
  std::sort(r.cilia.begin(), r.cilia.end());
  r.pt = tau(g.pt);
  check_valid(r);
  return r;
}

inline KitaevGraph apply_move(const KitaevGraph& g, const Move& m) {
  if (m.kind == MoveKind::Slide) return apply_slide(g, m.a, m.b);
  return apply_reordering(g, reordering_permutation(m));
}

inline KitaevGraph apply_word(const KitaevGraph& g, const MoveWord& w) {
  KitaevGraph r = g;
  for (const Move& m : w) r = apply_move(r, m);
  return r;
}

// Every generator is an involution, so inverting a word just reverses it.
inline MoveWord inverse_word(MoveWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline std::vector<std::pair<int, int>> legal_slides(const KitaevGraph& g) {
  auto gamma = half_edges(g);
  std::vector<std::pair<int, int>> out;
  for (int a : gamma)
    for (int b : gamma)
      if (slide_scenario1(g, a, b) || slide_scenario2(g, a, b)) out.emplace_back(a, b);
  return out;
}

// Deterministic pseudo-random walk through acting moves.  Stops early only if
// the graph admits no slide at all (tiny rigid graphs).
inline MoveWord scramble(const KitaevGraph& g, int count, std::uint64_t seed,
                         bool with_reorderings = false) {
  std::mt19937_64 rng(seed);
  KitaevGraph h = g;
  MoveWord w;
  for (int i = 0; i < count; ++i) {
    Move m;
    if (with_reorderings && rng() % 3 == 0) {
      auto gamma = half_edges(h);
      int slots = (gamma.back() + 1) / 2;
      int e = static_cast<int>(rng() % static_cast<std::uint64_t>(slots + 1)) + 1;
      m = (rng() % 2 == 0) ? Move::reversal(e) : Move::permutation(e);
    } else {
      auto ls = legal_slides(h);
      if (ls.empty()) break;
      auto [a, b] = ls[rng() % ls.size()];
      m = Move::slide(a, b);
    }
    h = apply_move(h, m);
    w.push_back(m);
  }
  return w;
}

}  // namespace kitaev::graphs
