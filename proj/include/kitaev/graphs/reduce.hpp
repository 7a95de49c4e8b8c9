#pragma once

#include <algorithm>
#include <map>

#include "moves.hpp"

namespace kitaev::graphs {

struct ReduceResult {
  KitaevGraph standard;
  MoveWord word;  // replaying this on the input yields `standard` exactly
};

namespace detail {

// Rewrites a graph into the reference form of its surface.  All choices are
// smallest-first so the move word is deterministic.  Outline:
//
//   strip    empty every non-distinguished vertex into the distinguished one
//            until only single half-edges remain (the total excess valence of
//            those vertices drops with every slide);
//   place    shorten the face of each loose cilium to [x, y, kappa(x)] - which
//            forces the bracket [y, kappa(x), kappa(y)] inside the
//            distinguished vertex - and push the brackets to the end of the
//            vertex; the distinguished cilium is walked aside whenever it
//            would block a slide or end up inside a bracket (for genus 0 the
//            last bracket is instead formed right at the cilium);
//   blocks   consolidate the remaining half-edges into interleaved blocks
//            [a, b, kappa(a), kappa(b)] from the cilium onward, hopping the
//            debris between kappa(a) and kappa(b) over the block in threes;
//   relabel  read off the relabeling onto the reference numbering and emit it
//            as edge reversals plus adjacent edge transpositions.
//
// Slides of the place stage can dump a half-edge into a loose vertex, which
// temporarily regrows it; the strip stage therefore reruns between passes.
// A global slide budget of 256*n^2 + 64 (n half-edges) bounds the total work
// and guards the re-processing loops against cycling.

class Reducer {
public:
  explicit Reducer(const KitaevGraph& g) : h_(g) {
    check_valid(g);
    long n = static_cast<long>(half_edges(g).size());
    budget_ = 256 * n * n + 64;
    auto inv = invariants(g);
    genus_ = inv.genus;
    annuli_ = inv.boundary - 1;
  }

  ReduceResult run() {
    strip_vertices();
    place_annuli();
    if (genus_ > 0) consolidate_blocks();
    relabel();
    return {h_, w_};
  }

private:
  KitaevGraph h_;
  MoveWord w_;
  long budget_ = 0;
  long genus_ = 0, annuli_ = 0;

  int rho(int x) const { return h_.rho(x); }
  int rinv(int x) const { return h_.rho.inverse(x); }
  bool is_cilium(int x) const {
    return std::binary_search(h_.cilia.begin(), h_.cilia.end(), x);
  }
  std::vector<int> vertex() const { return h_.rho.cycle_from(h_.pt); }

  void slide(int a, int b) {
    check(--budget_ > 0, "slide budget exceeded");
    KitaevGraph next = apply_slide(h_, a, b);
    check(!(next == h_), "chosen slide has no effect");
    h_ = std::move(next);
    w_.push_back(Move::slide(a, b));
  }

  // Move the distinguished cilium one step along its vertex.  The cilium
  // swap of the slide carries pt to a nearby half-edge; the vertex reshuffles
  // slightly, so callers recompute their state.
  void walk_pt() {
    for (int tries = 0; tries < 8; ++tries) {
      int p = h_.pt, s = rho(p);
      check(s != p, "cannot walk the cilium of a loose vertex");
      int A = kappa(s);
      if (s != kappa(p) && !is_cilium(A) && slide_scenario2(h_, A, p)) {
        slide(A, p);  // forward: cilium swap (s p)
        return;
      }
      // forward step blocked; hop the successor of the cilium's partner back
      // over it instead, whose cilium swap (p b) also moves pt along
      int q = kappa(p), b = rho(q);
      if (slide_scenario1(h_, q, b)) {  // its swap is (kappa(q) b) = (p b)
        slide(q, b);
        return;
      }
      // both directions blocked; displace the half-edge in front of the
      // forward target and retry
      int A2 = rinv(A);
      check(kappa(A2) != p && !is_cilium(kappa(A2)) && !is_cilium(A) &&
                slide_scenario1(h_, A2, A),
            "cilium walk blocked");
      slide(A2, A);
    }
    check(false, "cilium walk did not converge");
  }

  // ---- strip ----------------------------------------------------------

  void strip_vertices() {
    for (;;) {
      auto gamma = half_edges(h_);
      auto verts = h_.rho.cycles_on(gamma);
      auto vd = vertex();
      std::set<int> in_v(vd.begin(), vd.end());
      int a = 0;
      for (const auto& w : verts) {
        if (in_v.count(w.front()) || w.size() < 2) continue;
        for (int x : w)
          if (in_v.count(kappa(x)) && (a == 0 || x < a)) a = x;
      }
      if (a == 0) {
        for (const auto& w : verts)
          check(in_v.count(w.front()) || w.size() == 1, "stripping stalled");
        return;
      }
      strip_one(a);
    }
  }

  // Empty the vertex of `a` into the distinguished one, pivoting around `a`
  // (whose partner lives there): successors of `a` first, then predecessors;
  // the final slide hands the cilium to `a` itself.
  void strip_one(int a) {
    auto w = h_.rho.cycle_from(a);
    int c = 0;
    for (int x : w)
      if (is_cilium(x)) c = x;
    check(c != 0, "vertex without a cilium");
    if (a == c) {
      while (rho(a) != a) slide(a, rho(a));
      return;
    }
    while (rho(a) != c) slide(a, rho(a));
    while (rho(a) != a) slide(kappa(a), rinv(a));
  }

  // ---- place ----------------------------------------------------------

  bool annulus_ok(int x, const std::map<int, int>& pos, int cutoff) const {
    if (rho(x) != x) return false;
    auto f = face_from(h_, x);
    if (f.size() != 3 || f[2] != kappa(x)) return false;
    int y = f[1];
    auto it = pos.find(y);
    if (it == pos.end()) return false;
    if (genus_ == 0 && y == h_.pt) return it->second == 0;
    return it->second >= cutoff;
  }

  bool place_done() const {
    auto L = vertex();
    std::map<int, int> pos;
    for (std::size_t i = 0; i < L.size(); ++i) pos[L[i]] = static_cast<int>(i);
    long k = annuli_ - (genus_ == 0 ? 1 : 0);
    int cutoff = static_cast<int>(L.size() - 3 * k);
    bool pt_bracket = genus_ != 0;
    for (int x : h_.cilia) {
      if (x == h_.pt) continue;
      if (!annulus_ok(x, pos, cutoff)) return false;
      if (genus_ == 0 && face_from(h_, x)[1] == h_.pt) pt_bracket = true;
    }
    return pt_bracket;
  }

  void place_annuli() {
    if (annuli_ == 0) return;
    long n = static_cast<long>(half_edges(h_).size());
    for (long pass = 0; !place_done(); ++pass) {
      check(pass <= 32 * n + 32, "bracket placement did not converge");
      strip_vertices();
      std::vector<int> ann;
      for (int c : h_.cilia)
        if (c != h_.pt) ann.push_back(c);
      int ptx = 0;
      if (genus_ == 0) {
        // the bracket holding pt forms at the annulus whose face already
        // contains it; fall back to the last one until pt settles somewhere
        for (int x : ann) {
          auto f = face_from(h_, x);
          for (std::size_t i = 1; i + 1 < f.size() && ptx == 0; ++i)
            if (f[i] == h_.pt) ptx = x;
          if (ptx != 0) break;
        }
        if (ptx == 0) ptx = ann.back();
      }
      // while any face still needs shortening, defer the bracket pushing:
      // a hop over b and an ejection moving b can be exact inverses
      bool shortening = false;
      for (int x : ann)
        if (loose_cilium(x) && face_from(h_, x).size() > 3) shortening = true;
      // moving the distinguished cilium shuffles the other annuli, so steps
      // blocked by it only request a walk, granted when nothing else moves
      bool moved = false;
      for (int x : ann)
        if (annulus_step(x, x == ptx, shortening) == StepResult::moved)
          moved = true;
      if (!moved && !place_done()) walk_pt();
    }
  }

  bool loose_cilium(int x) const {
    return is_cilium(x) && x != h_.pt && rho(x) == x;
  }

  // True when b heads a finished bracket: the face of some other loose
  // cilium x' reads [x', b, kappa(x')].  A bracket being pushed to the end
  // of the vertex parks as soon as it abuts one of these.
  bool heads_finished_annulus(int b) const {
    int xp = kappa(rho(b));
    if (!loose_cilium(xp)) return false;
    auto f = face_from(h_, xp);
    return f.size() == 3 && f[1] == b;
  }

  enum class StepResult { idle, moved, blocked };

  // One improving move for the annulus at the loose cilium x: shorten its
  // face to [x, y, kappa(x)] by ejecting face elements into other faces,
  // then push the bracket [y, kappa(x), kappa(y)] to the end of the
  // distinguished vertex (for the bracket that keeps pt, wait for pt to
  // reach the face head instead).  `blocked` means only moving the
  // distinguished cilium can help this annulus.
  StepResult annulus_step(int x, bool at_pt, bool shortening) {
    if (!loose_cilium(x)) return StepResult::idle;  // stripping restores it
    auto f = face_from(h_, x);
    int k = static_cast<int>(f.size()) - 2;
    check(k >= 1, "face of a loose cilium is too short");
    int y1 = f[1];
    if (k == 1) {
      if (shortening) return StepResult::idle;  // other faces go first
      if (kappa(x) == h_.pt || (!at_pt && (y1 == h_.pt || kappa(y1) == h_.pt)))
        return StepResult::blocked;  // bracket may not hold the cilium
      if (at_pt)  // finished once pt walks around to the face head
        return y1 == h_.pt ? StepResult::idle : StepResult::blocked;
      int b = rho(kappa(y1));
      if (b == h_.pt || heads_finished_annulus(b))
        return StepResult::idle;  // parked at the end of the vertex
      if (is_cilium(b) || !slide_scenario1(h_, kappa(y1), b))
        return StepResult::blocked;
      slide(kappa(y1), b);  // hop the successor over the bracket
      return StepResult::moved;
    }
    // Eject a face element into the face without a loose cilium, which
    // collects the leftovers.  (Ejecting into another annulus face would be
    // zero-sum: those faces must shrink, so the junk would only circulate.)
    // Slides are tried on a copy and kept only if the face really shrinks.
    for (int i = 1; i <= k; ++i) {
      int a = f[i];
      if (a == h_.pt) continue;
      for (int scen = 1; scen <= 2; ++scen) {
        int b = scen == 1 ? rho(a) : rinv(kappa(a));
        if (b == h_.pt || is_cilium(b) || is_cilium(kappa(a))) continue;
        bool legal =
            scen == 1 ? slide_scenario1(h_, a, b) : slide_scenario2(h_, a, b);
        if (!legal) continue;
        KitaevGraph t = apply_slide(h_, a, b);
        if (face_from(t, x).size() >= f.size()) continue;
        bool good = true;
        for (int e : face_from(t, a))
          if (is_cilium(e) && e != t.pt && t.rho(e) == e) good = false;
        if (!good) continue;
        slide(a, b);
        return StepResult::moved;
      }
    }
    return StepResult::blocked;  // no ejection until pt moves out of the way
  }

  // ---- blocks ---------------------------------------------------------

  void consolidate_blocks() {
    int nblocks = 0;
    while (nblocks < genus_) {
      auto L = vertex();
      int front = static_cast<int>(L.size()) - 3 * static_cast<int>(annuli_);
      check(front == 4 * genus_, "front region has the wrong size");
      int cursor = 4 * nblocks;
      std::map<int, int> pos;
      for (std::size_t i = 0; i < L.size(); ++i) pos[L[i]] = static_cast<int>(i);
      int av = L[cursor];
      auto pos_of = [&](int x) {
        auto it = pos.find(x);
        check(it != pos.end(), "half-edge pairs outside the distinguished vertex");
        return it->second;
      };
      int pka = pos_of(kappa(av));
      check(pka > cursor, "cursor half-edge pairs backwards");
      int bv = 0;
      for (int q = cursor + 1; q < pka; ++q)
        if (pos_of(kappa(L[q])) > pka) {
          bv = L[q];
          break;
        }
      check(bv != 0, "no crossing partner at the cursor");
      int kav = kappa(av), kbv = kappa(bv);
      // clear (b .. kappa(a)): debris hops in front of kappa(b)
      while (rho(bv) != kav) slide(bv, rho(bv));
      // clear (a .. b): debris hops to right after kappa(b)
      while (rho(av) != bv) slide(kbv, rinv(bv));
      // clear (kappa(a) .. kappa(b)): hop debris over the block in threes
      while (rho(kav) != kbv) {
        int xj = rinv(kbv);
        slide(bv, xj);
        slide(av, xj);
        slide(kbv, xj);
      }
      ++nblocks;
    }
  }

  // ---- relabel --------------------------------------------------------

  void relabel() {
    KitaevGraph target = standard_graph(static_cast<int>(genus_), static_cast<int>(annuli_));
    if (h_ == target) return;
    auto L = vertex();
    auto T = target.rho.cycle_from(target.pt);
    check(L.size() == T.size(), "vertex size mismatch at relabeling");
    std::map<int, int> sigma;
    for (std::size_t i = 0; i < L.size(); ++i) sigma[L[i]] = T[i];
    for (int c : h_.cilia)
      if (c != h_.pt) sigma[c] = kappa(sigma.at(kappa(c)));
    for (auto [k, v] : sigma)
      check(sigma.count(kappa(k)) && sigma.at(kappa(k)) == kappa(v),
            "relabeling is not pairing-compatible");
    // factor sigma into edge reversals and adjacent edge swaps
    std::map<int, int> slot_to;
    std::set<int> flipped;
    int maxslot = 0;
    for (auto [k, v] : sigma) {
      if (k % 2 == 0) continue;
      int m = (k + 1) / 2;
      int t = (v % 2 == 1) ? (v + 1) / 2 : v / 2;
      if (v % 2 == 0) flipped.insert(m);
      slot_to[m] = t;
      maxslot = std::max({maxslot, m, t});
    }
    MoveWord moves;
    for (int m : flipped) moves.push_back(Move::reversal(m));
    std::set<int> freetargets;
    for (int m = 1; m <= maxslot; ++m) freetargets.insert(m);
    for (auto [k, v] : slot_to) freetargets.erase(v);
    for (int m = 1; m <= maxslot; ++m)
      if (!slot_to.count(m)) {
        slot_to[m] = *freetargets.begin();
        freetargets.erase(freetargets.begin());
      }
    std::vector<int> arr(maxslot + 1);
    for (int i = 0; i <= maxslot; ++i) arr[i] = i;
    for (int p = 1; p <= maxslot; ++p) {
      int q = p;
      while (slot_to.at(arr[q]) != p) {
        ++q;
        check(q <= maxslot, "relabeling decomposition lost a slot");
      }
      for (; q > p; --q) {
        std::swap(arr[q], arr[q - 1]);
        moves.push_back(Move::permutation(q - 1));
      }
    }
    for (const Move& m : moves) {
      h_ = apply_move(h_, m);
      w_.push_back(m);
    }
    check(h_ == target, "relabeling did not produce the reference form");
  }
};

}  // namespace detail

// Rewrite `g` into the reference graph of its surface.  The returned word
// replays on `g` to give exactly the returned graph.
inline ReduceResult reduce_to_standard(const KitaevGraph& g) {
  return detail::Reducer(g).run();
}

}  // namespace kitaev::graphs
